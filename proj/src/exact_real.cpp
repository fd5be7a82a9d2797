#include "adelic/exact_real.hpp"

#include <nlohmann/json.hpp>

namespace adelic {

using ordered_json = nlohmann::ordered_json;

log_form& log_form::operator+=(const log_form& o) {
    unit += o.unit;
    for (const auto& [p, c] : o.logs) {
        auto it = logs.find(p);
        if (it == logs.end()) {
            logs.emplace(p, c);
        } else {
            it->second += c;
            if (it->second == 0)
                logs.erase(it);
        }
    }
    return *this;
}

log_form& log_form::operator-=(const log_form& o) {
    return *this += o.negated();
}

log_form& log_form::scale(const mpq_class& c) {
    if (c == 0) {
        unit = 0;
        logs.clear();
        return *this;
    }
    unit *= c;
    for (auto& [p, e] : logs)
        e *= c;
    return *this;
}

log_form log_form::negated() const {
    log_form out(*this);
    out.scale(-1);
    return out;
}

void log_form::prune() {
    unit.canonicalize();
    for (auto it = logs.begin(); it != logs.end();) {
        it->second.canonicalize();
        it = (it->second == 0) ? logs.erase(it) : std::next(it);
    }
}

f_interval log_form::enclose(mpfr_prec_t prec) const {
    f_interval acc = f_interval::exactly(unit, prec);
    for (const auto& [p, c] : logs)
        acc.add(f_interval::log_of(p, prec).scaled(c, prec));
    return acc;
}

namespace {

/* Decide the sign of sum c_p log p by comparing prod p^{e+} with
 * prod p^{e-} after clearing denominators.  Returns nullopt when the
 * resulting integers would exceed cap_bits. */
std::optional<int> pure_prime_sign(const std::map<mpz_class, mpq_class>& logs,
                                   unsigned long cap_bits) {
    if (logs.empty())
        return 0;
    bool any_pos = false, any_neg = false;
    for (const auto& [p, c] : logs)
        (sgn(c) > 0 ? any_pos : any_neg) = true;
    if (!any_neg)
        return 1;
    if (!any_pos)
        return -1;

    mpz_class den = 1;
    for (const auto& [p, c] : logs)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());

    mpz_class bits_pos = 0, bits_neg = 0;
    std::vector<std::pair<mpz_class, mpz_class>> cleared;
    for (const auto& [p, c] : logs) {
        mpz_class e = c.get_num() * (den / c.get_den());
        cleared.emplace_back(p, e);
        mpz_class width = static_cast<unsigned long>(mpz_sizeinbase(p.get_mpz_t(), 2));
        (e > 0 ? bits_pos : bits_neg) += abs(e) * width;
    }
    if (bits_pos > cap_bits || bits_neg > cap_bits)
        return std::nullopt;

    mpz_class lhs = 1, rhs = 1, pw;
    for (const auto& [p, e] : cleared) {
        mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), mpz_class(abs(e)).get_ui());
        (e > 0 ? lhs : rhs) *= pw;
    }
    return cmp(lhs, rhs) > 0 ? 1 : (cmp(lhs, rhs) < 0 ? -1 : 0);
}

}  // namespace

compare_outcome log_form::sign(const precision_policy& policy) const {
    log_form f(*this);
    f.prune();
    if (f.is_zero())
        return {ordering::equal, 0};

    if (f.unit == 0) {
        auto s = pure_prime_sign(f.logs, policy.integer_cap_bits);
        if (s) {
            // distinct primes are multiplicatively independent, so a
            // nonzero pure form cannot evaluate to zero
            return {*s > 0 ? ordering::greater : ordering::less, 0};
        }
    }

    unsigned bits = policy.start_bits;
    while (true) {
        f_interval enc = f.enclose(bits);
        int s = enc.sign();
        if (s > 0)
            return {ordering::greater, bits};
        if (s < 0)
            return {ordering::less, bits};
        if (bits >= policy.max_bits)
            return {ordering::undecided, bits};
        bits = std::min(bits * 2, policy.max_bits);
    }
}

exact_pos_real exact_pos_real::from_rational(const mpq_class& q) {
    if (q <= 0)
        throw arithmetic_error("exact_pos_real: non-positive rational");
    log_form f;
    for (const auto& [p, e] : factor(q))
        f.logs[p] = e;
    return exact_pos_real(std::move(f));
}

exact_pos_real exact_pos_real::prime_power(const mpz_class& p, const mpq_class& e) {
    if (!is_prime(p))
        throw arithmetic_error("prime_power: " + p.get_str() + " is not prime");
    log_form f;
    if (e != 0)
        f.logs[p] = e;
    return exact_pos_real(std::move(f));
}

exact_pos_real exact_pos_real::euler_power(const mpq_class& r) {
    log_form f;
    f.unit = r;
    return exact_pos_real(std::move(f));
}

exact_pos_real exact_pos_real::normalize(
    const std::vector<std::pair<mpq_class, mpq_class>>& base_exp, const mpq_class& e_exp) {
    log_form f;
    f.unit = e_exp;
    for (const auto& [base, expo] : base_exp) {
        if (base <= 0)
            throw arithmetic_error("normalize: non-positive base " + rat_str(base));
        if (expo == 0 || base == 1)
            continue;
        for (const auto& [p, v] : factor(base)) {
            auto it = f.logs.find(p);
            if (it == f.logs.end())
                f.logs.emplace(p, v * expo);
            else
                it->second += v * expo;
        }
    }
    return exact_pos_real(std::move(f));
}

exact_pos_real exact_pos_real::mul(const exact_pos_real& o) const {
    log_form f(form_);
    f += o.form_;
    return exact_pos_real(std::move(f));
}

exact_pos_real exact_pos_real::div(const exact_pos_real& o) const {
    log_form f(form_);
    f -= o.form_;
    return exact_pos_real(std::move(f));
}

exact_pos_real exact_pos_real::pow(const mpq_class& r) const {
    log_form f(form_);
    f.scale(r);
    return exact_pos_real(std::move(f));
}

compare_outcome exact_pos_real::compare(const exact_pos_real& o,
                                        const precision_policy& policy) const {
    if (form_ == o.form_)
        return {ordering::equal, 0};
    log_form diff(form_);
    diff -= o.form_;
    compare_outcome s = diff.sign(policy);
    // forms differ, so equal cannot come back from the sign test
    return {s.ord == ordering::greater ? ordering::greater
                                       : (s.ord == ordering::less ? ordering::less
                                                                  : ordering::undecided),
            s.bits};
}

enclosure exact_pos_real::to_float(unsigned bits) const {
    if (bits < 32)
        throw arithmetic_error("to_float: need bits >= 32");
    mpfr_prec_t prec = bits + 64;
    while (true) {
        f_interval log_enc = form_.enclose(prec);
        f_interval val = log_enc.exp(prec);
        // relative width check: hi - lo <= 2^{1-bits} * lo
        big_float width(prec), bound(prec);
        mpfr_sub(width.raw(), val.hi().raw(), val.lo().raw(), MPFR_RNDU);
        mpfr_mul_2si(bound.raw(), val.lo().raw(), 1 - static_cast<long>(bits), MPFR_RNDD);
        if (val.lo().sign() > 0 && width.cmp(bound) <= 0)
            return {val.lo(), val.hi()};
        prec *= 2;
    }
}

slope_value slope_value::log_of(const mpq_class& x, const mpq_class& c) {
    return slope_value(exact_pos_real::from_rational(x).pow(c).form());
}

slope_value slope_value::add(const slope_value& o) const {
    log_form f(form_);
    f += o.form_;
    return slope_value(std::move(f));
}

slope_value slope_value::sub(const slope_value& o) const {
    log_form f(form_);
    f -= o.form_;
    return slope_value(std::move(f));
}

slope_value slope_value::scale(const mpq_class& c) const {
    log_form f(form_);
    f.scale(c);
    return slope_value(std::move(f));
}

compare_outcome slope_value::compare(const slope_value& o, const precision_policy& policy) const {
    if (form_ == o.form_)
        return {ordering::equal, 0};
    log_form diff(form_);
    diff -= o.form_;
    compare_outcome s = diff.sign(policy);
    return {s.ord == ordering::greater ? ordering::greater
                                       : (s.ord == ordering::less ? ordering::less
                                                                  : ordering::undecided),
            s.bits};
}

double slope_value::approx() const {
    f_interval enc = form_.enclose(128);
    return (enc.lo().to_double() + enc.hi().to_double()) / 2;
}

std::string log_form_to_json(const log_form& f) {
    ordered_json j;
    j["e"] = rat_str(f.unit);
    ordered_json logs = ordered_json::object();
    for (const auto& [p, c] : f.logs)
        logs[p.get_str()] = rat_str(c);
    j["logs"] = std::move(logs);
    return j.dump();
}

log_form log_form_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    log_form f;
    if (j.contains("e"))
        f.unit = parse_rat(j["e"].get<std::string>());
    if (j.contains("logs")) {
        for (auto& [key, val] : j["logs"].items()) {
            mpz_class p(key);
            if (!is_prime(p))
                throw arithmetic_error("log form: key " + key + " is not prime");
            mpq_class c = parse_rat(val.get<std::string>());
            if (c != 0)
                f.logs[p] = c;
        }
    }
    return f;
}

std::string exact_pos_real::to_json() const {
    return log_form_to_json(form_);
}

exact_pos_real exact_pos_real::from_json(const std::string& text) {
    return exact_pos_real(log_form_from_json(text));
}

std::string slope_value::to_json() const {
    return log_form_to_json(form_);
}

slope_value slope_value::from_json(const std::string& text) {
    return slope_value(log_form_from_json(text));
}

}  // namespace adelic
