#include "adelic/multinomial.hpp"

#include "adelic/rational.hpp"

namespace adelic {

mpz_class lcm_upto(unsigned long m) {
    if (m < 1)
        throw std::invalid_argument("lcm_upto: m >= 1 required");
    mpz_class d = 1, pw, next;
    for (unsigned long p : primes_upto(m)) {
        pw = p;
        while ((next = pw * p) <= m)
            pw = next;
        d *= pw;
    }
    return d;
}

mpz_class composition_count(unsigned n, unsigned l) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), l + n - 1, n - 1);
    return c;
}

void for_each_composition(unsigned n, unsigned l,
                          const std::function<void(const std::vector<unsigned>&)>& visit) {
    std::vector<unsigned> parts(n, 0);
    parts[0] = l;
    while (true) {
        visit(parts);
        // next composition in descending lexicographic order: decrement the
        // rightmost positive entry among the first n-1, move the tail to it
        int k = static_cast<int>(n) - 2;
        while (k >= 0 && parts[k] == 0)
            --k;
        if (k < 0)
            return;
        unsigned tail = parts[n - 1];
        parts[n - 1] = 0;
        parts[k] -= 1;
        parts[k + 1] = tail + 1;
    }
}

mpz_class multinomial(unsigned l, const std::vector<unsigned>& parts) {
    unsigned long total = 0;
    for (unsigned v : parts)
        total += v;
    if (total != l)
        throw std::invalid_argument("multinomial: parts must sum to l");
    mpz_class m;
    mpz_fac_ui(m.get_mpz_t(), l);
    mpz_class f;
    for (unsigned v : parts) {
        if (v < 2)
            continue;
        mpz_fac_ui(f.get_mpz_t(), v);
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), f.get_mpz_t());
    }
    return m;
}

pnl_brute_result p_bruteforce(unsigned n, unsigned l, bool with_prime_table,
                              unsigned long composition_cap) {
    if (n < 1 || l < 1)
        throw std::invalid_argument("p_bruteforce: n, l >= 1 required");
    mpz_class count = composition_count(n, l);
    if (count > composition_cap)
        throw cap_exceeded("p_bruteforce(" + std::to_string(n) + "," + std::to_string(l) +
                           "): " + count.get_str() + " compositions exceed the cap");

    std::vector<mpz_class> fact(l + 1);
    fact[0] = 1;
    for (unsigned k = 1; k <= l; ++k)
        fact[k] = fact[k - 1] * k;

    pnl_brute_result out;
    out.value = 1;

    std::vector<mpz_class> primes;
    std::vector<mpz_class> fact_val;  // v_p(l!) per prime
    if (with_prime_table) {
        for (unsigned long p : primes_upto(l)) {
            primes.emplace_back(p);
            fact_val.push_back(factorial_valuation(l, p));
        }
        out.per_prime.resize(primes.size());
        for (size_t i = 0; i < primes.size(); ++i) {
            out.per_prime[i].p = primes[i];
            out.per_prime[i].max_valuation = -1;
        }
    }

    mpz_class coeff;
    for_each_composition(n, l, [&](const std::vector<unsigned>& parts) {
        coeff = fact[l];
        for (unsigned v : parts)
            if (v >= 2)
                mpz_divexact(coeff.get_mpz_t(), coeff.get_mpz_t(), fact[v].get_mpz_t());
        mpz_lcm(out.value.get_mpz_t(), out.value.get_mpz_t(), coeff.get_mpz_t());
        if (with_prime_table) {
            for (size_t i = 0; i < primes.size(); ++i) {
                mpz_class v = fact_val[i];
                for (unsigned part : parts)
                    if (part >= 2)
                        v -= factorial_valuation(part, primes[i]);
                if (v > out.per_prime[i].max_valuation) {
                    out.per_prime[i].max_valuation = v;
                    out.per_prime[i].arg_composition = parts;
                }
            }
        }
    });
    return out;
}

mpz_class p_closed_form(unsigned n, unsigned l) {
    if (n < 1 || l < 1)
        throw std::invalid_argument("p_closed_form: n, l >= 1 required");
    mpq_class prod = 1;
    for (unsigned j = 1; j + 1 <= n; ++j) {
        unsigned long arg = (l + n - 1) / j;
        mpq_class term(lcm_upto(arg), mpz_class(l + j));
        term.canonicalize();
        prod *= term;
    }
    if (prod.get_den() != 1)
        throw arithmetic_error("p_closed_form: product is not integral (bug)");
    return prod.get_num();
}

namespace {

mpz_class q_of(unsigned n, unsigned l, unsigned long composition_cap) {
    if (n == 1)
        return 1;
    mpz_class rising = 1;  // (l+n-1)!/l!
    for (unsigned j = 1; j <= n - 1; ++j)
        rising *= l + j;
    return rising * p_bruteforce(n, l, false, composition_cap).value;
}

}  // namespace

chain_values chain_qrs(unsigned n, unsigned l, unsigned long composition_cap,
                       unsigned long tuple_cap) {
    if (l < 1)
        throw std::invalid_argument("chain_qrs: l >= 1 required");
    if (n < 2)
        return {1, 1, 1};

    chain_values out;
    out.q = q_of(n, l, composition_cap);

    out.r = 1;
    for (unsigned k = 1; k <= n - 1; ++k)
        out.r *= lcm_upto((l + n - 1) / k);

    // s: lcm of j_1*...*j_{n-1} over strictly decreasing tuples in [1, l+n-1]
    unsigned top = l + n - 1;
    mpz_class tuples;
    mpz_bin_uiui(tuples.get_mpz_t(), top, n - 1);
    if (tuples > tuple_cap)
        throw cap_exceeded("chain_qrs: " + tuples.get_str() + " tuples exceed the cap");
    out.s = 1;
    std::vector<unsigned> j(n - 1);
    // combinations {j_1 > j_2 > ... > j_{n-1}} visited as increasing subsets
    std::vector<unsigned> c(n - 1);
    for (unsigned i = 0; i < n - 1; ++i)
        c[i] = i + 1;
    while (true) {
        mpz_class prod = 1;
        for (unsigned v : c)
            prod *= v;
        mpz_lcm(out.s.get_mpz_t(), out.s.get_mpz_t(), prod.get_mpz_t());
        // next combination of size n-1 from [1, top]
        int i = static_cast<int>(n) - 2;
        while (i >= 0 && c[i] == top - (n - 2 - i))
            --i;
        if (i < 0)
            break;
        ++c[i];
        for (unsigned k = i + 1; k < n - 1; ++k)
            c[k] = c[k - 1] + 1;
    }
    return out;
}

divisibility_result lemma_divisibilities(unsigned n, unsigned l, unsigned long composition_cap) {
    if (n < 2 || l < 2)
        throw std::invalid_argument("lemma_divisibilities: n, l >= 2 required");
    divisibility_result out;

    mpz_class q_nl = q_of(n, l, composition_cap);
    mpz_class q_prev = q_of(n, l - 1, composition_cap);
    out.holds_step = mpz_divisible_p(q_nl.get_mpz_t(), q_prev.get_mpz_t()) != 0;
    if (out.holds_step)
        out.quotient_step = q_nl / q_prev;

    // d(1 + l/(n-1)) has integer argument floor(1 + l/(n-1))
    unsigned long arg = 1 + l / (n - 1);
    mpz_class rhs = lcm_upto(arg) * q_of(n - 1, l + 1, composition_cap);
    out.holds_cross = mpz_divisible_p(rhs.get_mpz_t(), q_nl.get_mpz_t()) != 0;
    if (out.holds_cross)
        out.quotient_cross = rhs / q_nl;
    return out;
}

bounds_result bounds_check(unsigned n, unsigned l, const mpz_class& p_value) {
    bounds_result out;
    mpz_class n_pow_l, lhs;
    mpz_ui_pow_ui(n_pow_l.get_mpz_t(), n, l);
    lhs = p_value * composition_count(n, l);
    out.lower_holds = n_pow_l <= lhs;
    mpz_class n_pow_3l;
    mpz_ui_pow_ui(n_pow_3l.get_mpz_t(), n, 3ul * l);
    out.upper_holds = p_value * p_value <= n_pow_3l;
    return out;
}

bounds_result bounds_check(unsigned n, unsigned l) {
    return bounds_check(n, l, p_closed_form(n, l));
}

unsigned long psi_bound_check(unsigned long x_max) {
    if (x_max < 1)
        throw std::invalid_argument("psi_bound_check: x_max >= 1 required");
    mpz_class d = 1, sq, bound;
    for (unsigned long m = 1; m <= x_max; ++m) {
        mpz_class mz = m;
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), mz.get_mpz_t());
        sq = d * d;
        bound = 1;
        mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), 3 * m);
        if (sq > bound)
            return m;
    }
    return 0;
}

}  // namespace adelic
