#include "adelic/gallery.hpp"

#include <algorithm>

#include "adelic/multinomial.hpp"

namespace adelic {

bundle standard_bundle(unsigned n) {
    return make_bundle(n, mat_q(), {});
}

bundle root_lattice_an(unsigned n) {
    if (n < 1)
        throw bundle_error("root_lattice_an: n >= 1 required");
    mat_q gram(n, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            gram.at(i, j) = (i == j) ? 2 : 1;
    return make_bundle(n, std::move(gram), {});
}

bundle counterexample_eq(const mpq_class& q) {
    if (q <= 0)
        throw bundle_error("counterexample_eq: q > 0 required");
    // 5^{2q} > 2, i.e. 5^{2 num} > 2^{den}, must hold exactly
    auto cmp = exact_pos_real::prime_power(5, 2 * q).compare(exact_pos_real::from_rational(2));
    if (cmp.ord != ordering::greater)
        throw bundle_error("counterexample_eq: requires 5^{2q} > 2, q=" + rat_str(q) +
                           " is too small");
    std::vector<local_twist> twists;
    for (int eps : {+1, -1}) {
        local_twist t;
        t.p = 5;
        t.weight = mpq_class(1, 2);
        t.d_left = {0, -q};
        t.m = mat_q(2, 2);
        t.m.at(0, 0) = 1;
        t.m.at(1, 0) = 1;
        t.m.at(1, 1) = eps;
        t.d_right = {0, 0};
        twists.push_back(std::move(t));
    }
    return make_bundle(2, mat_q(), std::move(twists));
}

mpz_class double_factorial(unsigned long m) {
    mpz_class r;
    mpz_2fac_ui(r.get_mpz_t(), m);
    return r;
}

mpq_class harmonic(unsigned n) {
    mpq_class h = 0;
    for (unsigned k = 1; k <= n; ++k)
        h += mpq_class(1, k);
    return h;
}

namespace {

/* floor(log_p(i^{2^{t-1}})): largest k with p^k <= i^{2^{t-1}}. */
unsigned long dyadic_floor_log(const mpz_class& p, unsigned i, unsigned t) {
    mpz_class target;
    mpz_ui_pow_ui(target.get_mpz_t(), i, 1ul << (t - 1));
    unsigned long k = 0;
    mpz_class pw = 1;
    while (pw * p <= target) {
        pw *= p;
        ++k;
    }
    return k;
}

/* Exact check p^{k/2^t} > sqrt(i) (1-eps), cleared of roots:
 * p^{2k} * den^{2^{t+1}} > i^{2^t} * num^{2^{t+1}} with 1-eps = num/den. */
bool window_lower_ok(const mpz_class& p, unsigned long k, unsigned t, unsigned i,
                     const mpq_class& one_minus_eps) {
    mpz_class lhs, rhs, tmp;
    mpz_pow_ui(lhs.get_mpz_t(), p.get_mpz_t(), 2 * k);
    mpz_pow_ui(tmp.get_mpz_t(), one_minus_eps.get_den().get_mpz_t(), 1ul << (t + 1));
    lhs *= tmp;
    mpz_ui_pow_ui(rhs.get_mpz_t(), i, 1ul << t);
    mpz_pow_ui(tmp.get_mpz_t(), one_minus_eps.get_num().get_mpz_t(), 1ul << (t + 1));
    rhs *= tmp;
    return lhs > rhs;
}

}  // namespace

std::pair<bundle, mh_certificate> mh_construct(unsigned n, const mpq_class& epsilon,
                                               unsigned minor_check_cap) {
    if (n < 2)
        throw bundle_error("mh_construct: n >= 2 required");
    if (n > minor_check_cap)
        throw cap_exceeded("mh_construct: exhaustive minor check capped at n=" +
                           std::to_string(minor_check_cap));
    // 0 < eps < 1 - sqrt(1 - 1/n), i.e. (1-eps)^2 > 1 - 1/n
    mpq_class one_minus = 1 - epsilon;
    if (epsilon <= 0 || one_minus * one_minus <= 1 - mpq_class(1, n))
        throw bundle_error("mh_construct: epsilon out of range");

    mh_certificate cert;
    cert.n = n;
    cert.epsilon = epsilon;
    cert.m = mat_q(n, n);
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j)
            cert.m.at(i - 1, j - 1) = mpq_class(double_factorial(i + j));

    // every minor of every order must be nonzero
    cert.max_abs_minor = 0;
    for (unsigned k = 1; k <= n; ++k)
        for (const auto& rows : subsets_of_size(n, k))
            for (const auto& cols : subsets_of_size(n, k)) {
                mpq_class d = cert.m.submatrix(rows, cols).determinant();
                if (d == 0)
                    throw bundle_error("mh_construct: vanishing minor");
                mpz_class a = abs(d.get_num());
                if (a > cert.max_abs_minor)
                    cert.max_abs_minor = a;
            }
    mpz_nextprime(cert.p.get_mpz_t(), cert.max_abs_minor.get_mpz_t());

    cert.exponents.assign(n, 0);
    for (unsigned i = 2; i <= n; ++i) {
        bool found = false;
        for (unsigned t = 1; t <= 40 && !found; ++t) {
            unsigned long k = dyadic_floor_log(cert.p, i, t);
            if (k == 0)
                continue;
            if (window_lower_ok(cert.p, k, t, i, one_minus)) {
                cert.exponents[i - 1] = mpq_class(k, mpz_class(1) << t);
                cert.exponents[i - 1].canonicalize();
                found = true;
            }
        }
        if (!found)
            throw bundle_error("mh_construct: no dyadic exponent in the window");
    }
    for (unsigned i = 1; i < n; ++i)
        if (!(cert.exponents[i - 1] < cert.exponents[i]))
            throw bundle_error("mh_construct: exponents fail to increase (bug)");

    mpq_class total = 0;
    for (const auto& c : cert.exponents)
        total += c;
    cert.q_invariant = exact_pos_real::prime_power(cert.p, total / n);

    local_twist t;
    t.p = cert.p;
    t.weight = 1;
    t.d_left = cert.exponents;
    t.m = cert.m;
    t.d_right = vec_q(n, 0);
    bundle b = make_bundle(n, mat_q(), {std::move(t)});
    return {std::move(b), std::move(cert)};
}

mh_sample_report mh_sample_check(const bundle& b, const mh_certificate& cert, unsigned radius,
                                 unsigned denom_bound, unsigned long node_cap) {
    mh_sample_report rep;
    const exact_pos_real one = exact_pos_real::one();

    vec_q e1(b.dim, 0);
    e1[0] = 1;
    height_result h1 = height(b, e1);
    rep.basis_height_one = h1.exact && h1.value().equals(one);

    auto found = min_search(b, radius, denom_bound, node_cap);
    if (found) {
        rep.min_found = found->value;
        rep.min_witness = found->witness;
        rep.candidates = found->candidates;
        rep.box_min_at_least_one =
            found->certified && found->value.compare(one).ord != ordering::less;
    }

    // support bound H(x) >= p^{-c_t} sqrt(t) on a small sample box
    rep.support_bound_holds = true;
    unsigned r = std::min(radius, 2u);
    std::vector<long> x(b.dim, -static_cast<long>(r));
    x[b.dim - 1] -= 1;
    while (rep.support_bound_holds) {
        size_t i = b.dim - 1;
        bool done = false;
        while (true) {
            if (x[i] < static_cast<long>(r)) {
                ++x[i];
                break;
            }
            x[i] = -static_cast<long>(r);
            if (i == 0) {
                done = true;
                break;
            }
            --i;
        }
        if (done)
            break;
        unsigned t = 0;
        for (long v : x)
            if (v != 0)
                ++t;
        if (t == 0)
            continue;
        vec_q xq(b.dim);
        for (size_t j = 0; j < b.dim; ++j)
            xq[j] = x[j];
        exact_pos_real bound = exact_pos_real::prime_power(cert.p, -cert.exponents[t - 1])
                                   .mul(exact_pos_real::from_rational(t).pow(mpq_class(1, 2)));
        height_result h = height(b, xq);
        if (!h.exact || h.value().compare(bound).ord == ordering::less) {
            rep.support_bound_holds = false;
            rep.support_bound_violation = x;
        }
    }
    return rep;
}

}  // namespace adelic
