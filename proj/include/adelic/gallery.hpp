#ifndef ADELIC_GALLERY_HPP
#define ADELIC_GALLERY_HPP

#include <utility>

#include "adelic/bundle.hpp"

namespace adelic {

/* (Q^n, |.|_2): identity Gram, no twists. */
bundle standard_bundle(unsigned n);

/* The hyperplane x_1 + ... + x_{n+1} = 0 in the basis (e_i - e_{n+1}):
 * Gram = I + ones, no twists. */
bundle root_lattice_an(unsigned n);

/* Rank-2 bundle with two weight-1/2 twisted classes at p = 5 carrying
 * norms max(|x|, 5^q |x + eps*y|); requires 5^{2q} > 2 (exact check). */
bundle counterexample_eq(const mpq_class& q);

/* Certificate for the explicit large-minimum construction. */
struct mh_certificate {
    unsigned n = 0;
    mpq_class epsilon;
    mat_q m;                      // (i+j)!! matrix, every minor nonzero
    mpz_class max_abs_minor;
    mpz_class p;                  // smallest prime > max |minor|
    std::vector<mpq_class> exponents;  // dyadic c_i with sqrt(i)(1-eps) < p^{c_i} <= sqrt(i)
    exact_pos_real q_invariant;   // p^{(c_1+...+c_n)/n}
};

/* Doubly-factorial matrix construction: one weight-1 twist at the chosen
 * prime with left shifts c_i.  Deterministic in (n, epsilon). */
std::pair<bundle, mh_certificate> mh_construct(unsigned n, const mpq_class& epsilon,
                                               unsigned minor_check_cap = 6);

struct mh_sample_report {
    bool basis_height_one = false;     // H(e_1) = 1 exactly
    bool box_min_at_least_one = false; // every searched vector has height >= 1
    exact_pos_real min_found;
    std::vector<mpq_class> min_witness;
    unsigned long candidates = 0;
    bool support_bound_holds = false;  // H(x) >= p^{-c_t} sqrt(t) on the sample box
    std::vector<long> support_bound_violation;  // empty when none
};

mh_sample_report mh_sample_check(const bundle& b, const mh_certificate& cert, unsigned radius,
                                 unsigned denom_bound = 4, unsigned long node_cap = 20000000);

mpz_class double_factorial(unsigned long m);

/* Harmonic number H_n = 1 + 1/2 + ... + 1/n. */
mpq_class harmonic(unsigned n);

}  // namespace adelic

#endif
