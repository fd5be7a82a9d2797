#ifndef ADELIC_MULTINOMIAL_HPP
#define ADELIC_MULTINOMIAL_HPP

#include <gmpxx.h>

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace adelic {

struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* lcm(1, 2, ..., m) = prod_{p <= m} p^{floor(log_p m)}. */
mpz_class lcm_upto(unsigned long m);

/* Number of weak compositions of l into n parts, C(l+n-1, n-1). */
mpz_class composition_count(unsigned n, unsigned l);

/* Visit all (i_1,...,i_n) with sum l, in descending lexicographic order,
 * starting at (l, 0, ..., 0). */
void for_each_composition(unsigned n, unsigned l,
                          const std::function<void(const std::vector<unsigned>&)>& visit);

/* l! / (i_1! ... i_n!); requires sum(parts) == l. */
mpz_class multinomial(unsigned l, const std::vector<unsigned>& parts);

struct prime_max {
    mpz_class p;
    mpz_class max_valuation;            // max over compositions of v_p(l!/i!)
    std::vector<unsigned> arg_composition;  // first attaining it in enumeration order
};

struct pnl_brute_result {
    mpz_class value;
    std::vector<prime_max> per_prime;  // filled when requested
};

/* lcm of all multinomial coefficients l!/i! over compositions of l into n
 * parts, by direct enumeration.  When with_prime_table is set, also the
 * per-prime maximal valuations (these reassemble to the factorization of
 * the result).  Throws cap_exceeded when the composition count exceeds
 * composition_cap. */
pnl_brute_result p_bruteforce(unsigned n, unsigned l, bool with_prime_table = false,
                              unsigned long composition_cap = 5000000);

/* Product formula: prod_{j=1}^{n-1} lcm(1,...,[(l+n-1)/j]) / (l+j),
 * evaluated as an exact rational; its denominator must clear. */
mpz_class p_closed_form(unsigned n, unsigned l);

struct chain_values {
    mpz_class q, r, s;
    bool all_equal() const { return q == r && r == s; }
};

/* q = ((l+n-1)!/l!) p(n,l) with p by brute force; r = prod_k d((l+n-1)/k);
 * s = lcm of products of strictly decreasing (n-1)-tuples in [1, l+n-1]. */
chain_values chain_qrs(unsigned n, unsigned l, unsigned long composition_cap = 5000000,
                       unsigned long tuple_cap = 1000000);

struct divisibility_result {
    bool holds_step;   // q(n,l-1) | q(n,l)
    bool holds_cross;  // q(n,l) | d(1 + l/(n-1)) * q(n-1, l+1)
    mpz_class quotient_step, quotient_cross;
};

divisibility_result lemma_divisibilities(unsigned n, unsigned l,
                                         unsigned long composition_cap = 5000000);

struct bounds_result {
    bool lower_holds;  // n^l <= p(n,l) * C(l+n-1, n-1)
    bool upper_holds;  // p(n,l)^2 <= n^{3l}
};

bounds_result bounds_check(unsigned n, unsigned l, const mpz_class& p_value);
bounds_result bounds_check(unsigned n, unsigned l);

/* d(m)^2 <= 8^m for every m <= x_max (Chebyshev psi bound in integer
 * form); returns the first failing m, or 0 when all pass. */
unsigned long psi_bound_check(unsigned long x_max);

}  // namespace adelic

#endif
