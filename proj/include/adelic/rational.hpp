#ifndef ADELIC_RATIONAL_HPP
#define ADELIC_RATIONAL_HPP

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace adelic {

struct arithmetic_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Parse "a" or "a/b" into a canonical rational with positive denominator. */
mpq_class parse_rat(const std::string& s);

/* Canonical string form: "a" when the denominator is 1, else "a/b". */
std::string rat_str(const mpq_class& q);

/* p-adic valuation of a nonzero rational (v_p(num) - v_p(den)). */
long valuation(const mpq_class& q, const mpz_class& p);

/* Exponent of p in n (n != 0). */
long valuation(const mpz_class& n, const mpz_class& p);

/* v_p(m!) by Legendre's formula: sum of floor(m/p^k). */
mpz_class factorial_valuation(const mpz_class& m, const mpz_class& p);

/* Full factorization of n >= 1 (trial division, then Pollard-Brent rho
 * with a Miller-Rabin primality gate). */
std::map<mpz_class, long> factor(const mpz_class& n);

/* Factorization of a positive rational: exponent of each prime in num
 * minus den. */
std::map<mpz_class, long> factor(const mpq_class& q);

bool is_prime(const mpz_class& n);

/* Primes <= limit, ascending. */
std::vector<unsigned long> primes_upto(unsigned long limit);

}  // namespace adelic

#endif
