#include "adelic/rational.hpp"

#include <algorithm>
#include <cstdint>

namespace adelic {

mpq_class parse_rat(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw arithmetic_error("invalid rational: '" + s + "'");
    if (q.get_den() == 0)
        throw arithmetic_error("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rat_str(const mpq_class& q) {
    return q.get_str();
}

long valuation(const mpz_class& n, const mpz_class& p) {
    if (n == 0)
        throw arithmetic_error("valuation of zero");
    mpz_class cofactor;
    return static_cast<long>(mpz_remove(cofactor.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long valuation(const mpq_class& q, const mpz_class& p) {
    if (q == 0)
        throw arithmetic_error("valuation of zero");
    long v = 0;
    if (q.get_num() != 0)
        v += valuation(mpz_class(q.get_num()), p);
    v -= valuation(mpz_class(q.get_den()), p);
    return v;
}

mpz_class factorial_valuation(const mpz_class& m, const mpz_class& p) {
    mpz_class total = 0, q = m / p;
    while (q > 0) {
        total += q;
        q /= p;
    }
    return total;
}

bool is_prime(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

std::vector<unsigned long> primes_upto(unsigned long limit) {
    std::vector<unsigned long> out;
    if (limit < 2)
        return out;
    std::vector<bool> composite(limit + 1, false);
    for (unsigned long i = 2; i <= limit; ++i) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (unsigned long j = i * i; j <= limit; j += i) {
            composite[j] = true;
            if (j > limit - i)
                break;
        }
    }
    return out;
}

namespace {

/* Pollard-Brent rho; n odd composite, not a prime power of a tiny prime. */
mpz_class rho_factor(const mpz_class& n) {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xad31u);
    while (true) {
        mpz_class y = rng.get_z_range(n - 3) + 2;
        mpz_class c = rng.get_z_range(n - 2) + 1;
        mpz_class x = y, ys = y, d = 1, q = 1;
        unsigned long r = 1;
        const unsigned long step = 128;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = y;
                unsigned long lim = std::min(step, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
            }
            r *= 2;
        }
        if (d == n) {
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                mpz_class diff = abs(x - ys);
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (d != n)
            return d;
    }
}

void factor_into(const mpz_class& n, std::map<mpz_class, long>& out) {
    if (n == 1)
        return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    mpz_class d = rho_factor(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::map<mpz_class, long> factor(const mpz_class& n) {
    if (n <= 0)
        throw arithmetic_error("factor: argument must be positive");
    std::map<mpz_class, long> out;
    mpz_class rest = n;
    static const std::vector<unsigned long> small = primes_upto(100000);
    for (unsigned long p : small) {
        if (rest == 1)
            break;
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_class pz = p;
            long v = valuation(rest, pz);
            out[pz] += v;
            mpz_class pw;
            mpz_pow_ui(pw.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(v));
            rest /= pw;
        }
        if (mpz_class(p) * p > rest)
            break;
    }
    if (rest > 1) {
        if (rest < mpz_class(100000) * 100000)
            out[rest] += 1;  // no small factor and below square of bound
        else
            factor_into(rest, out);
    }
    return out;
}

std::map<mpz_class, long> factor(const mpq_class& q) {
    if (q <= 0)
        throw arithmetic_error("factor: argument must be positive");
    std::map<mpz_class, long> out = factor(mpz_class(q.get_num()));
    for (auto& [p, e] : factor(mpz_class(q.get_den()))) {
        out[p] -= e;
        if (out[p] == 0)
            out.erase(p);
    }
    return out;
}

}  // namespace adelic
