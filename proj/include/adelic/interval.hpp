#ifndef ADELIC_INTERVAL_HPP
#define ADELIC_INTERVAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace adelic {

/* Immutable arbitrary-precision float (RAII over mpfr_t). */
class big_float {
  public:
    big_float() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit big_float(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    big_float(const big_float& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    big_float(big_float&& o) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }
    big_float& operator=(big_float o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~big_float() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(v_, rnd); }
    int sign() const { return mpfr_sgn(v_); }
    int cmp(const big_float& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const big_float& o) const { return cmp(o) < 0; }
    bool operator<=(const big_float& o) const { return cmp(o) <= 0; }
    std::string str(size_t digits = 20) const;

  private:
    mpfr_t v_;
};

/* Closed interval [lo, hi] with outward (directed) rounding on every
 * operation; the represented real is always contained. */
class f_interval {
  public:
    f_interval() = default;
    f_interval(big_float lo, big_float hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

    static f_interval exactly(const mpq_class& q, mpfr_prec_t prec);
    static f_interval log_of(const mpz_class& n, mpfr_prec_t prec);  // n >= 1

    f_interval& add(const f_interval& o);
    /* Multiply by an exact rational scalar (sign-aware). */
    f_interval scaled(const mpq_class& c, mpfr_prec_t prec) const;
    f_interval exp(mpfr_prec_t prec) const;

    const big_float& lo() const { return lo_; }
    const big_float& hi() const { return hi_; }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    /* -1, 0 (straddles), +1 */
    int sign() const { return lo_.sign() > 0 ? 1 : (hi_.sign() < 0 ? -1 : 0); }

  private:
    big_float lo_, hi_;
};

}  // namespace adelic

#endif
