#include "adelic/interval.hpp"

#include <vector>

namespace adelic {

std::string big_float::str(size_t digits) const {
    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (!mant.empty() && mant[0] == '-') {
        sign = "-";
        mant = mant.substr(1);
    }
    if (mant.empty())
        return "0";
    return sign + "0." + mant + "e" + std::to_string(e);
}

f_interval f_interval::exactly(const mpq_class& q, mpfr_prec_t prec) {
    big_float lo(prec), hi(prec);
    mpfr_set_q(lo.raw(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi.raw(), q.get_mpq_t(), MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
}

f_interval f_interval::log_of(const mpz_class& n, mpfr_prec_t prec) {
    big_float a(prec), b(prec);
    mpfr_set_z(a.raw(), n.get_mpz_t(), MPFR_RNDD);
    mpfr_log(a.raw(), a.raw(), MPFR_RNDD);
    mpfr_set_z(b.raw(), n.get_mpz_t(), MPFR_RNDU);
    mpfr_log(b.raw(), b.raw(), MPFR_RNDU);
    return {std::move(a), std::move(b)};
}

f_interval& f_interval::add(const f_interval& o) {
    mpfr_add(lo_.raw(), lo_.raw(), o.lo_.raw(), MPFR_RNDD);
    mpfr_add(hi_.raw(), hi_.raw(), o.hi_.raw(), MPFR_RNDU);
    return *this;
}

f_interval f_interval::scaled(const mpq_class& c, mpfr_prec_t prec) const {
    big_float a(prec), b(prec);
    if (sgn(c) >= 0) {
        mpfr_mul_q(a.raw(), lo_.raw(), c.get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(b.raw(), hi_.raw(), c.get_mpq_t(), MPFR_RNDU);
    } else {
        mpfr_mul_q(a.raw(), hi_.raw(), c.get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(b.raw(), lo_.raw(), c.get_mpq_t(), MPFR_RNDU);
    }
    return {std::move(a), std::move(b)};
}

f_interval f_interval::exp(mpfr_prec_t prec) const {
    big_float a(prec), b(prec);
    mpfr_exp(a.raw(), lo_.raw(), MPFR_RNDD);
    mpfr_exp(b.raw(), hi_.raw(), MPFR_RNDU);
    return {std::move(a), std::move(b)};
}

}  // namespace adelic
