#ifndef ADELIC_EXACT_REAL_HPP
#define ADELIC_EXACT_REAL_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adelic/interval.hpp"
#include "adelic/rational.hpp"

namespace adelic {

/* Escalation policy for numeric certification.  Comparisons of pure
 * prime-power forms are decided by big-integer comparison as long as the
 * cleared-denominator powers stay below integer_cap_bits. */
struct precision_policy {
    unsigned start_bits = 128;
    unsigned max_bits = 4096;
    unsigned long integer_cap_bits = 1000000;
};

enum class ordering { less, equal, greater, undecided };

struct compare_outcome {
    ordering ord;
    unsigned bits = 0;  // precision reached when undecided
    bool decided() const { return ord != ordering::undecided; }
};

/* A formal rational combination  unit*1 + sum_p coeff_p*log(p)  over
 * distinct primes p.  Interpreted as a real number it is the log of an
 * ExactPosReal; distinct normalized forms denote distinct reals. */
struct log_form {
    mpq_class unit;
    std::map<mpz_class, mpq_class> logs;

    bool is_zero() const { return unit == 0 && logs.empty(); }
    bool operator==(const log_form& o) const { return unit == o.unit && logs == o.logs; }

    log_form& operator+=(const log_form& o);
    log_form& operator-=(const log_form& o);
    log_form& scale(const mpq_class& c);
    log_form negated() const;

    /* Drop zero coefficients. */
    void prune();

    /* Rigorous enclosure of the represented real. */
    f_interval enclose(mpfr_prec_t prec) const;

    /* Sign of the represented real: exact route for pure prime forms,
     * escalating numeric intervals otherwise. */
    compare_outcome sign(const precision_policy& policy = {}) const;
};

struct enclosure {
    big_float lo, hi;
    double lo_double() const { return lo.to_double(MPFR_RNDD); }
    double hi_double() const { return hi.to_double(MPFR_RNDU); }
};

/* A positive real e^{r0} * prod p_i^{r_i} with rational exponents, stored
 * in log form.  Immutable; all operations are pure. */
class exact_pos_real {
  public:
    exact_pos_real() = default;  // the value 1
    explicit exact_pos_real(log_form f) : form_(std::move(f)) { form_.prune(); }

    static exact_pos_real one() { return {}; }
    static exact_pos_real from_rational(const mpq_class& q);
    static exact_pos_real prime_power(const mpz_class& p, const mpq_class& e);
    static exact_pos_real euler_power(const mpq_class& r);
    /* normalize: factor a list of (positive rational base, rational
     * exponent) pairs, plus an exponent for the base e. */
    static exact_pos_real normalize(const std::vector<std::pair<mpq_class, mpq_class>>& base_exp,
                                    const mpq_class& e_exp = 0);

    exact_pos_real mul(const exact_pos_real& o) const;
    exact_pos_real div(const exact_pos_real& o) const;
    exact_pos_real pow(const mpq_class& r) const;

    compare_outcome compare(const exact_pos_real& o, const precision_policy& policy = {}) const;
    bool equals(const exact_pos_real& o) const { return form_ == o.form_; }
    bool is_one() const { return form_.is_zero(); }

    /* Enclosure with relative width <= 2^{1-bits} (bits >= 32). */
    enclosure to_float(unsigned bits) const;
    double approx() const { return to_float(53).lo_double(); }

    /* Is the e-coefficient zero, i.e. a pure prime-power form? */
    bool pure_prime() const { return form_.unit == 0; }

    const log_form& form() const { return form_; }

    std::string to_json() const;
    static exact_pos_real from_json(const std::string& text);

  private:
    log_form form_;
};

/* An exactly-known slope value r0 + sum r_i log p_i (the log of an
 * exact_pos_real); shares the representation and comparison machinery. */
class slope_value {
  public:
    slope_value() = default;  // zero slope
    explicit slope_value(log_form f) : form_(std::move(f)) { form_.prune(); }

    static slope_value zero() { return {}; }
    /* c * log(x) for a positive rational x. */
    static slope_value log_of(const mpq_class& x, const mpq_class& c = 1);

    slope_value add(const slope_value& o) const;
    slope_value sub(const slope_value& o) const;
    slope_value scale(const mpq_class& c) const;
    slope_value negated() const { return slope_value(form_.negated()); }

    exact_pos_real exp() const { return exact_pos_real(form_); }

    bool equals(const slope_value& o) const { return form_ == o.form_; }
    bool is_zero() const { return form_.is_zero(); }
    compare_outcome compare(const slope_value& o, const precision_policy& policy = {}) const;

    const log_form& form() const { return form_; }
    double approx() const;

    std::string to_json() const;
    static slope_value from_json(const std::string& text);

  private:
    log_form form_;
};

/* Shared JSON shape {"e": "r0", "logs": {"p": "r", ...}}. */
std::string log_form_to_json(const log_form& f);
log_form log_form_from_json(const std::string& text);

}  // namespace adelic

#endif
