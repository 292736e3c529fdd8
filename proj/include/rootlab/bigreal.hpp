#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>
#include <utility>

#include "rootlab/error.hpp"

namespace rootlab {

/// Working precision in significant decimal digits. All arithmetic performed
/// on values created at a given Precision is deterministic (MPFR,
/// round-to-nearest).
struct Precision {
  long digits = 16;

  explicit Precision(long d = 16) : digits(d) {
    if (d < 16) fail(ErrorKind::ParseError, "precision must be at least 16 digits");
  }

  /// Mantissa bits carrying `digits` significant decimal digits.
  mpfr_prec_t bits() const {
    // ceil(digits * log2(10)); the rational 146/44 < log2(10) < 1079325/324911
    // dance is avoided by computing in long double, exact for sane digit counts.
    long double b = static_cast<long double>(digits) * 3.32192809488736234787L;
    auto p = static_cast<mpfr_prec_t>(b);
    if (static_cast<long double>(p) < b) ++p;
    return p < MPFR_PREC_MIN ? MPFR_PREC_MIN : p;
  }
};

/// Arbitrary-precision real number. Value-semantic wrapper around mpfr_t;
/// every value carries its own precision, binary operations promote to the
/// wider operand. Rounding is always to nearest.
class BigReal {
 public:
  BigReal() {
    mpfr_init2(v_, 54);
    mpfr_set_nan(v_);
  }
  explicit BigReal(Precision p) {
    mpfr_init2(v_, p.bits());
    mpfr_set_zero(v_, 1);
  }
  BigReal(long value, Precision p) {
    mpfr_init2(v_, p.bits());
    mpfr_set_si(v_, value, MPFR_RNDN);
  }
  BigReal(int value, Precision p) : BigReal(static_cast<long>(value), p) {}
  BigReal(double value, Precision p) {
    mpfr_init2(v_, p.bits());
    mpfr_set_d(v_, value, MPFR_RNDN);
  }

  BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  BigReal& operator=(const BigReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigReal& operator=(BigReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigReal() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t precision_bits() const { return mpfr_get_prec(v_); }
  /// Decimal digits faithfully carried by this value's mantissa.
  long precision_digits() const {
    return static_cast<long>(static_cast<long double>(precision_bits()) /
                             3.32192809488736234787L);
  }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Decimal serialization with enough digits for an exact round-trip at
  /// this value's precision.
  std::string to_string() const;
  /// Decimal serialization rounded to `digits` significant digits.
  std::string to_string(int digits) const;

  friend BigReal operator-(const BigReal& a) {
    BigReal r = with_prec(mpfr_get_prec(a.v_));
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

#define ROOTLAB_BIGREAL_BINOP(op, fn, fn_si, si_fn)                       \
  friend BigReal operator op(const BigReal& a, const BigReal& b) {        \
    BigReal r = with_prec(std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_))); \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                      \
    return r;                                                             \
  }                                                                       \
  friend BigReal operator op(const BigReal& a, long b) {                  \
    BigReal r = with_prec(mpfr_get_prec(a.v_));                           \
    fn_si(r.v_, a.v_, b, MPFR_RNDN);                                      \
    return r;                                                             \
  }                                                                       \
  friend BigReal operator op(long a, const BigReal& b) {                  \
    BigReal r = with_prec(mpfr_get_prec(b.v_));                           \
    si_fn(r.v_, a, b.v_, MPFR_RNDN);                                      \
    return r;                                                             \
  }

  ROOTLAB_BIGREAL_BINOP(+, mpfr_add, mpfr_add_si, mpfr_si_add_wrap)
  ROOTLAB_BIGREAL_BINOP(-, mpfr_sub, mpfr_sub_si, mpfr_si_sub)
  ROOTLAB_BIGREAL_BINOP(*, mpfr_mul, mpfr_mul_si, mpfr_si_mul_wrap)
  ROOTLAB_BIGREAL_BINOP(/, mpfr_div, mpfr_div_si, mpfr_si_div)
#undef ROOTLAB_BIGREAL_BINOP

  BigReal& operator+=(const BigReal& o) { return *this = *this + o; }
  BigReal& operator-=(const BigReal& o) { return *this = *this - o; }
  BigReal& operator*=(const BigReal& o) { return *this = *this * o; }
  BigReal& operator/=(const BigReal& o) { return *this = *this / o; }

  // NaN compares false on every predicate, like IEEE.
  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }
  friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) == 0 && !a.is_nan(); }
  friend bool operator!=(const BigReal& a, long b) { return !(a == b); }

#define ROOTLAB_BIGREAL_FN1(name, fn)                 \
  friend BigReal name(const BigReal& a) {             \
    BigReal r = with_prec(mpfr_get_prec(a.v_));       \
    fn(r.v_, a.v_, MPFR_RNDN);                        \
    return r;                                         \
  }
  ROOTLAB_BIGREAL_FN1(abs, mpfr_abs)
  ROOTLAB_BIGREAL_FN1(sqrt, mpfr_sqrt)
  ROOTLAB_BIGREAL_FN1(exp, mpfr_exp)
  ROOTLAB_BIGREAL_FN1(log, mpfr_log)
  ROOTLAB_BIGREAL_FN1(sin, mpfr_sin)
  ROOTLAB_BIGREAL_FN1(cos, mpfr_cos)
  ROOTLAB_BIGREAL_FN1(atan, mpfr_atan)
#undef ROOTLAB_BIGREAL_FN1

  friend BigReal pow(const BigReal& a, const BigReal& b) {
    BigReal r = with_prec(std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_)));
    mpfr_pow(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal hypot(const BigReal& a, const BigReal& b) {
    BigReal r = with_prec(std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_)));
    mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal atan2(const BigReal& y, const BigReal& x) {
    BigReal r = with_prec(std::max(mpfr_get_prec(y.v_), mpfr_get_prec(x.v_)));
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
  }
  /// ln of |x|, usable far outside double exponent range.
  friend BigReal log_abs(const BigReal& a) {
    BigReal t = abs(a);
    mpfr_log(t.v_, t.v_, MPFR_RNDN);
    return t;
  }

  /// 10^e at precision p (e may be any long, e.g. -1733).
  static BigReal pow10(long e, Precision p) {
    BigReal r(p);
    mpfr_set_si(r.v_, 10, MPFR_RNDN);
    mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
  }

 private:
  static BigReal with_prec(mpfr_prec_t bits) {
    BigReal r;
    mpfr_set_prec(r.v_, bits);
    return r;
  }
  // mpfr has no si_add/si_mul; the commuted forms are equivalent.
  static int mpfr_si_add_wrap(mpfr_ptr r, long a, mpfr_srcptr b, mpfr_rnd_t rnd) {
    return mpfr_add_si(r, b, a, rnd);
  }
  static int mpfr_si_mul_wrap(mpfr_ptr r, long a, mpfr_srcptr b, mpfr_rnd_t rnd) {
    return mpfr_mul_si(r, b, a, rnd);
  }

  mpfr_t v_;
};

// Namespace-scope declarations of the in-class friends, so qualified lookup
// (and generic code) can see them.
BigReal abs(const BigReal& a);
BigReal sqrt(const BigReal& a);
BigReal exp(const BigReal& a);
BigReal log(const BigReal& a);
BigReal sin(const BigReal& a);
BigReal cos(const BigReal& a);
BigReal atan(const BigReal& a);
BigReal pow(const BigReal& a, const BigReal& b);
BigReal hypot(const BigReal& a, const BigReal& b);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal log_abs(const BigReal& a);

}  // namespace rootlab
