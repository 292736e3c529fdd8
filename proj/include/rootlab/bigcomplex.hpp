#pragma once

#include <string>
#include <utility>

#include "rootlab/bigreal.hpp"

namespace rootlab {

/// Arbitrary-precision complex number built from two BigReals. Arithmetic
/// with im == 0 stays exactly real (no spurious imaginary rounding): every
/// formula below produces an exact 0 imaginary part from exact 0 inputs.
class BigComplex {
 public:
  BigComplex() = default;
  explicit BigComplex(Precision p) : re_(p), im_(p) {}
  BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {}
  BigComplex(long re, Precision p) : re_(re, p), im_(p) {}
  /// Embed a real value (imaginary part exact zero at the same precision).
  explicit BigComplex(const BigReal& re)
      : re_(re), im_(BigReal(Precision(16))) {
    mpfr_set_prec(im_.raw(), re.precision_bits());
    mpfr_set_zero(im_.raw(), 1);
  }

  const BigReal& real() const { return re_; }
  const BigReal& imag() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

  friend BigComplex operator-(const BigComplex& a) { return {-a.re_, -a.im_}; }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigReal d = b.re_ * b.re_ + b.im_ * b.im_;
    return {(a.re_ * b.re_ + a.im_ * b.im_) / d,
            (a.im_ * b.re_ - a.re_ * b.im_) / d};
  }

  friend BigComplex operator+(const BigComplex& a, long b) { return {a.re_ + b, a.im_}; }
  friend BigComplex operator+(long a, const BigComplex& b) { return {a + b.re_, b.im_}; }
  friend BigComplex operator-(const BigComplex& a, long b) { return {a.re_ - b, a.im_}; }
  friend BigComplex operator-(long a, const BigComplex& b) { return {a - b.re_, -b.im_}; }
  friend BigComplex operator*(const BigComplex& a, long b) { return {a.re_ * b, a.im_ * b}; }
  friend BigComplex operator*(long a, const BigComplex& b) { return {a * b.re_, a * b.im_}; }
  friend BigComplex operator/(const BigComplex& a, long b) { return {a.re_ / b, a.im_ / b}; }
  friend BigComplex operator/(long a, const BigComplex& b) {
    return BigComplex(BigReal(a, Precision(16))) / b;  // promoted by division
  }

  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const BigComplex& a, const BigComplex& b) { return !(a == b); }

  friend BigReal abs(const BigComplex& a) { return hypot(a.re_, a.im_); }

  friend BigComplex exp(const BigComplex& a) {
    BigReal m = exp(a.re_);
    return {m * cos(a.im_), m * sin(a.im_)};
  }
  /// Principal branch.
  friend BigComplex log(const BigComplex& a) {
    return {log(abs(a)), atan2(a.im_, a.re_)};
  }
  friend BigComplex pow(const BigComplex& base, const BigComplex& expo) {
    return exp(expo * log(base));
  }

  std::string to_string() const {
    return re_.to_string() + (im_.sign() < 0 ? "" : "+") + im_.to_string() + "i";
  }

 private:
  BigReal re_, im_;
};

BigReal abs(const BigComplex& a);
BigComplex exp(const BigComplex& a);
BigComplex log(const BigComplex& a);
BigComplex pow(const BigComplex& base, const BigComplex& expo);

}  // namespace rootlab
