#pragma once

#include <complex>

#include "rootlab/bigcomplex.hpp"
#include "rootlab/bigreal.hpp"

namespace rootlab {

// std::complex's operator templates do not deduce against integer literals;
// these let the shared iteration formulas mix long constants with any scalar.
inline std::complex<double> operator+(const std::complex<double>& a, long b) { return a + static_cast<double>(b); }
inline std::complex<double> operator+(long a, const std::complex<double>& b) { return static_cast<double>(a) + b; }
inline std::complex<double> operator-(const std::complex<double>& a, long b) { return a - static_cast<double>(b); }
inline std::complex<double> operator-(long a, const std::complex<double>& b) { return static_cast<double>(a) - b; }
inline std::complex<double> operator*(const std::complex<double>& a, long b) { return a * static_cast<double>(b); }
inline std::complex<double> operator*(long a, const std::complex<double>& b) { return static_cast<double>(a) * b; }
inline std::complex<double> operator/(const std::complex<double>& a, long b) { return a / static_cast<double>(b); }
inline std::complex<double> operator/(long a, const std::complex<double>& b) { return static_cast<double>(a) / b; }

/// Uniform scalar operations so the iteration formulas can be written once
/// and instantiated for BigReal (benchmarks), BigComplex (complex plane at
/// arbitrary precision) and std::complex<double> (fast basin rendering,
/// 16-digit hardware arithmetic).
template <class S>
struct scalar_ops;

template <>
struct scalar_ops<BigReal> {
  using mag_t = BigReal;
  static bool is_zero(const BigReal& x) { return x.is_zero(); }
  static bool finite(const BigReal& x) { return x.is_finite(); }
  static mag_t magnitude(const BigReal& x) { return abs(x); }
  static BigReal pow(const BigReal& b, const BigReal& e) { return rootlab::pow(b, e); }
  static bool pow_base_invalid(const BigReal& b) { return b.sign() <= 0; }
};

template <>
struct scalar_ops<BigComplex> {
  using mag_t = BigReal;
  static bool is_zero(const BigComplex& x) { return x.is_zero(); }
  static bool finite(const BigComplex& x) { return x.is_finite(); }
  static mag_t magnitude(const BigComplex& x) { return abs(x); }
  static BigComplex pow(const BigComplex& b, const BigComplex& e) { return rootlab::pow(b, e); }
  static bool pow_base_invalid(const BigComplex& b) { return b.is_zero(); }
};

template <>
struct scalar_ops<std::complex<double>> {
  using cd = std::complex<double>;
  using mag_t = double;
  static bool is_zero(const cd& x) { return x.real() == 0.0 && x.imag() == 0.0; }
  static bool finite(const cd& x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); }
  static mag_t magnitude(const cd& x) { return std::abs(x); }
  static cd pow(const cd& b, const cd& e) { return std::pow(b, e); }
  static bool pow_base_invalid(const cd& b) { return is_zero(b); }
};

}  // namespace rootlab
