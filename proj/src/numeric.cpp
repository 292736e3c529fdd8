#include "rootlab/numeric.hpp"

#include <cctype>
#include <string>

namespace rootlab {

namespace {

bool valid_decimal_literal(std::string_view s) {
  size_t i = 0;
  auto digits = [&] {
    size_t n = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++n;
    return n;
  };
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  size_t int_digits = digits();
  size_t frac_digits = 0;
  if (i < s.size() && s[i] == '.') {
    ++i;
    frac_digits = digits();
  }
  if (int_digits + frac_digits == 0) return false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (digits() == 0) return false;
  }
  return i == s.size();
}

}  // namespace

BigReal make_scalar(std::string_view text, Precision p) {
  if (!valid_decimal_literal(text))
    fail(ErrorKind::ParseError, "malformed decimal literal '" + std::string(text) + "'");
  BigReal r(p);
  std::string buf(text);
  if (mpfr_set_str(r.raw(), buf.c_str(), 10, MPFR_RNDN) != 0)
    fail(ErrorKind::ParseError, "unparseable literal '" + buf + "'");
  return r;
}

BigReal default_fd_step(Precision p) { return BigReal::pow10(-(p.digits / 4), p); }

BigReal fd_step_for_order(int k, Precision p) {
  return BigReal::pow10(-(p.digits / (k + 2)), p);
}

BigReal nth_derivative_fd(const RealFn& g, int k, const BigReal& x0, const BigReal& h) {
  if (k < 0 || k > 4) fail(ErrorKind::UnsupportedOrder, "derivative order must be 0..4");
  if (!(h > BigReal(0L, Precision(16)))) fail(ErrorKind::EvalError, "step h must be positive");
  auto eval = [&](long offset) -> BigReal {
    try {
      return g(x0 + offset * h);
    } catch (const Error& e) {
      fail(ErrorKind::EvalError, std::string("stencil evaluation failed: ") + e.what());
    }
  };
  switch (k) {
    case 0:
      return eval(0);
    case 1:
      return (eval(1) - eval(-1)) / (2 * h);
    case 2:
      return (eval(1) - 2 * eval(0) + eval(-1)) / (h * h);
    case 3:
      return (eval(2) - 2 * eval(1) + 2 * eval(-1) - eval(-2)) / (2 * h * h * h);
    default:
      return (eval(2) - 4 * eval(1) + 6 * eval(0) - 4 * eval(-1) + eval(-2)) /
             (h * h * h * h);
  }
}

}  // namespace rootlab
