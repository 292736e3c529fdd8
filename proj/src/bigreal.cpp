#include "rootlab/bigreal.hpp"

#include <cstdlib>
#include <vector>

namespace rootlab {

namespace {

std::string format_digits(const std::string& digits, long exp10, bool negative) {
  // mpfr_get_str convention: value = 0.<digits> * 10^exp10.
  std::string mant = digits;
  // strip trailing zeros but keep at least one digit
  size_t last = mant.find_last_not_of('0');
  mant.erase(last == std::string::npos ? 1 : last + 1);
  std::string out = negative ? "-" : "";
  out += mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  long sci_exp = exp10 - 1;  // normalized d.ddd form
  if (sci_exp != 0) out += "e" + std::to_string(sci_exp);
  return out;
}

}  // namespace

std::string BigReal::to_string() const { return to_string(0); }

std::string BigReal::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
  if (mpfr_zero_p(v_)) return "0";
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  if (!s) fail(ErrorKind::IoError, "mpfr_get_str failed");
  std::string raw = s;
  mpfr_free_str(s);
  bool neg = !raw.empty() && raw[0] == '-';
  if (neg) raw.erase(0, 1);
  return format_digits(raw, static_cast<long>(e), neg);
}

}  // namespace rootlab
