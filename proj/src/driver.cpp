#include "rootlab/driver.hpp"

namespace rootlab {

const char* termination_name(Termination t) {
  switch (t) {
    case Termination::MaxIters: return "MaxIters";
    case Termination::Residual: return "Residual";
    case Termination::AtRoot: return "AtRoot";
    case Termination::StepError: return "StepError";
    case Termination::Diverged: return "Diverged";
  }
  return "?";
}

namespace {

// Errors at the rounding floor carry no convergence information; below
// ~50 digits the floor formula would reject everything, so it only applies
// at benchmark-scale precisions.
bool admissible(const BigReal& e, Precision p) {
  if (e.is_zero() || !e.is_finite()) return false;
  if (p.digits <= 50) return true;
  return e > BigReal::pow10(-p.digits + 50, Precision(16));
}

}  // namespace

BigReal coc(const RealTrace& t, const BigReal& root) {
  std::vector<BigReal> adm;
  bool saw_zero = false;
  for (const auto& x : t.iterates) {
    BigReal e = abs(x - root);
    if (e.is_zero()) saw_zero = true;
    if (admissible(e, t.precision)) adm.push_back(e);
  }
  if (adm.size() < 3) {
    if (saw_zero) fail(ErrorKind::ExactRootReached, "an iterate hit the root exactly");
    fail(ErrorKind::InsufficientData, "need three admissible errors for COC");
  }
  const BigReal& e0 = adm[adm.size() - 3];
  const BigReal& e1 = adm[adm.size() - 2];
  const BigReal& e2 = adm[adm.size() - 1];
  return log(e2 / e1) / log(e1 / e0);
}

BigReal acoc(const RealTrace& t) {
  if (t.iterates.size() < 4)
    fail(ErrorKind::InsufficientData, "need four iterates for ACOC");
  size_t n = t.iterates.size();
  BigReal d0 = t.iterates[n - 3] - t.iterates[n - 4];
  BigReal d1 = t.iterates[n - 2] - t.iterates[n - 3];
  BigReal d2 = t.iterates[n - 1] - t.iterates[n - 2];
  if (d0.is_zero() || d1.is_zero() || d2.is_zero())
    fail(ErrorKind::InsufficientData, "repeated consecutive iterates in ACOC window");
  return log_abs(d2 / d1) / log_abs(d1 / d0);
}

}  // namespace rootlab
