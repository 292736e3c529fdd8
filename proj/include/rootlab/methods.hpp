#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "rootlab/problem.hpp"
#include "rootlab/weights.hpp"

namespace rootlab {

enum class MethodId {
  Newton,   // one-point, order 2
  Ns3,      // Newton-Secant, order 3
  Tp4,      // two-point with weight phi, order 4
  Slss,     // three-point, weights p1
  M2,       // three-point, weights p2
  M3,       // three-point, weights p3
  M4,       // three-point, weights p4
  Brw,
  Wl,
  Ss,
  Bcst,
  Cfgt,
  Ctv,
  Tp,
  Cl,
};

struct MethodInfo {
  MethodId id;
  const char* name;       // CLI-facing id
  int order;              // theoretical convergence order
  int evals_per_iter;     // f plus f' evaluations per full step
  bool needs_weight;      // tp4/slss/m2/m3/m4
};

const std::vector<MethodInfo>& all_methods();
const MethodInfo& method_info(MethodId m);
std::optional<MethodId> method_from_name(std::string_view name);
/// Canonical weight pair for tp4/slss/m2/m3/m4 (p1/p1/p2/p3/p4).
const WeightPair& default_weight_pair(MethodId m);
bool is_eighth_order(MethodId m);

/// Result of one full iteration step. at_root is set when an exact zero of
/// f was observed (at entry, or when a sub-step landed on a root), in which
/// case next IS that zero and no further correction was applied.
template <class S>
struct StepResult {
  S next;
  bool at_root = false;
};

template <class S>
S divided_difference(const S& f_u, const S& f_v, const S& u, const S& v) {
  if (u == v) fail(ErrorKind::DegenerateNodes, "divided difference with equal nodes");
  return (f_u - f_v) / (u - v);
}

/// x - f(x)/f'(x); consumes 1 f + 1 f'.
template <class S>
StepResult<S> newton_step(CountingOracle<S>& o, const S& x);

/// Newton-Secant: x - f(x)^2 / ((f(x)-f(y)) f'(x)), y the Newton point;
/// consumes 2 f + 1 f', order 3.
template <class S>
StepResult<S> newton_secant_step(CountingOracle<S>& o, const S& x);

/// Two-point scheme with weight phi(t), t = f(y)/f(x); 2 f + 1 f', order 4
/// when phi satisfies phi(0)=0, phi'(0)=-1/2.
template <class S>
StepResult<S> two_point4_step(CountingOracle<S>& o, const S& x, const WeightPair& w);

/// Cubic model of f at x evaluated at z, built from f(x), f(y), f(v), f'(x)
/// only; the (v,x) secant supplies the third-order coefficient.
template <class S>
S approx_fz(const S& fx, const S& fy, const S& fv, const S& fpx, const S& x,
            const S& y, const S& z, const S& v);

/// Linear model of f' at v from divided differences through x, y, z, with
/// fz the modeled (not evaluated) f(z).
template <class S>
S approx_fprime_v(const S& fz, const S& fy, const S& fx, const S& fpx, const S& x,
                  const S& y, const S& z, const S& v);

/// Three-point scheme with weights phi(t), psi(s), s = f(v)/f(x);
/// 3 f + 1 f', order 8 under the full weight conditions.
template <class S>
StepResult<S> three_point8_step(CountingOracle<S>& o, const S& x, const WeightPair& w);

/// One full iteration of a published eighth-order comparator (Brw..Cl),
/// 4 evaluations each.
template <class S>
StepResult<S> comparator_step(MethodId m, CountingOracle<S>& o, const S& x);

/// Uniform dispatch. w may be null for methods that need no weight; weight
/// methods fall back to their canonical pair.
template <class S>
StepResult<S> method_step(MethodId m, CountingOracle<S>& o, const S& x,
                          const WeightPair* w = nullptr);

/// Asymptotic error machinery: c_k = f^(k)(x*) / (k! f'(x*)) by finite
/// differences at the known root, and the predicted constants
///   R4 = -c2 c3 + c2^3 (5/2 + phi''(0)),
///   R8 = (1/4) c2^2 c3 (29 c2^3 + 4 c2 c3 - 4 c4).
struct ErrorConstants {
  BigReal c2, c3, c4;
  BigReal r4, r8;
};
ErrorConstants error_constants(const Problem& p, const BigReal& phi_second);

// --- implementation -------------------------------------------------------

namespace detail {

template <class S>
void require_nonzero(const S& v, ErrorKind kind, const char* what) {
  if (scalar_ops<S>::is_zero(v)) fail(kind, what);
}

}  // namespace detail

template <class S>
StepResult<S> newton_step(CountingOracle<S>& o, const S& x) {
  S fx = o.f(x);
  if (scalar_ops<S>::is_zero(fx)) return {x, true};
  S fpx = o.fprime(x);
  detail::require_nonzero(fpx, ErrorKind::DerivativeZero, "f'(x) = 0 in Newton step");
  return {x - fx / fpx, false};
}

template <class S>
StepResult<S> newton_secant_step(CountingOracle<S>& o, const S& x) {
  S fx = o.f(x);
  if (scalar_ops<S>::is_zero(fx)) return {x, true};
  S fpx = o.fprime(x);
  detail::require_nonzero(fpx, ErrorKind::DerivativeZero, "f'(x) = 0 in Newton sub-step");
  S y = x - fx / fpx;
  S fy = o.f(y);
  S d = fx - fy;
  detail::require_nonzero(d, ErrorKind::SecantDegenerate, "f(x) = f(y) in secant denominator");
  // (fx/d)*(fx/fpx) rather than fx^2/(d*fpx): lands on y exactly when f(y)=0.
  S next = x - (fx / d) * (fx / fpx);
  return {next, scalar_ops<S>::is_zero(fy)};
}

template <class S>
StepResult<S> two_point4_step(CountingOracle<S>& o, const S& x, const WeightPair& w) {
  S fx = o.f(x);
  if (scalar_ops<S>::is_zero(fx)) return {x, true};
  S fpx = o.fprime(x);
  detail::require_nonzero(fpx, ErrorKind::DerivativeZero, "f'(x) = 0 in Newton sub-step");
  S nc = fx / fpx;
  S y = x - nc;
  S fy = o.f(y);
  S d = fx - fy;
  detail::require_nonzero(d, ErrorKind::SecantDegenerate, "f(x) = f(y) in secant denominator");
  S z = x - (fx / d) * nc;
  S t = fy / fx;
  S bracket = 1 - (fx / d) * (1 + fy / d);
  S next = z - bracket * nc * weight_phi(w, t);
  return {next, scalar_ops<S>::is_zero(fy)};
}

template <class S>
S approx_fz(const S& fx, const S& fy, const S& fv, const S& fpx, const S& x,
            const S& y, const S& z, const S& v) {
  (void)y;  // kept for signature symmetry with approx_fprime_v
  if (v == x) fail(ErrorKind::DegenerateNodes, "f(z) model needs v != x");
  detail::require_nonzero(fx, ErrorKind::DegenerateStep, "f(z) model needs f(x) != 0");
  S half_f2 = fy * fpx * fpx / (fx * fx);  // approximates f''(x)/2
  S zx = z - x;
  S vx = v - x;
  S third = ((fv - fx) / vx - fpx - half_f2 * vx) * (zx * zx * zx) / (vx * vx);
  return fx + fpx * zx + half_f2 * (zx * zx) + third;
}

template <class S>
S approx_fprime_v(const S& fz, const S& fy, const S& fx, const S& fpx, const S& x,
                  const S& y, const S& z, const S& v) {
  if (z == x) fail(ErrorKind::DegenerateNodes, "f'(v) model needs z != x");
  if (z == y) fail(ErrorKind::DegenerateNodes, "f'(v) model needs z != y");
  S zx = z - x;
  S zy = z - y;
  S fzy = (fz - fy) / zy;
  S fzx = (fz - fx) / zx;
  return fpx + (fzy + (fzx - fpx) * zy / zx - fpx) / zx * (v - x);
}

template <class S>
StepResult<S> three_point8_step(CountingOracle<S>& o, const S& x, const WeightPair& w) {
  S fx = o.f(x);
  if (scalar_ops<S>::is_zero(fx)) return {x, true};
  S fpx = o.fprime(x);
  detail::require_nonzero(fpx, ErrorKind::DerivativeZero, "f'(x) = 0 in Newton sub-step");
  S nc = fx / fpx;
  S y = x - nc;
  S fy = o.f(y);
  S d = fx - fy;
  detail::require_nonzero(d, ErrorKind::SecantDegenerate, "f(x) = f(y) in secant denominator");
  S z = x - (fx / d) * nc;
  S t = fy / fx;
  S bracket = 1 - (fx / d) * (1 + fy / d);
  S v = z - bracket * nc * weight_phi(w, t);
  S fv = o.f(v);
  if (scalar_ops<S>::is_zero(fv)) return {v, true};
  S s = fv / fx;
  S fz = approx_fz(fx, fy, fv, fpx, x, y, z, v);
  S fpv = approx_fprime_v(fz, fy, fx, fpx, x, y, z, v);
  detail::require_nonzero(fpv, ErrorKind::ApproxDerivativeZero, "modeled f'(v) = 0");
  S next = v - fv * weight_psi(w, s) / fpv;
  return {next, false};
}

template <class S>
StepResult<S> comparator_step(MethodId m, CountingOracle<S>& o, const S& x) {
  using ops = scalar_ops<S>;
  S fx = o.f(x);
  if (ops::is_zero(fx)) return {x, true};
  S fpx = o.fprime(x);
  detail::require_nonzero(fpx, ErrorKind::DerivativeZero, "f'(x) = 0 in Newton sub-step");
  S nc = fx / fpx;
  S y = x - nc;

  switch (m) {
    case MethodId::Brw: {
      // beta = -1/2, H(t) = 1/(1 - t)^2 with t = f(z)/f(x)
      S fy = o.f(y);
      S den = 2 * fx - 5 * fy;  // 2*(fx + (beta-2) fy)
      detail::require_nonzero(den, ErrorKind::DegenerateStep, "brw second denominator");
      S z = y - (fy / fpx) * (2 * fx - fy) / den;
      S fz = o.f(z);
      if (ops::is_zero(fz)) return {z, true};
      S t = fz / fx;
      S ht = 1 - t;
      detail::require_nonzero(ht, ErrorKind::DegenerateStep, "brw weight pole 1-t=0");
      S fzy = divided_difference(fz, fy, z, y);
      S fzxx = (divided_difference(fz, fx, z, x) - fpx) / (z - x);
      S den2 = fzy + fzxx * (z - y);
      detail::require_nonzero(den2, ErrorKind::DegenerateStep, "brw interpolation denominator");
      return {z - fz / den2 / (ht * ht), false};
    }
    case MethodId::Wl: {
      S fy = o.f(y);
      S t = fy / fx;
      S g_den = 1 - 2 * t;
      detail::require_nonzero(g_den, ErrorKind::DegenerateStep, "wl G pole 1-2t=0");
      S z = x - nc * ((1 - t) / g_den);
      S fz = o.f(z);
      if (ops::is_zero(fz)) return {z, true};
      detail::require_nonzero(fy, ErrorKind::DegenerateStep, "wl s-ratio needs f(y) != 0");
      S s = fz / fy;
      S h_den = 5 - 12 * t;
      detail::require_nonzero(h_den, ErrorKind::DegenerateStep, "wl H pole 5-12t=0");
      S hw = (5 - 2 * t + t * t) / h_den;
      return {z - (fz / fpx) * (hw + (1 + 4 * t) * s), false};
    }
    case MethodId::Ss: {
      S fy = o.f(y);
      S den = fx - 2 * fy;
      detail::require_nonzero(den, ErrorKind::DegenerateStep, "ss second denominator");
      S z = y - (fy / fpx) * (fx / den);
      S fz = o.f(z);
      if (ops::is_zero(fz)) return {z, true};
      S t = fz / fx;
      S w_den = 1 + t;
      detail::require_nonzero(w_den, ErrorKind::DegenerateStep, "ss weight pole 1+t=0");
      S wt = 1 + t / w_den;
      S fxy = divided_difference(fx, fy, x, y);
      S fxz = divided_difference(fx, fz, x, z);
      S fyz = divided_difference(fy, fz, y, z);
      detail::require_nonzero(fxz, ErrorKind::DegenerateStep, "ss f[x,z] = 0");
      detail::require_nonzero(fyz, ErrorKind::DegenerateStep, "ss f[y,z] = 0");
      return {z - fxy * fz / (fxz * fyz) * wt, false};
    }
    case MethodId::Bcst: {
      S u5 = nc * nc * nc * nc * nc;
      S yb = x - nc * (1 + u5);
      S fy = o.f(yb);
      S r = 1 - fy / fx;
      detail::require_nonzero(r, ErrorKind::DegenerateStep, "bcst pole 1-fy/fx=0");
      S z = yb - (fy / fpx) / (r * r);
      S fz = o.f(z);
      if (ops::is_zero(fz)) return {z, true};
      detail::require_nonzero(fy, ErrorKind::DegenerateStep, "bcst fz/fy needs f(y) != 0");
      S q = fy / fx;
      S den = 1 - q - fz / fx;
      detail::require_nonzero(den, ErrorKind::DegenerateStep, "bcst third denominator");
      S num = 1 + q * q + 5 * (q * q * q * q) + fz / fy;
      return {z - (fz / fpx) * num / (den * den), false};
    }
    case MethodId::Cfgt: {
      S fy = o.f(y);
      S fx3 = fx * fx * fx;
      S den = fx3 - 2 * fx * fx * fy - fx * fy * fy - fy * fy * fy / 2;
      detail::require_nonzero(den, ErrorKind::DegenerateStep, "cfgt second denominator");
      S z = y - fx3 / den * (fy / fpx);
      S fz = o.f(z);
      if (ops::is_zero(fz)) return {z, true};
      S fzy = divided_difference(fz, fy, z, y);
      S fzxx = (divided_difference(fz, fx, z, x) - fpx) / (z - x);
      S den2 = fzy + fzxx * (z - y);
      detail::require_nonzero(den2, ErrorKind::DegenerateStep, "cfgt interpolation denominator");
      S den3 = fx + fz;
      detail::require_nonzero(den3, ErrorKind::DegenerateStep, "cfgt weight pole fx+fz=0");
      return {z - (fx + 3 * fz) / den3 * (fz / den2), false};
    }
    case MethodId::Ctv: {
      // beta1 = beta2 = beta3 = 1, gamma = 3 (beta2 + beta3) = 6
      S fy = o.f(y);
      S den = fx - 2 * fy;
      detail::require_nonzero(den, ErrorKind::DegenerateStep, "ctv second denominator");
      S z = y - (fy / fpx) * (fx / den);
      S fz = o.f(z);
      if (ops::is_zero(fz)) return {z, true};
      S den2 = fy - 2 * fz;
      detail::require_nonzero(den2, ErrorKind::DegenerateStep, "ctv pole fy-2fz=0");
      S br = (fx - fy) / den + (fz / den2) / 2;
      S v = z - (fz / fpx) * (br * br);
      S den3 = (v - z) + (y - x) + (z - x);
      detail::require_nonzero(den3, ErrorKind::DegenerateStep, "ctv final denominator");
      return {v - (fz / fpx) * (6 * (v - z)) / den3, false};
    }
    case MethodId::Tp: {
      // alpha = 1, beta = 1: H(t) = (3 + 4t + 5t^2) / (3 - 2t)
      S fy = o.f(y);
      S den = fx - fy;  // fx + (beta-2) fy
      detail::require_nonzero(den, ErrorKind::DegenerateStep, "tp second denominator");
      S z = y - (fy / fpx) * (fx + fy) / den;
      S fz = o.f(z);
      if (ops::is_zero(fz)) return {z, true};
      S t = fy / fx;
      S h_den = 3 - 2 * t;
      detail::require_nonzero(h_den, ErrorKind::DegenerateStep, "tp H pole 3-2t=0");
      S hw = (3 + 4 * t + 5 * (t * t)) / h_den;
      S den2 = fy - fz;  // fy - alpha fz
      detail::require_nonzero(den2, ErrorKind::DegenerateStep, "tp pole fy-fz=0");
      return {z - (fz / fpx) * (hw + fz / den2 + 4 * fz / fx), false};
    }
    case MethodId::Cl: {
      // beta = gamma = 0 (they cancel in 1 - H - J - P)
      S fy = o.f(y);
      S r = 1 - fy / fx;
      detail::require_nonzero(r, ErrorKind::DegenerateStep, "cl pole 1-fy/fx=0");
      S z = y - (fy / fpx) / (r * r);
      S fz = o.f(z);
      if (ops::is_zero(fz)) return {z, true};
      detail::require_nonzero(fy, ErrorKind::DegenerateStep, "cl u-ratio needs f(y) != 0");
      S t = fy / fx;
      S s = fz / fx;
      S u = fz / fy;
      S base = 1 - (t + t * t / 2 - t * t * t / 2) - s / 2 - u / 2;
      detail::require_nonzero(base, ErrorKind::DegenerateStep, "cl pole 1-H-J-P=0");
      return {z - (fz / fpx) / (base * base), false};
    }
    default:
      fail(ErrorKind::EvalError, "not a comparator method");
  }
}

template <class S>
StepResult<S> method_step(MethodId m, CountingOracle<S>& o, const S& x,
                          const WeightPair* w) {
  switch (m) {
    case MethodId::Newton:
      return newton_step(o, x);
    case MethodId::Ns3:
      return newton_secant_step(o, x);
    case MethodId::Tp4:
      return two_point4_step(o, x, w ? *w : default_weight_pair(m));
    case MethodId::Slss:
    case MethodId::M2:
    case MethodId::M3:
    case MethodId::M4:
      return three_point8_step(o, x, w ? *w : default_weight_pair(m));
    default:
      return comparator_step(m, o, x);
  }
}

}  // namespace rootlab
