#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootlab/numeric.hpp"
#include "rootlab/scalar.hpp"

namespace rootlab {

enum class BuiltinPair { P1, P2, P3, P4 };

/// phi of t = f(y)/f(x) and psi of s = f(v)/f(x). Built-in pairs evaluate
/// through a template so the same formula runs on real, big-complex and
/// hardware-complex scalars; custom pairs (validation experiments, tests)
/// carry real-valued callables only.
struct WeightPair {
  std::string id;
  std::optional<BuiltinPair> builtin;
  RealFn phi_custom, psi_custom;
  std::string phi_domain_note;
  std::string psi_domain_note;

  BigReal phi(const BigReal& t) const;
  BigReal psi(const BigReal& s) const;
};

/// Evaluation at a recorded pole raises WeightPole.
template <class S>
S builtin_phi(BuiltinPair which, const S& t);
template <class S>
S builtin_psi(BuiltinPair which, const S& s);

template <class S>
S weight_phi(const WeightPair& w, const S& t) {
  if (w.builtin) return builtin_phi(*w.builtin, t);
  if constexpr (std::is_same_v<S, BigReal>) {
    if (w.phi_custom) return w.phi_custom(t);
  }
  fail(ErrorKind::EvalError, "weight pair '" + w.id + "' has no phi for this scalar type");
}

template <class S>
S weight_psi(const WeightPair& w, const S& s) {
  if (w.builtin) return builtin_psi(*w.builtin, s);
  if constexpr (std::is_same_v<S, BigReal>) {
    if (w.psi_custom) return w.psi_custom(s);
  }
  fail(ErrorKind::EvalError, "weight pair '" + w.id + "' has no psi for this scalar type");
}

/// The four pairs p1..p4 driving the slss/m2/m3/m4 schemes.
std::vector<WeightPair> builtin_weight_pairs();
const WeightPair& builtin_pair(BuiltinPair which);

struct WeightCondition {
  std::string name;  // "phi(0)=0", "phi'(0)=-1/2", ...
  BigReal residual;
  bool pass;
};

struct WeightValidation {
  std::string pair_id;
  std::vector<WeightCondition> conditions;  // always the five, in order
  bool all_pass;
};

/// Numeric check of the order conditions phi(0)=0, phi'(0)=-1/2,
/// phi''(0)=-5/2, psi(0)=1, psi'(0)=1 via central differences, with
/// tolerance 10^(-digits/4).
WeightValidation validate_weight_pair(const WeightPair& w, Precision p);

// --- built-in formula templates ------------------------------------------

template <class S>
S builtin_phi(BuiltinPair which, const S& t) {
  using ops = scalar_ops<S>;
  switch (which) {
    case BuiltinPair::P1:
      return -(t / 2) - 5 * (t * t) / 4;
    case BuiltinPair::P2: {
      S den = 5 * t - 6;
      if (ops::is_zero(den)) fail(ErrorKind::WeightPole, "phi pole at t=6/5");
      return t + 9 * t / den;
    }
    case BuiltinPair::P3: {
      S den = 5 * t - 2;
      if (ops::is_zero(den)) fail(ErrorKind::WeightPole, "phi pole at t=2/5");
      return t / den;
    }
    case BuiltinPair::P4: {
      S den = 1 + t;
      if (ops::is_zero(den)) fail(ErrorKind::WeightPole, "phi pole at t=-1");
      return -((6 * t + t * t) / 4) + t / den;
    }
  }
  fail(ErrorKind::EvalError, "unknown builtin pair");
}

template <class S>
S builtin_psi(BuiltinPair which, const S& s) {
  using ops = scalar_ops<S>;
  switch (which) {
    case BuiltinPair::P1: {
      S den = 1 + s;
      if (ops::is_zero(den)) fail(ErrorKind::WeightPole, "psi pole at s=-1");
      return (1 + 2 * s) / den;
    }
    case BuiltinPair::P2: {
      S den = 1 - s;
      if (ops::is_zero(den)) fail(ErrorKind::WeightPole, "psi pole at s=1");
      return 1 / den;
    }
    case BuiltinPair::P3: {
      S den = 2 + 5 * s;
      if (ops::is_zero(den)) fail(ErrorKind::WeightPole, "psi pole at s=-2/5");
      return 1 + 2 * s / den;
    }
    case BuiltinPair::P4: {
      S base = 1 + s;
      S expo_den = 2 * s + 1;
      if (ops::is_zero(expo_den)) fail(ErrorKind::WeightPole, "psi exponent pole at s=-1/2");
      if (ops::pow_base_invalid(base))
        fail(ErrorKind::WeightPole, "psi base (1+s) outside domain at s<=-1");
      return ops::pow(base, (s + 1) / expo_den);
    }
  }
  fail(ErrorKind::EvalError, "unknown builtin pair");
}

}  // namespace rootlab
