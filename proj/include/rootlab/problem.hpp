#pragma once

#include <complex>
#include <functional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "rootlab/bigcomplex.hpp"
#include "rootlab/numeric.hpp"

namespace rootlab {

using ComplexFn = std::function<BigComplex(const BigComplex&)>;
using ComplexDoubleFn = std::function<std::complex<double>(const std::complex<double>&)>;

/// A test equation: f with analytic derivative, known simple root and
/// canonical initial guess. Real instantiation always present; complex
/// instantiations (arbitrary precision + hardware double) only where the
/// problem is used on the complex plane.
struct Problem {
  std::string id;
  std::string description;
  RealFn f, fprime;
  ComplexFn f_c, fprime_c;
  ComplexDoubleFn f_d, fprime_d;
  BigReal root;
  BigReal x0;
  std::vector<BigComplex> complex_roots;  // basin targets, index order fixed

  bool has_complex() const { return static_cast<bool>(f_c); }
};

/// The built-in suite: t1..t4 (real benchmarks) and b1 (complex plane).
std::vector<Problem> builtin_suite(Precision p);

/// nullptr when the id is unknown. Ids: "t1","t2","t3","t4","b1".
const Problem* find_problem(const std::vector<Problem>& suite, std::string_view id);

template <class S>
S eval_problem_f(const Problem& p, const S& x) {
  if constexpr (std::is_same_v<S, BigReal>) {
    return p.f(x);
  } else if constexpr (std::is_same_v<S, BigComplex>) {
    if (!p.f_c) fail(ErrorKind::EvalError, "problem '" + p.id + "' has no complex form");
    return p.f_c(x);
  } else {
    if (!p.f_d) fail(ErrorKind::EvalError, "problem '" + p.id + "' has no double form");
    return p.f_d(x);
  }
}

template <class S>
S eval_problem_fprime(const Problem& p, const S& x) {
  if constexpr (std::is_same_v<S, BigReal>) {
    return p.fprime(x);
  } else if constexpr (std::is_same_v<S, BigComplex>) {
    if (!p.fprime_c) fail(ErrorKind::EvalError, "problem '" + p.id + "' has no complex form");
    return p.fprime_c(x);
  } else {
    if (!p.fprime_d) fail(ErrorKind::EvalError, "problem '" + p.id + "' has no double form");
    return p.fprime_d(x);
  }
}

/// Evaluation-counting wrapper; one oracle per running trace, never shared.
/// Counts increment by exactly one per f / f' call and are never reset.
template <class S>
class CountingOracle {
 public:
  explicit CountingOracle(const Problem& p) : p_(&p) {}

  S f(const S& x) {
    ++f_count_;
    return eval_problem_f(*p_, x);
  }
  S fprime(const S& x) {
    ++fprime_count_;
    return eval_problem_fprime(*p_, x);
  }

  const Problem& problem() const { return *p_; }
  long f_count() const { return f_count_; }
  long fprime_count() const { return fprime_count_; }

 private:
  const Problem* p_;
  long f_count_ = 0;
  long fprime_count_ = 0;
};

}  // namespace rootlab
