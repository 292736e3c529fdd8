#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootlab/methods.hpp"

namespace rootlab {

enum class Termination { MaxIters, Residual, AtRoot, StepError, Diverged };

const char* termination_name(Termination t);

template <class S>
struct Trace {
  MethodId method = MethodId::Newton;
  Precision precision{16};
  std::vector<S> iterates;      // x0 .. xN
  std::vector<BigReal> errors;  // |x_n - x*| when the root is known, aligned
  long f_evals = 0;
  long fprime_evals = 0;
  Termination termination = Termination::MaxIters;
  std::string step_error;  // detail when termination == StepError
};

using RealTrace = Trace<BigReal>;

struct RunPolicy {
  int max_iters = 3;
  std::optional<BigReal> residual_tol;  // stop when |f(x_n)| below (diagnostic
                                        // check, not charged to the oracle)
  BigReal divergence_bound = BigReal(10000000000L, Precision(16));  // 1e10
};

/// Run `m` from x0 for at most max_iters steps, recording iterates, errors
/// against the known root, oracle totals and the termination cause. Step
/// failures are captured, never thrown.
template <class S>
Trace<S> iterate(const Problem& p, MethodId m, const WeightPair* w, const S& x0,
                 const RunPolicy& policy);

/// Computational order of convergence from the last three admissible errors:
/// ln|e_{n+1}/e_n| / ln|e_n/e_{n-1}|. Errors at or below the precision floor
/// 10^(-digits+50) are not admissible (for digits > 50); exact zeros never are.
BigReal coc(const RealTrace& t, const BigReal& root);

/// Approximated order from the last four iterates, no root required:
/// ln|(x_{n+1}-x_n)/(x_n-x_{n-1})| / ln|(x_n-x_{n-1})/(x_{n-1}-x_{n-2})|.
BigReal acoc(const RealTrace& t);

// --- implementation -------------------------------------------------------

template <class S>
Trace<S> iterate(const Problem& p, MethodId m, const WeightPair* w, const S& x0,
                 const RunPolicy& policy) {
  Trace<S> trace;
  trace.method = m;
  trace.precision = Precision(std::max<long>(16, p.root.precision_digits()));
  CountingOracle<S> oracle(p);
  trace.iterates.push_back(x0);

  for (int n = 0; n < policy.max_iters; ++n) {
    const S& x = trace.iterates.back();
    if (policy.residual_tol) {
      bool below = false;
      try {
        below = scalar_ops<S>::magnitude(eval_problem_f(p, x)) < *policy.residual_tol;
      } catch (const Error&) {
        below = false;
      }
      if (below) {
        trace.termination = Termination::Residual;
        break;
      }
    }
    StepResult<S> r;
    try {
      r = method_step(m, oracle, x, w);
    } catch (const Error& e) {
      trace.termination = Termination::StepError;
      trace.step_error = e.what();
      break;
    }
    bool moved = !(r.at_root && r.next == x);
    if (moved) trace.iterates.push_back(r.next);
    if (r.at_root) {
      trace.termination = Termination::AtRoot;
      break;
    }
    if (scalar_ops<S>::magnitude(r.next) > policy.divergence_bound ||
        !scalar_ops<S>::finite(r.next)) {
      trace.termination = Termination::Diverged;
      break;
    }
  }

  trace.f_evals = oracle.f_count();
  trace.fprime_evals = oracle.fprime_count();
  if constexpr (std::is_same_v<S, BigReal>) {
    for (const auto& x : trace.iterates) trace.errors.push_back(abs(x - p.root));
  } else if constexpr (std::is_same_v<S, BigComplex>) {
    if (!p.complex_roots.empty()) {
      // error against the nearest known root
      for (const auto& x : trace.iterates) {
        BigReal best = abs(x - p.complex_roots.front());
        for (size_t i = 1; i < p.complex_roots.size(); ++i) {
          BigReal d = abs(x - p.complex_roots[i]);
          if (d < best) best = d;
        }
        trace.errors.push_back(best);
      }
    }
  }
  return trace;
}

}  // namespace rootlab
