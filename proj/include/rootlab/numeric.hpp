#pragma once

#include <functional>
#include <string_view>

#include "rootlab/bigreal.hpp"

namespace rootlab {

using RealFn = std::function<BigReal(const BigReal&)>;

/// Parse a signed decimal or scientific-notation literal at precision p.
/// Rejects anything mpfr would silently half-accept ("1e--3", "", "..").
BigReal make_scalar(std::string_view text, Precision p);

/// Default finite-difference step 10^(-digits/4): small enough that the
/// O(h^2) truncation error sits far below the validation tolerances, large
/// enough that rounding noise does not reach it for k <= 2.
BigReal default_fd_step(Precision p);

/// Step balancing truncation against rounding noise for derivative order k,
/// 10^(-digits/(k+2)); required for k >= 3 where the k-th difference of an
/// O(1) function drops to the rounding floor with the default step.
BigReal fd_step_for_order(int k, Precision p);

/// Central-difference estimate of g^(k)(x0), k in 0..4, truncation O(h^2).
/// Exact (up to rounding) on polynomials of degree <= k+1.
BigReal nth_derivative_fd(const RealFn& g, int k, const BigReal& x0, const BigReal& h);

}  // namespace rootlab
