#pragma once

#include <functional>

#include "polyint/types.hpp"

namespace polyint {

struct QuadratureOptions {
  /// Stop once the error estimate is below tol * max(1, |value|).
  double tol = 1e-10;
  /// Level l uses step 2^{-l}; the rule never goes past this level.
  int max_level = 12;
  /// Always refine at least this far, even when the estimate is already small.
  int min_level = 3;
  /// Upper end of the half-line; nodes beyond it are not evaluated.
  double upper_cutoff = 1e3;
};

struct QuadratureResult {
  Complex value;
  double abs_error_estimate = 0.0;
  long evaluations = 0;
  int levels_used = 0;
  bool converged = false;
};

/// int_0^inf f(x) dx with the exp-sinh map x = exp((pi/2) sinh s).
QuadratureResult exp_sinh(const std::function<Complex(double)>& f,
                          const QuadratureOptions& options = {});

/// int_0^1 f(x) dx with the tanh-sinh map. The integrand receives both x and
/// 1 - x, each computed without cancellation.
QuadratureResult tanh_sinh(const std::function<Complex(double x, double one_minus_x)>& f,
                           const QuadratureOptions& options = {});

}  // namespace polyint
