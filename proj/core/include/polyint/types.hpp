#pragma once

#include <complex>
#include <vector>

namespace polyint {

using Complex = std::complex<double>;

/// Outcome of summing an infinite series.
///
/// `converged` is set only when `abs_error` is at or below the tolerance the
/// caller asked for; otherwise `value` is the best available estimate.
struct SeriesResult {
  double value = 0.0;
  double abs_error = 0.0;
  long terms = 0;
  bool converged = false;
};

/// Optional record of the explicitly summed prefix of a series.
struct SeriesTrace {
  std::vector<double> partial_sums;
};

enum class Sign { plus, minus };

inline constexpr const char* to_string(Sign s) { return s == Sign::plus ? "plus" : "minus"; }

}  // namespace polyint
