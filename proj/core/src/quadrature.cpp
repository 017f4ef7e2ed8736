#include "polyint/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polyint/constants.hpp"
#include "polyint/errors.hpp"

namespace polyint {
namespace {

constexpr double kHalfPi = 0.5 * kPi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Node {
  double weight;  // dx/ds
  double x;
  double one_minus_x;
};

// Shared refinement loop. `node(s)` maps the abscissa s to (weight, x, 1 - x);
// the trapezoidal sum runs over s in [s_lo, s_hi].
template <typename MapFn, typename Integrand>
QuadratureResult refine(MapFn node, Integrand f, double s_lo, double s_hi,
                        const QuadratureOptions& options) {
  if (!(options.tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  if (options.max_level < 1 || options.max_level > 20) {
    throw DomainError("quadrature max_level must be in [1, 20]");
  }
  QuadratureResult result;
  Complex sum = 0.0;
  double abs_sum = 0.0;
  auto add = [&](double s) {
    const Node n = node(s);
    if (n.weight == 0.0 || !std::isfinite(n.weight)) return;
    const Complex v = f(n.x, n.one_minus_x) * n.weight;
    ++result.evaluations;
    sum += v;
    abs_sum += std::abs(v);
  };

  double h = 1.0;
  const long k_lo = static_cast<long>(std::ceil(s_lo));
  const long k_hi = static_cast<long>(std::floor(s_hi));
  for (long k = k_lo; k <= k_hi; ++k) add(static_cast<double>(k));
  Complex estimate = sum * h;
  double error = std::numeric_limits<double>::infinity();
  double roundoff = 0.0;

  for (int level = 1; level <= options.max_level; ++level) {
    h *= 0.5;
    // Odd multiples of the new step are the only new nodes.
    const long j_lo = static_cast<long>(std::ceil((s_lo / h - 1.0) / 2.0));
    const long j_hi = static_cast<long>(std::floor((s_hi / h - 1.0) / 2.0));
    for (long j = j_lo; j <= j_hi; ++j) add(static_cast<double>(2 * j + 1) * h);
    const Complex next = sum * h;
    // Rounding floor from the level-1 estimate of int |f|; fixed afterwards so
    // that refinement alone cannot raise it.
    if (level == 1) roundoff = 32.0 * kEps * abs_sum * h;
    error = std::max(std::abs(next - estimate), roundoff);
    estimate = next;
    result.levels_used = level;
    if (level >= options.min_level && error <= options.tol * std::max(1.0, std::abs(estimate))) {
      result.converged = true;
      break;
    }
  }
  result.value = estimate;
  result.abs_error_estimate = error;
  return result;
}

}  // namespace

QuadratureResult exp_sinh(const std::function<Complex(double)>& f,
                          const QuadratureOptions& options) {
  if (!(options.upper_cutoff > 1.0)) throw DomainError("upper_cutoff must exceed 1");
  // x = exp((pi/2) sinh s); keep x within [1e-280, upper_cutoff].
  const double s_lo = std::asinh(std::log(1e-280) / kHalfPi);
  const double s_hi = std::asinh(std::log(options.upper_cutoff) / kHalfPi);
  auto node = [](double s) {
    const double x = std::exp(kHalfPi * std::sinh(s));
    return Node{x * kHalfPi * std::cosh(s), x, 1.0 - x};
  };
  auto g = [&f](double x, double) { return f(x); };
  return refine(node, g, s_lo, s_hi, options);
}

QuadratureResult tanh_sinh(const std::function<Complex(double, double)>& f,
                           const QuadratureOptions& options) {
  // x = 1 / (1 + e^{-2u}), u = (pi/2) sinh s; |u| <= 320 keeps both ends representable.
  const double s_max = std::asinh(320.0 / kHalfPi);
  auto node = [](double s) {
    const double u = kHalfPi * std::sinh(s);
    const double cu = std::cosh(u);
    const double weight = kHalfPi * std::cosh(s) / (2.0 * cu * cu);
    const double x = 1.0 / (1.0 + std::exp(-2.0 * u));
    const double omx = 1.0 / (1.0 + std::exp(2.0 * u));
    return Node{weight, x, omx};
  };
  return refine(node, f, -s_max, s_max, options);
}

}  // namespace polyint
