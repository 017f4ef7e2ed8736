#pragma once

#include "polyint/closed_form.hpp"
#include "polyint/quadrature.hpp"

namespace polyint {

/// Direct quadrature of int_R x^p Li_t(+-e^{ax}) / (1 + e^{bx}) dx, split at 0.
/// For the plus sign and ax > 0 the integrand takes the boundary value of
/// polylog_continued, so the result is complex. Returns converged == false with
/// the partial value when the level cap is reached.
QuadratureResult integrate_line(const IntegralParams& params, double tol = 1e-11);

/// The options integrate_line uses for `params` at tolerance `tol`.
QuadratureOptions line_options(const IntegralParams& params, double tol);

/// integrate_line with explicit options, e.g. to pin the refinement level.
QuadratureResult integrate_line(const IntegralParams& params, const QuadratureOptions& options);

/// Integrals over [0, 1] that appear in the closed-form derivation.
struct UnitIntegral {
  enum class Kind { k_integral, log_moment };

  Kind kind = Kind::log_moment;
  Sign sign = Sign::minus;
  double c = 0.0;
  int p = 0;
  double q = 1.0;
  int t = 0;
  int m = 0;

  /// int_0^1 x^c log^p x Li_t(+-x^q) / (1 + x) dx, c >= -1.
  static UnitIntegral K(Sign sign, double c, int p, double q, int t);
  /// int_0^1 log^m y / (1 + y) dy.
  static UnitIntegral LogMoment(int m);
};

QuadratureResult integrate_unit(const UnitIntegral& integral, double tol = 1e-12);

/// -(1/(t-1)!) int_0^inf x^{t-1} / (e^x / y + 1) dx, which equals Li_t(-y).
/// Throws ConvergenceError if the quadrature misses `tol`.
double fermi_dirac_polylog(int t, double y, double tol = 1e-12);

/// (1/(s-1)!) int_0^inf x^{s-1} / (1 + e^x) dx, which equals eta(s).
/// Throws ConvergenceError if the quadrature misses `tol`.
double eta_mellin(int s, double tol = 1e-12);

}  // namespace polyint
