#pragma once

#include "polyint/types.hpp"

namespace polyint {

/// Parameters of I^{+-}(a, b, p, t) = int_R x^p Li_t(+-e^{ax}) / (1 + e^{bx}) dx.
struct IntegralParams {
  Sign sign = Sign::minus;
  double a = 1.0;
  double b = 1.0;
  int p = 0;
  int t = 1;

  double q() const { return a / b; }
  /// Throws DomainError unless a*b > 0, p >= 0, t >= 1 and a, b are finite.
  void validate() const;
};

enum class Parity { odd, even };

/// total = b_scale * (A + B + C i) with b_scale = p! sign(b) / b^{p+1}.
struct EvalBreakdown {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  Complex total;
  Parity parity = Parity::odd;
  double b_scale = 1.0;
  double abs_error = 0.0;  ///< estimated error of `total` from the series parts
  bool converged = true;
};

/// The zeta/eta part A of the closed form (includes the j = 0 terms with
/// zeta(0) = -1/2, eta(0) = 1/2).
double a_term(Sign sign, int p, int t, double q);

/// Coefficient of i: -q^{t-1} C(p+t-1, p) eta(p+t) pi for plus, 0 for minus.
double c_term(Sign sign, int p, int t, double q);

/// K^{+-}(c, p, q, t) = int_0^1 x^c log^p x Li_t(+-x^q) / (1 + x) dx from its
/// harmonic-number series. Requires c >= -1, q > 0, p, t >= 0.
SeriesResult k_integral(Sign sign, double c, int p, double q, int t, double tol = 1e-12);

/// int_0^1 log^m y / (1 + y) dy = (-1)^m m! eta(m + 1).
double log_moment(int m);

/// int_0^1 log^p x Li_t(-x^q) / x dx = (-1)^{p+1} p! eta(p+t+1) / q^{p+1}.
double first_integral(int p, double q, int t);

/// B from the double series
///   [(-1)^p + (-1)^t] sum_n (+-1)^n sum_k (-1)^k / (n^t (qn + k)^{p+1})
/// with the k-sum in closed form. Exactly 0 (no summation) when p + t is odd.
SeriesResult double_series_B(Sign sign, int p, int t, double q, double tol = 1e-12);

/// B from the Euler-sum form
///   (+-)[(-1)^p + (-1)^t][S^{+-}_{p+1,t}(q) - 2^{-p} S^{+-}_{p+1,t}(q/2) - eta(p+1) xi(t)],
/// plain sums for the plus sign. Not defined for (t, sign) == (1, plus).
SeriesResult euler_form_B(Sign sign, int p, int t, double q, double tol = 1e-12);

/// B from the K-integral: -(1 + (-1)^{p+t}) K^{+-}(0, p, q, t) / p!.
SeriesResult k_route_B(Sign sign, int p, int t, double q, double tol = 1e-12);

/// Closed-form evaluation. B uses the Euler-sum form except for
/// (t, sign) == (1, plus), which goes through double_series_B.
EvalBreakdown evaluate(const IntegralParams& params, double tol = 1e-12);

/// Specialised p == 0 formulas.
EvalBreakdown evaluate_p_zero(const IntegralParams& params, double tol = 1e-12);

/// Specialised p == t formulas: minus sign needs q == 1, plus sign needs t even.
EvalBreakdown evaluate_p_equals_t(const IntegralParams& params, double tol = 1e-12);

/// sign(b) b^{p+1} I^-(a, b, p, t) assembled term by term from K-integrals
/// and log moments.
SeriesResult minus_normalized_via_k(int p, double q, int t, double tol = 1e-12);

}  // namespace polyint
