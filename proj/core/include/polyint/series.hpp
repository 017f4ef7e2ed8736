#pragma once

#include <vector>

#include "polyint/types.hpp"

namespace polyint {

/// Weighting of the n-th summand.
enum class SumKind {
  plain,        ///< weight 1
  alternating,  ///< weight (-1)^{n+1}
};

/// One Z(order, scale * n + shift) term of a HurwitzLinearSeries.
struct HurwitzTerm {
  double coefficient = 1.0;
  double shift = 0.0;
};

/// sum_{n>=1} w(n) n^{-t} [ constant + sum_i c_i Z(order, scale * n + shift_i) ]
///
/// where Z(s, x) = zeta(s, x) (Hurwitz) for s >= 2 and Z(1, x) = -psi(x).
/// Euler sums and the K-integral series are both of this shape.
struct HurwitzLinearSeries {
  SumKind kind = SumKind::plain;
  int t = 1;
  int order = 2;
  double scale = 1.0;
  double constant = 0.0;
  std::vector<HurwitzTerm> terms;
};

/// Evaluate Z(order, x) as defined above.
double hurwitz_z(int order, double x);

/// Sum the series to absolute tolerance `tol`.
///
/// The first M - 1 terms are added explicitly, with M chosen so that
/// scale * M >= 40 and M >= 8 (plain) or M >= 14 (alternating); the remainder
/// is summed from the large-n expansion of the summand, plain tails by
/// Euler-Maclaurin and alternating tails by Boole summation. Throws
/// DivergenceError when the series does not converge and PoleError when an
/// explicit term hits a pole.
SeriesResult sum_series(const HurwitzLinearSeries& series, double tol,
                        SeriesTrace* trace = nullptr);

/// sum_{n>=m} w(n) n^{-sigma} log^{with_log}(n), m >= 1.
double power_log_tail(SumKind kind, double sigma, bool with_log, long m);

/// Explicit-term cap: POLYINT_MAX_TERMS if set to a positive integer, else 10^7.
long max_series_terms();

}  // namespace polyint
