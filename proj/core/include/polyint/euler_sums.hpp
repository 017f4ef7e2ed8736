#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyint/series.hpp"
#include "polyint/types.hpp"

namespace polyint {

/// Identifies S_{p,t}(r) = sum_n H^{(p)}_{rn} / n^t (plain) or
/// S^{+-}_{p,t}(r) = sum_n (-1)^{n+1} H^{(p)}_{rn} / n^t (alternating).
struct EulerSumSpec {
  SumKind kind = SumKind::plain;
  int p = 1;
  int t = 2;
  double r = 1.0;

  int weight() const { return p + t; }
  /// Throws DomainError (DivergenceError for plain t == 1).
  void validate() const;
};

std::string describe(const EulerSumSpec& spec);

inline constexpr double kMinSeriesTolerance = 1e-13;

/// Numerically sums the Euler sum. tol must be >= 1e-13.
SeriesResult euler_sum(const EulerSumSpec& spec, double tol = 1e-12,
                       SeriesTrace* trace = nullptr);

struct ScaledDecomposition {
  double lhs;  ///< S_{p,t}(2)
  double rhs;  ///< 2^{t-1} (S_{p,t} - S^{+-}_{p,t})
};

/// Both sides of S_{p,t}(2) = 2^{t-1}(S_{p,t} - S^{+-}_{p,t}), t >= 2.
ScaledDecomposition scaled_decomposition(int p, int t, double tol = 1e-12);

/// S^{+-}_{1,t} for even t >= 2:
/// (1/2)[(t+1) eta(t+1) - zeta(t+1) - 2 sum_{j=1}^{t/2-1} eta(2j) zeta(t+1-2j)].
double alternating_linear_sum(int t);

/// S^{+-}_{1,t}(1/2) for even t >= 2:
/// (1/2)[(t+3) eta(t+1) - (t+1) zeta(t+1) - 2^{1-t} sum_{j=1}^{t/2-1} 4^j eta(2j) zeta(t+1-2j)].
double half_scaled_identity(int t);

/// A known evaluation: sum_i weight_i * S(spec_i) == value.
struct KnownClosedForm {
  std::string label;
  std::string expression;
  std::vector<std::pair<double, EulerSumSpec>> combination;
  double value;
};

const std::vector<KnownClosedForm>& known_closed_forms();

/// The single-sum table entry matching `spec`, if any.
std::optional<KnownClosedForm> find_closed_form(const EulerSumSpec& spec);

}  // namespace polyint
