#pragma once

#include "polyint/types.hpp"

namespace polyint {

/// Li_m(x) = sum_{k>=1} x^k / k^m for |x| <= 1, m >= 1; Li_1(x) = -log(1 - x).
/// Throws DivergenceError for (m == 1, x == 1) and DomainError for |x| > 1.
double polylog_unit(int m, double x);

/// Li_m on the whole real line.
///
/// For x > 1 the value is the boundary value consistent with the principal
/// logarithm, Li_1(x) = -Log(1 - x), i.e. the limit from below the cut:
///   Li_m(x) = (-1)^{m+1} Li_m(1/x) + 2 sum_{j=0}^{m/2} log^{m-2j}(x)/(m-2j)! zeta(2j)
///             - i pi log^{m-1}(x)/(m-1)!
/// For x < -1 the value is real (Jonquiere's relation with eta(2j)).
Complex polylog_continued(int m, double x);

/// Li_m(e^mu) for real mu, m >= 0, same branch as polylog_continued.
/// Accurate near mu = 0, where 1 - e^mu cancels.
Complex polylog_exp(int m, double mu);

/// Li_m(-e^mu) for real mu, m >= 0. Always real.
double polylog_neg_exp(int m, double mu);

}  // namespace polyint
