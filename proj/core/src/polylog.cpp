#include "polyint/polylog.hpp"

#include <cmath>
#include <string>

#include "detail/alternating.hpp"
#include "polyint/bernoulli.hpp"
#include "polyint/constants.hpp"
#include "polyint/errors.hpp"
#include "polyint/special_functions.hpp"

namespace polyint {
namespace {

constexpr double kEps = 2.220446049250313e-16;
// |mu| at or below this uses the expansion in powers of mu.
constexpr double kExpansionRadius = 1.0;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double harmonic(int n) {
  double h = 0.0;
  for (int j = n; j >= 1; --j) h += 1.0 / j;
  return h;
}

// sum_{k>=1} x^k / k^m for 0 < x <= e^{-1}
double direct_series(int m, double x) {
  double sum = 0.0;
  double pw = x;
  for (int k = 1; k < 2000; ++k) {
    const double term = pw / std::pow(static_cast<double>(k), m);
    sum += term;
    if (term < kEps * 1e-2 * sum) break;
    pw *= x;
  }
  return sum;
}

// Li_m(e^mu) = sum_{k != m-1} zeta(m-k) mu^k / k!
//            + mu^{m-1}/(m-1)! [H_{m-1} - log(-mu)],   |mu| < 2 pi.
Complex expansion_about_one(int m, double mu) {
  double real = 0.0;
  double pw = 1.0;  // mu^k / k!
  int quiet = 0;
  for (int k = 0;; ++k) {
    if (k > 0) pw *= mu / k;
    if (k == m - 1) continue;
    const int arg = m - k;
    if (arg <= 0 && -arg + 1 > kBernoulliMax) break;
    const double z = arg >= 2 ? riemann_zeta(arg) : zeta_nonpositive(-arg);
    const double term = z * pw;
    real += term;
    if (k > m + 1) {
      if (std::abs(term) < kEps * 1e-2 * std::abs(real)) {
        if (++quiet >= 2) break;
      } else if (term != 0.0) {
        quiet = 0;
      }
    }
  }
  // Principal log: log(-mu) = log|mu| + i pi for mu > 0.
  const double lead = std::pow(mu, m - 1) / factorial(m - 1);
  const double log_abs = std::log(std::abs(mu));
  real += lead * (harmonic(m - 1) - log_abs);
  const double imag = mu > 0.0 ? -kPi * lead : 0.0;
  return {real, imag};
}

}  // namespace

Complex polylog_exp(int m, double mu) {
  if (m < 0) throw DomainError("polylog: negative order");
  if (std::isnan(mu)) throw DomainError("polylog: NaN argument");
  if (m == 0) {
    if (mu == 0.0) throw DivergenceError("Li_0(1) diverges");
    return 1.0 / std::expm1(-mu);
  }
  if (mu == 0.0) {
    if (m == 1) throw DivergenceError("Li_1(1) diverges");
    return riemann_zeta(m);
  }
  if (m == 1 && mu < 0.0) {
    return mu < -kLog2 ? -std::log1p(-std::exp(mu)) : -std::log(-std::expm1(mu));
  }
  if (mu < -kExpansionRadius) return direct_series(m, std::exp(mu));
  if (mu <= kExpansionRadius) return expansion_about_one(m, mu);

  // Inversion: Li_m(x) = (-1)^{m+1} Li_m(1/x) + 2 sum_j log^{m-2j}(x)/(m-2j)! zeta(2j)
  //                      - i pi log^{m-1}(x)/(m-1)!
  double real = ((m % 2 == 1) ? 1.0 : -1.0) * polylog_exp(m, -mu).real();
  for (int j = 0; 2 * j <= m; ++j) {
    const double z2j = j == 0 ? -0.5 : riemann_zeta(2 * j);
    real += 2.0 * std::pow(mu, m - 2 * j) / factorial(m - 2 * j) * z2j;
  }
  const double imag = -kPi * std::pow(mu, m - 1) / factorial(m - 1);
  return {real, imag};
}

double polylog_neg_exp(int m, double mu) {
  if (m < 0) throw DomainError("polylog: negative order");
  if (std::isnan(mu)) throw DomainError("polylog: NaN argument");
  if (m == 0) return -1.0 / (1.0 + std::exp(-mu));
  if (m == 1) return mu > 0.0 ? -(mu + std::log1p(std::exp(-mu))) : -std::log1p(std::exp(mu));
  if (mu <= 0.0) {
    const double y = std::exp(mu);
    if (y == 0.0) return 0.0;
    // Li_m(-y) = -sum_{k>=0} (-1)^k y^{k+1} / (k+1)^m
    return -detail::alternating_sum(
        [y, m](int k) { return std::pow(y, k + 1) / std::pow(static_cast<double>(k + 1), m); },
        detail::kAlternatingTerms);
  }
  // Li_m(-x) = -(-1)^m Li_m(-1/x) - 2 sum_j log^{m-2j}(x)/(m-2j)! eta(2j)
  double value = ((m % 2 == 0) ? -1.0 : 1.0) * polylog_neg_exp(m, -mu);
  for (int j = 0; 2 * j <= m; ++j) {
    value -= 2.0 * std::pow(mu, m - 2 * j) / factorial(m - 2 * j) * dirichlet_eta(2 * j);
  }
  return value;
}

double polylog_unit(int m, double x) {
  if (m < 1) throw DomainError("polylog_unit: order must be >= 1");
  if (!(std::abs(x) <= 1.0)) {
    throw DomainError("polylog_unit: |x| = " + std::to_string(std::abs(x)) + " > 1");
  }
  if (x == 0.0) return 0.0;
  if (m == 1) {
    if (x == 1.0) throw DivergenceError("Li_1(1) diverges");
    return -std::log1p(-x);
  }
  if (x > 0.0) return polylog_exp(m, std::log(x)).real();
  return polylog_neg_exp(m, std::log(-x));
}

Complex polylog_continued(int m, double x) {
  if (m < 1) throw DomainError("polylog_continued: order must be >= 1");
  if (!std::isfinite(x)) throw DomainError("polylog_continued: non-finite argument");
  if (x == 0.0) return 0.0;
  if (std::abs(x) <= 1.0) return polylog_unit(m, x);
  if (x > 0.0) return polylog_exp(m, std::log(x));
  return polylog_neg_exp(m, std::log(-x));
}

}  // namespace polyint
