#include "polyint/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <string>
#include <utility>

#include "polyint/bernoulli.hpp"
#include "polyint/errors.hpp"
#include "polyint/special_functions.hpp"

namespace polyint {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Explicit summation continues until scale * n reaches this value.
constexpr double kAsymptoticStart = 40.0;
// The Euler-Maclaurin and Boole expansions at x = m are accurate to about
// exp(-2 pi m) and exp(-pi m) respectively.
constexpr long kMinTailStartPlain = 8;
constexpr long kMinTailStartAlternating = 14;
constexpr int kMaxExpansionOrder = 40;
constexpr int kMaxCorrectionTerms = 30;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Euler-Maclaurin (plain) or Boole (alternating) correction for
// f(x) = (a log x + b) x^{-sigma} at x = m. The size of the first omitted
// term is added to *remainder.
double em_correction(SumKind kind, double sigma, bool with_log, double m, double* remainder) {
  const auto& bern = BernoulliTable::instance();
  const double log_m = std::log(m);
  const double base = std::pow(m, -sigma);
  // f^{(k)}(m) = (a_k log m + b_k) m^{-sigma-k}; track A_k = a_k m^{-k}, B_k = b_k m^{-k}.
  double a = with_log ? 1.0 : 0.0;
  double b = with_log ? 0.0 : 1.0;
  const double f0 = (a * log_m + b) * base;
  double correction = 0.5 * f0;
  double previous = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 2 * kMaxCorrectionTerms; ++k) {
    const double next_a = -(sigma + k) * a / m;
    const double next_b = (-(sigma + k) * b + a) / m;
    a = next_a;
    b = next_b;
    const int order = k + 1;  // derivative order now held in (a, b)
    if (order % 2 == 0) continue;
    const int j = (order + 1) / 2;
    double coeff = bern.number_as_double(2 * j) / factorial(2 * j);
    if (kind == SumKind::alternating) coeff *= std::ldexp(1.0, 2 * j) - 1.0;
    const double term = coeff * (a * log_m + b) * base;
    if (std::abs(term) > std::abs(previous)) {  // asymptotic series turned
      if (remainder) *remainder += std::abs(previous);
      return correction;
    }
    correction -= term;
    previous = term;
    if (std::abs(term) < kEps * 1e-3 * std::abs(correction)) return correction;
  }
  if (remainder) *remainder += std::abs(previous);
  return correction;
}

// Coefficients of the large-n expansion of the summand:
//   sum over (sigma, with_log) of coefficient * n^{-sigma} log^{with_log} n.
struct ExpansionTerm {
  double sigma;
  bool with_log;
  double coefficient;
  int order;  // expansion order k that produced it (0 for leading pieces)
};

// (s)_{k-1} / k! for k >= 1.
double rising_over_factorial(int s, int k) {
  double v = 1.0;
  for (int i = 0; i < k - 1; ++i) v *= static_cast<double>(s + i);
  return v / factorial(k);
}

std::vector<ExpansionTerm> expansion(const HurwitzLinearSeries& series) {
  std::vector<ExpansionTerm> out;
  const int s = series.order;
  const double alpha = series.scale;
  const double t = series.t;
  double coef_sum = 0.0;
  for (const auto& term : series.terms) coef_sum += term.coefficient;

  if (series.constant != 0.0) out.push_back({t, false, series.constant, 0});
  if (coef_sum != 0.0) {
    if (s >= 2) {
      out.push_back({t + s - 1, false, coef_sum * std::pow(alpha, 1 - s) / (s - 1), 0});
    } else {
      // -psi(x) ~ -log x: -log(alpha) - log n
      out.push_back({t, false, -coef_sum * std::log(alpha), 0});
      out.push_back({t, true, -coef_sum, 0});
    }
  }
  for (int k = 1; k <= kMaxExpansionOrder; ++k) {
    double c = 0.0;
    for (const auto& term : series.terms) {
      c += term.coefficient * bernoulli_polynomial(k, term.shift);
    }
    c *= ((k % 2 == 0) ? 1.0 : -1.0) * rising_over_factorial(s, k) * std::pow(alpha, 1 - s - k);
    out.push_back({t + s + k - 1, false, c, k});
  }
  return out;
}

long env_max_terms() {
  if (const char* env = std::getenv("POLYINT_MAX_TERMS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000L;
}

}  // namespace

long max_series_terms() { return env_max_terms(); }

double hurwitz_z(int order, double x) {
  if (order == 1) return -digamma(x);
  return hurwitz_zeta(order, x);
}

namespace {

double tail_with_remainder(SumKind kind, double sigma, bool with_log, long m, double* remainder) {
  if (m < 1) throw DomainError("power_log_tail: start index must be >= 1");
  const double dm = static_cast<double>(m);
  if (kind == SumKind::plain) {
    if (!(sigma > 1.0)) throw DivergenceError("power_log_tail: plain tail with sigma <= 1");
    // int_m^inf (a log x + b) x^{-sigma} dx
    const double s1 = sigma - 1.0;
    const double lead = std::pow(dm, -s1);
    const double integral = with_log ? lead * (std::log(dm) / s1 + 1.0 / (s1 * s1)) : lead / s1;
    return integral + em_correction(kind, sigma, with_log, dm, remainder);
  }
  if (!(sigma > 0.0)) throw DivergenceError("power_log_tail: alternating tail with sigma <= 0");
  const double sign = (m % 2 == 1) ? 1.0 : -1.0;  // (-1)^{m+1}
  return sign * em_correction(kind, sigma, with_log, dm, remainder);
}

}  // namespace

double power_log_tail(SumKind kind, double sigma, bool with_log, long m) {
  if (m < 1) throw DomainError("power_log_tail: start index must be >= 1");
  const long start = std::max(m, kind == SumKind::plain ? kMinTailStartPlain : kMinTailStartAlternating);
  const double tail = tail_with_remainder(kind, sigma, with_log, start, nullptr);
  double head = 0.0;
  for (long n = start - 1; n >= m; --n) {
    const double dn = static_cast<double>(n);
    double term = std::pow(dn, -sigma);
    if (with_log) term *= std::log(dn);
    head += (kind == SumKind::alternating && n % 2 == 0) ? -term : term;
  }
  return head + tail;
}

SeriesResult sum_series(const HurwitzLinearSeries& series, double tol, SeriesTrace* trace) {
  if (series.order < 1) throw DomainError("sum_series: order must be >= 1");
  if (!(series.scale > 0.0) || !std::isfinite(series.scale)) {
    throw DomainError("sum_series: scale must be positive and finite");
  }
  if (series.t < 0) throw DomainError("sum_series: t must be >= 0");
  if (!(tol > 0.0)) throw DomainError("sum_series: tolerance must be positive");

  auto terms = expansion(series);

  // Divergence: a non-vanishing piece decaying no faster than n^{-1} (plain)
  // or n^0 (alternating).
  {
    std::map<std::pair<double, bool>, double> low;
    double scale_ref = 0.0;
    for (const auto& e : terms) {
      if (e.order == 0) scale_ref = std::max(scale_ref, std::abs(e.coefficient));
    }
    const double limit = series.kind == SumKind::plain ? 1.0 : 0.0;
    for (const auto& e : terms) {
      if (e.sigma <= limit) low[{e.sigma, e.with_log}] += e.coefficient;
    }
    for (const auto& [key, c] : low) {
      if (std::abs(c) > 1e-14 * std::max(1.0, scale_ref)) {
        throw DivergenceError("series diverges: summand decays like n^{-" +
                              std::to_string(key.first) + "}" + (key.second ? " log n" : ""));
      }
    }
    std::erase_if(terms, [limit](const ExpansionTerm& e) { return e.sigma <= limit; });
  }

  const long cap = max_series_terms();
  long m = static_cast<long>(std::ceil(kAsymptoticStart / series.scale));
  m = std::max(m, series.kind == SumKind::plain ? kMinTailStartPlain : kMinTailStartAlternating);
  const bool capped = m - 1 > cap;
  if (capped) m = cap + 1;

  for (const auto& term : series.terms) {
    const double first = series.scale + term.shift;
    if (first <= 0.0 && first == std::floor(first)) {
      throw PoleError("sum_series: explicit term hits a pole at argument " + std::to_string(first));
    }
  }

  SeriesResult result;
  double head = 0.0;
  double magnitude = 0.0;
  if (trace) trace->partial_sums.reserve(static_cast<std::size_t>(m - 1));
  for (long n = 1; n < m; ++n) {
    const double dn = static_cast<double>(n);
    double bracket = series.constant;
    for (const auto& term : series.terms) {
      bracket += term.coefficient * hurwitz_z(series.order, series.scale * dn + term.shift);
    }
    double summand = bracket * std::pow(dn, -series.t);
    if (series.kind == SumKind::alternating && n % 2 == 0) summand = -summand;
    head += summand;
    magnitude += std::abs(summand);
    if (trace) trace->partial_sums.push_back(head);
  }

  // Tail from the expansion; k-orders are added while they keep shrinking.
  double tail = 0.0;
  double truncation = 0.0;
  double em_remainder = 0.0;
  double last_order_size = std::numeric_limits<double>::infinity();
  int current_order = -1;
  double order_sum = 0.0;
  bool stopped = false;
  auto flush_order = [&](int order) {
    if (order <= 0) {
      tail += order_sum;
      return true;
    }
    const double size = std::abs(order_sum);
    if (size > last_order_size && size > 0.0) {
      truncation = last_order_size;
      return false;
    }
    tail += order_sum;
    if (size != 0.0) last_order_size = size;
    return true;
  };
  for (const auto& e : terms) {
    if (e.order != current_order) {
      if (current_order >= 0 && !flush_order(current_order)) {
        stopped = true;
        break;
      }
      current_order = e.order;
      order_sum = 0.0;
      if (current_order > 0 && last_order_size < kEps * 1e-3 * std::abs(head + tail)) {
        stopped = true;
        truncation = last_order_size;
        break;
      }
    }
    if (e.coefficient != 0.0) {
      double r = 0.0;
      order_sum += e.coefficient * tail_with_remainder(series.kind, e.sigma, e.with_log, m, &r);
      em_remainder += std::abs(e.coefficient) * r;
    }
  }
  if (!stopped && current_order >= 0 && flush_order(current_order)) {
    truncation = last_order_size;
  }

  result.value = head + tail;
  result.terms = m - 1;
  result.abs_error = truncation + em_remainder + 8.0 * kEps * (magnitude + std::abs(tail));
  result.converged = result.abs_error <= tol && std::isfinite(result.value);
  return result;
}

}  // namespace polyint
