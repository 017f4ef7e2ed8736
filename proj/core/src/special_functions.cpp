#include "polyint/special_functions.hpp"

#include <cmath>
#include <string>

#include "detail/alternating.hpp"
#include "polyint/bernoulli.hpp"
#include "polyint/constants.hpp"
#include "polyint/errors.hpp"

namespace polyint {
namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double ipow(double x, int n) {
  double result = 1.0;
  double base = x;
  unsigned e = static_cast<unsigned>(n < 0 ? -n : n);
  while (e) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return n < 0 ? 1.0 / result : result;
}

// B_{2j} / (2j)! as doubles, j = 1..32.
const double* even_bernoulli_over_factorial() {
  static const auto table = [] {
    static double v[33] = {};
    const auto& b = BernoulliTable::instance();
    for (int j = 1; j <= 32; ++j) v[j] = b.number_as_double(2 * j) / factorial(2 * j);
    return v;
  }();
  return table;
}

constexpr double kEps = 2.220446049250313e-16;
constexpr int kCachedMax = 64;

// zeta(s), s > 1: terms k < 16 summed from the small end onto the
// Euler-Maclaurin tail at k = 16.
double zeta_uncached(double s) {
  constexpr int kHead = 16;
  const double* b = even_bernoulli_over_factorial();
  const double n = kHead;
  double sum = std::pow(n, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(n, -s);
  // B_{2j}/(2j)! (s)_{2j-1} n^{-s-2j+1}
  double rising = s * std::pow(n, -s - 1.0);
  for (int j = 1; j <= 32; ++j) {
    const double term = b[j] * rising;
    sum += term;
    if (std::abs(term) < 1e-3 * kEps * sum) break;
    rising *= (s + 2 * j - 1) * (s + 2 * j) / (n * n);
  }
  for (int k = kHead - 1; k >= 1; --k) sum += std::pow(static_cast<double>(k), -s);
  return sum;
}

// zeta(n) for n = 2..64.
const double* zeta_integer_table() {
  static const auto table = [] {
    static double v[kCachedMax + 1] = {};
    for (int n = 2; n <= kCachedMax; ++n) v[n] = zeta_uncached(n);
    return v;
  }();
  return table;
}

}  // namespace

double riemann_zeta(double s) {
  if (s == 0.0) return -0.5;
  if (!(s > 1.0)) {
    throw DomainError("riemann_zeta: s = " + std::to_string(s) + " outside {0} U (1, inf)");
  }
  if (s <= kCachedMax && s == std::floor(s)) return zeta_integer_table()[static_cast<int>(s)];
  return zeta_uncached(s);
}

double dirichlet_eta(double s) {
  if (!(s >= 0.0)) throw DomainError("dirichlet_eta: s = " + std::to_string(s) + " < 0");
  if (s == 0.0) return 0.5;
  if (s == 1.0) return kLog2;
  // eta(s) = (1 - 2^{1-s}) zeta(s); the factor is formed without cancellation.
  if (s > 1.0) return -std::expm1((1.0 - s) * kLog2) * riemann_zeta(s);
  return detail::alternating_sum([s](int k) { return std::pow(static_cast<double>(k + 1), -s); },
                                 detail::kAlternatingTerms);
}

double zeta_nonpositive(int n) {
  if (n < 0 || n + 1 > kBernoulliMax) throw DomainError("zeta_nonpositive: n out of range");
  if (n == 0) return -0.5;
  const double b = BernoulliTable::instance().number_as_double(n + 1);
  return ((n % 2 == 0) ? 1.0 : -1.0) * b / (n + 1);
}

double digamma(double x) {
  if (!std::isfinite(x)) throw DomainError("digamma: non-finite argument");
  if (is_nonpositive_integer(x)) throw PoleError("digamma: pole at " + std::to_string(x));
  if (x < 0.0) {
    // psi(x) = psi(1 - x) - pi cot(pi x)
    const double frac = x - std::floor(x);
    return digamma(1.0 - x) - kPi / std::tan(kPi * frac);
  }
  double shift = 0.0;
  while (x < 10.0) {
    shift += 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  const double* b = even_bernoulli_over_factorial();
  // psi(x) ~ log x - 1/(2x) - sum_j B_{2j} / (2j x^{2j})
  double series = 0.0;
  double pw = inv2;
  for (int j = 1; j <= 12; ++j) {
    const double term = b[j] * factorial(2 * j - 1) * pw;
    series += term;
    if (std::abs(term) < 1e-18) break;
    pw *= inv2;
  }
  return std::log(x) - 0.5 / x - series - shift;
}

double hurwitz_zeta(int s, double x) {
  if (s < 2) throw DomainError("hurwitz_zeta: order s = " + std::to_string(s) + " < 2");
  if (!std::isfinite(x)) throw DomainError("hurwitz_zeta: non-finite argument");
  if (is_nonpositive_integer(x)) throw PoleError("hurwitz_zeta: pole at " + std::to_string(x));

  const double threshold = std::max(15.0, static_cast<double>(s));
  int shift = 0;
  if (x < threshold) shift = static_cast<int>(std::ceil(threshold - x));
  const double y = x + shift;

  // zeta(s, y) ~ y^{1-s}/(s-1) + y^{-s}/2 + sum_j B_{2j}/(2j)! (s)_{2j-1} y^{-s-2j+1}
  const double y_s = ipow(y, -s);
  double asym = y * y_s / (s - 1) + 0.5 * y_s;
  const double* b = even_bernoulli_over_factorial();
  const double inv2 = 1.0 / (y * y);
  double rising = s;  // (s)_{2j-1}
  double pw = y_s / y;  // y^{-s-2j+1} at j = 1
  for (int j = 1; j <= 30; ++j) {
    const double term = b[j] * rising * pw;
    asym += term;
    if (std::abs(term) < kEps * 1e-2 * std::abs(asym)) break;
    rising *= static_cast<double>(s + 2 * j - 1) * static_cast<double>(s + 2 * j);
    pw *= inv2;
  }
  double head = 0.0;
  for (int i = shift - 1; i >= 0; --i) head += ipow(x + i, -s);
  return head + asym;
}

double polygamma(int k, double x) {
  if (k < 0) throw DomainError("polygamma: negative order");
  if (k == 0) return digamma(x);
  const double sign = (k % 2 == 1) ? 1.0 : -1.0;  // (-1)^{k+1}
  return sign * factorial(k) * hurwitz_zeta(k + 1, x);
}

double harmonic_extended(double lambda, int p) {
  if (p < 1) throw DomainError("harmonic_extended: order p must be >= 1");
  if (!std::isfinite(lambda)) throw DomainError("harmonic_extended: non-finite index");
  if (lambda <= -1.0) {
    throw PoleError("harmonic_extended: index " + std::to_string(lambda) + " <= -1");
  }
  if (lambda == std::floor(lambda) && lambda <= 64.0) {
    const int n = static_cast<int>(lambda);
    double sum = 0.0;
    for (int j = n; j >= 1; --j) sum += ipow(static_cast<double>(j), -p);
    return sum;
  }
  if (p == 1) return kEulerGamma + digamma(lambda + 1.0);
  return riemann_zeta(p) - hurwitz_zeta(p, lambda + 1.0);
}

}  // namespace polyint
