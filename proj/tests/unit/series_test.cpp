#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

#include "polyint/constants.hpp"
#include "polyint/errors.hpp"
#include "polyint/series.hpp"
#include "polyint/special_functions.hpp"
#include "reference.hpp"

namespace polyint {
namespace {

using test::rel_diff;

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) {
    if (const char* old = std::getenv(name)) {
      had_old_ = true;
      old_ = old;
    }
    setenv(name, value, 1);
  }
  ~ScopedEnv() {
    if (had_old_) {
      setenv(name_, old_.c_str(), 1);
    } else {
      unsetenv(name_);
    }
  }

 private:
  const char* name_;
  bool had_old_ = false;
  std::string old_;
};

TEST(PowerLogTail, PlainPowerTail) {
  long double head = 0.0L;
  for (int n = 1; n < 10; ++n) head += std::pow(static_cast<long double>(n), -2.5L);
  const double expected = static_cast<double>(test::zeta_direct(2.5L) - head);
  EXPECT_LE(rel_diff(power_log_tail(SumKind::plain, 2.5, false, 10), expected), 1e-13);
}

TEST(PowerLogTail, PlainLogTail) {
  // Direct sum to N plus the integral and midpoint corrections beyond it.
  const int m = 5;
  const int n_max = 200000;
  long double sum = 0.0L;
  for (int n = n_max - 1; n >= m; --n) {
    const long double x = n;
    sum += std::log(x) / (x * x * x);
  }
  const long double N = n_max;
  const long double l = std::log(N);
  sum += (l / 2.0L + 0.25L) / (N * N) + 0.5L * l / (N * N * N);
  EXPECT_LE(rel_diff(power_log_tail(SumKind::plain, 3.0, true, m), static_cast<double>(sum)), 1e-11);
}

TEST(PowerLogTail, AlternatingTails) {
  EXPECT_NEAR(power_log_tail(SumKind::alternating, 1.0, false, 1), kLog2, 1e-15);
  EXPECT_NEAR(power_log_tail(SumKind::alternating, 0.5, false, 1), dirichlet_eta(0.5), 1e-14);
  // sum (-1)^{n+1} log(n) / n = log^2(2)/2 - gamma log 2
  EXPECT_NEAR(power_log_tail(SumKind::alternating, 1.0, true, 1),
              0.5 * kLog2 * kLog2 - kEulerGamma * kLog2, 1e-14);
  // Starting at an even index flips the sign of the first term.
  EXPECT_NEAR(power_log_tail(SumKind::alternating, 2.0, false, 2), dirichlet_eta(2.0) - 1.0, 1e-15);
}

TEST(PowerLogTail, Errors) {
  EXPECT_THROW(power_log_tail(SumKind::plain, 1.0, false, 3), DivergenceError);
  EXPECT_THROW(power_log_tail(SumKind::alternating, 0.0, true, 3), DivergenceError);
  EXPECT_THROW(power_log_tail(SumKind::plain, 2.0, false, 0), DomainError);
}

TEST(SumSeries, HurwitzTermReproducesZetaProduct) {
  // sum_n n^{-2} zeta(3, n) = sum_n n^{-2} (zeta(3) - H_{n-1}^{(3)})
  HurwitzLinearSeries series;
  series.t = 2;
  series.order = 3;
  series.terms = {{1.0, 0.0}};
  const SeriesResult r = sum_series(series, 1e-13);
  // zeta(3, n) = zeta(3) - H^{(3)}_n + n^{-3}, and S_{3,2} = 11/2 zeta(5) - 2 zeta(2) zeta(3)
  const double expected = riemann_zeta(2) * riemann_zeta(3) -
                          (5.5 * riemann_zeta(5) - 2.0 * riemann_zeta(2) * riemann_zeta(3)) +
                          riemann_zeta(5);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, expected, 1e-14);
  EXPECT_LE(r.abs_error, 1e-13);
}

TEST(SumSeries, DivergentSeriesThrows) {
  HurwitzLinearSeries series;
  series.t = 1;
  series.constant = 1.0;
  EXPECT_THROW(sum_series(series, 1e-12), DivergenceError);

  HurwitzLinearSeries digamma_growth;
  digamma_growth.kind = SumKind::alternating;
  digamma_growth.t = 0;
  digamma_growth.order = 1;
  digamma_growth.terms = {{1.0, 0.5}};
  EXPECT_THROW(sum_series(digamma_growth, 1e-12), DivergenceError);
}

TEST(SumSeries, PoleInExplicitTermThrows) {
  HurwitzLinearSeries series;
  series.t = 2;
  series.order = 2;
  series.terms = {{1.0, -1.0}};
  EXPECT_THROW(sum_series(series, 1e-12), PoleError);
}

TEST(SumSeries, InvalidArgumentsThrow) {
  HurwitzLinearSeries series;
  series.scale = 0.0;
  EXPECT_THROW(sum_series(series, 1e-12), DomainError);
  series.scale = 1.0;
  EXPECT_THROW(sum_series(series, 0.0), DomainError);
  series.order = 0;
  EXPECT_THROW(sum_series(series, 1e-12), DomainError);
}

TEST(SumSeries, TraceOfPositiveSeriesIsIncreasing) {
  HurwitzLinearSeries series;
  series.t = 3;
  series.order = 2;
  series.scale = 0.05;
  series.terms = {{1.0, 1.0}};
  SeriesTrace trace;
  const SeriesResult r = sum_series(series, 1e-12, &trace);
  ASSERT_EQ(static_cast<long>(trace.partial_sums.size()), r.terms);
  ASSERT_GT(trace.partial_sums.size(), 100u);
  for (std::size_t i = 1; i < trace.partial_sums.size(); ++i) {
    EXPECT_GT(trace.partial_sums[i], trace.partial_sums[i - 1]);
  }
  EXPECT_GE(r.value, trace.partial_sums.back());
}

TEST(SumSeries, TermCapFromEnvironment) {
  EXPECT_EQ(max_series_terms(), 10'000'000L);
  ScopedEnv env("POLYINT_MAX_TERMS", "5");
  EXPECT_EQ(max_series_terms(), 5);

  HurwitzLinearSeries series;
  series.t = 2;
  series.order = 2;
  series.scale = 0.001;
  series.terms = {{1.0, 1.0}};
  const SeriesResult r = sum_series(series, 1e-12);
  EXPECT_EQ(r.terms, 5);
  EXPECT_FALSE(r.converged);
}

TEST(SumSeries, IgnoresMalformedTermCap) {
  ScopedEnv env("POLYINT_MAX_TERMS", "lots");
  EXPECT_EQ(max_series_terms(), 10'000'000L);
}

}  // namespace
}  // namespace polyint
