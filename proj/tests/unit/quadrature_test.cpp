#include <gtest/gtest.h>

#include <cmath>

#include "polyint/constants.hpp"
#include "polyint/quadrature.hpp"

namespace polyint {
namespace {

TEST(ExpSinh, SmoothHalfLineIntegrals) {
  QuadratureOptions options;
  options.tol = 1e-13;
  options.upper_cutoff = 800.0;
  const QuadratureResult r = exp_sinh([](double x) { return Complex(std::exp(-x), 0.0); }, options);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value.real(), 1.0, 1e-14);
  EXPECT_GT(r.evaluations, 0);
  EXPECT_GE(r.abs_error_estimate, 0.0);
  EXPECT_GE(r.levels_used, options.min_level);

  const QuadratureResult cubic =
      exp_sinh([](double x) { return Complex(x * x * x * std::exp(-x), 0.0); }, options);
  EXPECT_NEAR(cubic.value.real(), 6.0, 1e-13);
}

TEST(ExpSinh, EndpointLogSingularity) {
  QuadratureOptions options;
  options.tol = 1e-12;
  options.upper_cutoff = 800.0;
  // int_0^inf log(x) e^{-x} dx = -gamma
  const QuadratureResult r =
      exp_sinh([](double x) { return Complex(std::log(x) * std::exp(-x), 0.0); }, options);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value.real(), -kEulerGamma, 1e-12);
}

TEST(ExpSinh, ComplexIntegrandSharesNodes) {
  QuadratureOptions options;
  options.upper_cutoff = 800.0;
  const QuadratureResult r = exp_sinh(
      [](double x) { return Complex(std::exp(-x), -2.0 * std::exp(-2.0 * x)); }, options);
  EXPECT_NEAR(r.value.real(), 1.0, 1e-12);
  EXPECT_NEAR(r.value.imag(), -1.0, 1e-12);
}

TEST(TanhSinh, EndpointSingularities) {
  QuadratureOptions options;
  options.tol = 1e-13;
  const QuadratureResult log_r =
      tanh_sinh([](double x, double) { return Complex(std::log(x), 0.0); }, options);
  EXPECT_TRUE(log_r.converged);
  EXPECT_NEAR(log_r.value.real(), -1.0, 1e-13);

  // Needs the complement: 1 - x is tiny near the right end.
  const QuadratureResult sqrt_r =
      tanh_sinh([](double, double omx) { return Complex(1.0 / std::sqrt(omx), 0.0); }, options);
  EXPECT_NEAR(sqrt_r.value.real(), 2.0, 1e-12);

  const QuadratureResult poly =
      tanh_sinh([](double x, double) { return Complex(x * x, 0.0); }, options);
  EXPECT_NEAR(poly.value.real(), 1.0 / 3.0, 1e-15);
}

TEST(TanhSinh, ReportsNonConvergenceAtLevelCap) {
  QuadratureOptions options;
  options.tol = 1e-15;
  options.min_level = 1;
  options.max_level = 2;
  const QuadratureResult r =
      tanh_sinh([](double x, double) { return Complex(std::cos(40.0 * x), 0.0); }, options);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.levels_used, 2);
  EXPECT_GT(r.abs_error_estimate, 1e-15);
}

TEST(TanhSinh, Deterministic) {
  auto f = [](double x, double omx) { return Complex(std::log(x) * std::log(omx), 0.0); };
  const QuadratureResult a = tanh_sinh(f);
  const QuadratureResult b = tanh_sinh(f);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.abs_error_estimate, b.abs_error_estimate);
  EXPECT_NEAR(a.value.real(), 2.0 - kPi * kPi / 6.0, 1e-10);
}

}  // namespace
}  // namespace polyint
