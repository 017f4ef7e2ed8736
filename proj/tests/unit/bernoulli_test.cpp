#include <gtest/gtest.h>

#include <stdexcept>

#include "polyint/bernoulli.hpp"
#include "polyint/constants.hpp"
#include "polyint/special_functions.hpp"

namespace polyint {
namespace {

TEST(BernoulliNumbers, LeadingValues) {
  EXPECT_EQ(bernoulli_number(0), Rational(1));
  EXPECT_EQ(bernoulli_number(1), Rational(-1, 2));
  EXPECT_EQ(bernoulli_number(2), Rational(1, 6));
  EXPECT_EQ(bernoulli_number(7), Rational(0));
  EXPECT_EQ(bernoulli_number(12), Rational(-691, 2730));
}

TEST(BernoulliNumbers, OddIndicesVanish) {
  for (int n = 1; 2 * n + 1 <= kBernoulliMax; ++n) {
    EXPECT_EQ(bernoulli_number(2 * n + 1), Rational(0)) << "n = " << n;
  }
}

TEST(BernoulliNumbers, DefiningRecurrenceHoldsExactly) {
  for (int m = 1; m <= 32; ++m) {
    Rational sum = 0;
    for (int j = 0; j <= m; ++j) sum += Rational(binomial(m + 1, j)) * bernoulli_number(j);
    EXPECT_EQ(sum, Rational(0)) << "m = " << m;
  }
}

TEST(BernoulliNumbers, IndexOutOfRange) {
  EXPECT_THROW(bernoulli_number(kBernoulliMax + 1), std::out_of_range);
  EXPECT_THROW(bernoulli_number(-1), std::out_of_range);
  EXPECT_EQ(BernoulliTable::instance().max_index(), 64);
}

TEST(BernoulliPolynomials, Examples) {
  EXPECT_EQ(bernoulli_polynomial(3, 0.0), 0.0);
  EXPECT_EQ(bernoulli_polynomial(0, 7.5), 1.0);
  EXPECT_DOUBLE_EQ(bernoulli_polynomial(2, 0.5), -1.0 / 12.0);
  // B_3(x) = x^3 - 3x^2/2 + x/2
  EXPECT_DOUBLE_EQ(bernoulli_polynomial(3, 0.25), 0.015625 - 0.09375 + 0.125);
}

TEST(BernoulliPolynomials, AtZeroEqualsNumbers) {
  const auto& table = BernoulliTable::instance();
  for (int m = 0; m <= 32; ++m) {
    EXPECT_EQ(bernoulli_polynomial(m, 0.0), table.number_as_double(m)) << "m = " << m;
  }
}

TEST(BernoulliPolynomials, UnitDifference) {
  EXPECT_EQ(bernoulli_polynomial(1, 1.0) - bernoulli_polynomial(1, 0.0), 1.0);
  for (int m = 2; m <= 32; ++m) {
    EXPECT_EQ(bernoulli_polynomial(m, 1.0) - bernoulli_polynomial(m, 0.0), 0.0) << "m = " << m;
  }
}

TEST(BernoulliPolynomials, HalfArgumentIdentity) {
  // B_m(1/2) = -(1 - 2^{1-m}) B_m
  const auto& table = BernoulliTable::instance();
  for (int m = 2; m <= 40; m += 2) {
    const double expected = -(1.0 - std::ldexp(1.0, 1 - m)) * table.number_as_double(m);
    EXPECT_NEAR(bernoulli_polynomial(m, 0.5), expected, 1e-15 * std::abs(expected)) << m;
  }
}

TEST(BernoulliPolynomials, IndexOutOfRange) {
  EXPECT_THROW(bernoulli_polynomial(kBernoulliMax + 1, 0.3), std::out_of_range);
}

TEST(Binomial, SmallValuesAndRange) {
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(10, 0), 1u);
  EXPECT_EQ(binomial(64, 32), 1832624140942590534ull);
  EXPECT_THROW(binomial(67, 3), std::out_of_range);
}

TEST(Constants, Values) {
  const auto c = constants();
  EXPECT_DOUBLE_EQ(c.pi, 4.0 * std::atan(1.0));
  EXPECT_NEAR(c.euler_gamma, 0.5772156649015329, 1e-16);
  EXPECT_EQ(c.log2, dirichlet_eta(1.0));
  EXPECT_DOUBLE_EQ(c.log2, std::log(2.0));
}

TEST(Constants, CatalanFromAlternatingSeries) {
  // Averaging consecutive partial sums of sum (-1)^n / (2n+1)^2 leaves an
  // error of order N^{-3}.
  long double partial = 0.0L;
  const int n = 200000;
  for (int k = n; k >= 0; --k) {
    const long double d = 2.0L * k + 1.0L;
    partial += ((k % 2 == 0) ? 1.0L : -1.0L) / (d * d);
  }
  const long double next = 1.0L / ((2.0L * (n + 1) + 1.0L) * (2.0L * (n + 1) + 1.0L));
  const long double average = partial + 0.5L * ((n % 2 == 0) ? -next : next);
  EXPECT_NEAR(constants().catalan, static_cast<double>(average), 1e-15);
}

}  // namespace
}  // namespace polyint
