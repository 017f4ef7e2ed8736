#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace polyint {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kBernoulliMax = 64;

/// Bernoulli numbers B_0..B_64 in exact rational arithmetic, B_1 = -1/2.
///
/// Built once from sum_{j=0}^{m} C(m+1, j) B_j = 0 and immutable afterwards,
/// so concurrent reads are safe.
class BernoulliTable {
 public:
  static const BernoulliTable& instance();

  /// Throws std::out_of_range for j > max_index().
  const Rational& number(int j) const;
  double number_as_double(int j) const;
  int max_index() const { return kBernoulliMax; }

 private:
  BernoulliTable();

  Rational values_[kBernoulliMax + 1];
  double doubles_[kBernoulliMax + 1];
};

Rational bernoulli_number(int j);

/// B_m(x) = sum_j C(m, j) B_j x^{m-j}, evaluated exactly in rational arithmetic
/// (x is a binary64 value, hence an exact dyadic rational) and rounded once.
double bernoulli_polynomial(int m, double x);

/// Exact binomial coefficient C(n, k) for 0 <= k <= n <= 66.
unsigned long long binomial(int n, int k);

}  // namespace polyint
