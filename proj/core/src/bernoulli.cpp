#include "polyint/bernoulli.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace polyint {
namespace {

using boost::multiprecision::cpp_int;

constexpr int kBinomialMax = 66;

const std::array<std::array<unsigned long long, kBinomialMax + 1>, kBinomialMax + 1>& pascal() {
  static const auto table = [] {
    std::array<std::array<unsigned long long, kBinomialMax + 1>, kBinomialMax + 1> c{};
    for (int n = 0; n <= kBinomialMax; ++n) {
      c[n][0] = c[n][n] = 1;
      for (int k = 1; k < n; ++k) c[n][k] = c[n - 1][k - 1] + c[n - 1][k];
    }
    return c;
  }();
  return table;
}

// Exact value of a finite double as a rational.
Rational exact_rational(double x) {
  if (x == 0.0) return Rational(0);
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);  // x = mantissa * 2^exponent
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  exponent -= 53;
  cpp_int num(scaled);
  if (exponent >= 0) return Rational(num << exponent);
  cpp_int den(1);
  den <<= -exponent;
  return Rational(num, den);
}

// Rational -> double that survives numerators/denominators beyond the double range.
double to_double(const Rational& r) {
  const cpp_int num = boost::multiprecision::numerator(r);
  const cpp_int den = boost::multiprecision::denominator(r);
  if (num == 0) return 0.0;
  const bool negative = num < 0;
  const cpp_int abs_num = negative ? cpp_int(-num) : num;
  const long num_bits = static_cast<long>(boost::multiprecision::msb(abs_num));
  const long den_bits = static_cast<long>(boost::multiprecision::msb(den));
  // Scale so the integer quotient carries ~64 significant bits.
  const long shift = 64 - (num_bits - den_bits);
  cpp_int quotient;
  if (shift >= 0) {
    quotient = (abs_num << shift) / den;
  } else {
    quotient = abs_num / (den << -shift);
  }
  const double value = std::ldexp(quotient.convert_to<double>(), static_cast<int>(-shift));
  return negative ? -value : value;
}

}  // namespace

unsigned long long binomial(int n, int k) {
  if (n < 0 || n > kBinomialMax || k < 0 || k > n) {
    throw std::out_of_range("binomial(" + std::to_string(n) + ", " + std::to_string(k) + ")");
  }
  return pascal()[n][k];
}

BernoulliTable::BernoulliTable() {
  values_[0] = 1;
  for (int m = 1; m <= kBernoulliMax; ++m) {
    Rational acc = 0;
    for (int j = 0; j < m; ++j) acc += Rational(cpp_int(binomial(m + 1, j))) * values_[j];
    values_[m] = -acc / (m + 1);
  }
  for (int j = 0; j <= kBernoulliMax; ++j) doubles_[j] = to_double(values_[j]);
}

const BernoulliTable& BernoulliTable::instance() {
  static const BernoulliTable table;
  return table;
}

const Rational& BernoulliTable::number(int j) const {
  if (j < 0 || j > kBernoulliMax) {
    throw std::out_of_range("Bernoulli index " + std::to_string(j) + " outside [0, " +
                            std::to_string(kBernoulliMax) + "]");
  }
  return values_[j];
}

double BernoulliTable::number_as_double(int j) const {
  number(j);  // range check
  return doubles_[j];
}

Rational bernoulli_number(int j) { return BernoulliTable::instance().number(j); }

double bernoulli_polynomial(int m, double x) {
  const auto& table = BernoulliTable::instance();
  if (m < 0 || m > kBernoulliMax) {
    throw std::out_of_range("Bernoulli polynomial degree " + std::to_string(m));
  }
  if (!std::isfinite(x)) throw std::domain_error("bernoulli_polynomial: non-finite argument");
  if (x == 0.0) return table.number_as_double(m);
  // Horner in x: B_m(x) = sum_i C(m, i) B_{m-i} x^i.
  const Rational rx = exact_rational(x);
  Rational acc = table.number(0);
  for (int i = m - 1; i >= 0; --i) {
    acc = acc * rx + Rational(cpp_int(binomial(m, i))) * table.number(m - i);
  }
  return to_double(acc);
}

}  // namespace polyint
