#pragma once

#include <cmath>

namespace polyint::detail {

// Cohen / Rodriguez Villegas / Zagier acceleration of sum_{k>=0} (-1)^k a(k).
// For a totally monotone (moment) sequence the error is at most
// 2 a(0) / (3 + sqrt 8)^n.
template <class Term>
double alternating_sum(Term&& a, int n) {
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  double s = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    s += c * a(k);
    b = (static_cast<double>(k + n) * static_cast<double>(k - n) * b) /
        ((static_cast<double>(k) + 0.5) * static_cast<double>(k + 1));
  }
  return s / d;
}

inline constexpr int kAlternatingTerms = 28;

}  // namespace polyint::detail
