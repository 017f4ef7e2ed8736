#pragma once

namespace polyint {

struct Constants {
  double pi;
  double euler_gamma;
  double catalan;
  double log2;
};

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kCatalan = 0.91596559417721901505460351493238411;
inline constexpr double kLog2 = 0.69314718055994530941723212145817657;

constexpr Constants constants() { return {kPi, kEulerGamma, kCatalan, kLog2}; }

}  // namespace polyint
