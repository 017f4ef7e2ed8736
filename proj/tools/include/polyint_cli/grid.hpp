#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyint/closed_form.hpp"

namespace polyint::cli {

class GridFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// sign x q in {1/2, 1, 2, 3} x (a, b) in {(q, 1), (2q, 2), (-q, -1)} x
/// p in 0..3 x t in 1..4, in that nesting order (384 points).
std::vector<IntegralParams> default_grid();

/// CSV with header `sign,a,b,p,t`; blank lines are skipped. Every row must
/// describe a valid integral. Throws GridFormatError with the line number.
std::vector<IntegralParams> parse_grid(std::istream& in);

}  // namespace polyint::cli
