#pragma once

#include <string>

#include <json.hpp>

#include "polyint/closed_form.hpp"
#include "polyint/euler_sums.hpp"
#include "polyint/quadrature.hpp"

namespace polyint::cli {

using Json = nlohmann::ordered_json;

/// Closed form vs quadrature at one grid point.
struct VerificationReport {
  IntegralParams params;
  EvalBreakdown closed_form;
  QuadratureResult oracle;
  double abs_diff = 0.0;
  double rel_diff = 0.0;
  double tol = 0.0;
  bool pass = false;
  double runtime_ms = 0.0;
};

/// Evaluates both sides at `params`. pass is abs_diff <= tol or rel_diff <= tol.
VerificationReport verify_point(const IntegralParams& params, double tol);

Json report_json(const VerificationReport& report);
Json eval_json(const IntegralParams& params, const EvalBreakdown& breakdown);
Json sum_json(const EulerSumSpec& spec, const SeriesResult& result);

/// One-line JSON: keys in insertion order, floats as %.17g (always with a
/// decimal point or exponent), non-finite floats as null. Parsing the output
/// and formatting it again gives the same bytes.
std::string format_json(const Json& object);

/// The header row (keys) and one value row of a flat object.
std::string csv_header(const Json& object);
std::string csv_row(const Json& object);

}  // namespace polyint::cli
