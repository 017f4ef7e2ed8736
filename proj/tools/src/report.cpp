#include "polyint_cli/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "polyint/oracle.hpp"

namespace polyint::cli {
namespace {

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s = buf;
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

std::string format_value(const Json& v) {
  switch (v.type()) {
    case Json::value_t::number_float:
      return format_double(v.get<double>());
    case Json::value_t::number_integer:
    case Json::value_t::number_unsigned:
    case Json::value_t::boolean:
    case Json::value_t::string:
    case Json::value_t::null:
      return v.dump();
    default:
      throw std::invalid_argument("format_json: only flat objects are supported");
  }
}

double rel(double abs_diff, double reference) {
  return reference > 0.0 ? abs_diff / reference : abs_diff;
}

}  // namespace

VerificationReport verify_point(const IntegralParams& params, double tol) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.params = params;
  r.tol = tol;
  r.closed_form = evaluate(params, std::max(kMinSeriesTolerance, 1e-2 * tol));
  r.oracle = integrate_line(params, std::max(1e-12, 1e-2 * tol));
  r.abs_diff = std::abs(r.closed_form.total - r.oracle.value);
  r.rel_diff = rel(r.abs_diff, std::abs(r.closed_form.total));
  r.pass = r.abs_diff <= tol || r.rel_diff <= tol;
  r.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Json report_json(const VerificationReport& r) {
  Json j;
  j["sign"] = to_string(r.params.sign);
  j["a"] = r.params.a;
  j["b"] = r.params.b;
  j["p"] = r.params.p;
  j["t"] = r.params.t;
  j["q"] = r.params.q();
  j["A"] = r.closed_form.A;
  j["B"] = r.closed_form.B;
  j["C"] = r.closed_form.C;
  j["total_re"] = r.closed_form.total.real();
  j["total_im"] = r.closed_form.total.imag();
  j["oracle_re"] = r.oracle.value.real();
  j["oracle_im"] = r.oracle.value.imag();
  j["abs_diff"] = r.abs_diff;
  j["rel_diff"] = r.rel_diff;
  j["tol"] = r.tol;
  j["pass"] = r.pass;
  j["runtime_ms"] = r.runtime_ms;
  return j;
}

Json eval_json(const IntegralParams& params, const EvalBreakdown& e) {
  Json j;
  j["sign"] = to_string(params.sign);
  j["a"] = params.a;
  j["b"] = params.b;
  j["p"] = params.p;
  j["t"] = params.t;
  j["q"] = params.q();
  j["parity"] = e.parity == Parity::even ? "even" : "odd";
  j["b_scale"] = e.b_scale;
  j["A"] = e.A;
  j["B"] = e.B;
  j["C"] = e.C;
  j["total_re"] = e.total.real();
  j["total_im"] = e.total.imag();
  j["abs_error"] = e.abs_error;
  j["converged"] = e.converged;
  return j;
}

Json sum_json(const EulerSumSpec& spec, const SeriesResult& result) {
  Json j;
  j["kind"] = spec.kind == SumKind::plain ? "plain" : "alt";
  j["p"] = spec.p;
  j["t"] = spec.t;
  j["r"] = spec.r;
  j["value"] = result.value;
  j["abs_error"] = result.abs_error;
  j["terms"] = result.terms;
  j["converged"] = result.converged;
  if (const auto known = find_closed_form(spec)) {
    j["closed_form_expression"] = known->expression;
    j["closed_form"] = known->value;
    j["closed_form_diff"] = std::abs(result.value - known->value);
  }
  return j;
}

std::string format_json(const Json& object) {
  if (!object.is_object()) throw std::invalid_argument("format_json: expected an object");
  std::string out = "{";
  bool first = true;
  for (const auto& [key, value] : object.items()) {
    if (!first) out += ',';
    first = false;
    out += Json(key).dump();
    out += ':';
    out += format_value(value);
  }
  out += '}';
  return out;
}

std::string csv_header(const Json& object) {
  std::string out;
  for (const auto& [key, value] : object.items()) {
    if (!out.empty()) out += ',';
    out += key;
  }
  return out;
}

std::string csv_row(const Json& object) {
  std::string out;
  bool first = true;
  for (const auto& [key, value] : object.items()) {
    if (!first) out += ',';
    first = false;
    if (value.is_string()) {
      out += value.get<std::string>();
    } else if (value.is_null()) {
      // empty field
    } else {
      out += format_value(value);
    }
  }
  return out;
}

}  // namespace polyint::cli
