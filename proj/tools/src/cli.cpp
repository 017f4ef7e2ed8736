#include "polyint_cli/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <thread>

#include <CLI11.hpp>

#include "polyint/errors.hpp"
#include "polyint_cli/grid.hpp"
#include "polyint_cli/report.hpp"

namespace polyint::cli {
namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Sign parse_sign(const std::string& s) { return s == "plus" ? Sign::plus : Sign::minus; }

struct EvalArgs {
  std::string sign;
  double a = 0.0;
  double b = 0.0;
  int p = 0;
  int t = 0;
  double tol = 1e-11;
  std::string format = "text";
};

struct VerifyArgs {
  std::vector<std::string> grid{"default"};
  double tol = 1e-9;
  int jobs = 1;
  std::string format = "json";
};

struct SumArgs {
  std::string kind;
  int p = 0;
  int t = 0;
  double r = 1.0;
  double tol = 1e-11;
  std::string format = "text";
};

void print_object(const Json& j, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << format_json(j) << '\n';
  } else {
    out << csv_header(j) << '\n' << csv_row(j) << '\n';
  }
}

int cmd_eval(const EvalArgs& args, std::ostream& out) {
  const IntegralParams params{parse_sign(args.sign), args.a, args.b, args.p, args.t};
  const EvalBreakdown e = evaluate(params, args.tol);
  if (args.format == "text") {
    out << "I" << (params.sign == Sign::plus ? "+" : "-") << "(a=" << num(params.a)
        << ", b=" << num(params.b) << ", p=" << params.p << ", t=" << params.t
        << ")  q = " << num(params.q()) << '\n'
        << "  A       = " << num(e.A) << '\n'
        << "  B       = " << num(e.B) << '\n'
        << "  C       = " << num(e.C) << '\n'
        << "  scale   = " << num(e.b_scale) << '\n'
        << "  total   = " << num(e.total.real()) << (e.total.imag() < 0 ? " - " : " + ")
        << num(std::abs(e.total.imag())) << "i\n"
        << "  error  <= " << num(e.abs_error) << (e.converged ? "" : "  (not converged)") << '\n';
  } else {
    print_object(eval_json(params, e), args.format, out);
  }
  return e.converged ? kSuccess : kNonConvergence;
}

int cmd_sum(const SumArgs& args, std::ostream& out) {
  const EulerSumSpec spec{args.kind == "plain" ? SumKind::plain : SumKind::alternating, args.p,
                          args.t, args.r};
  spec.validate();
  const SeriesResult s = euler_sum(spec, args.tol);
  const Json j = sum_json(spec, s);
  if (args.format == "text") {
    out << describe(spec) << " = " << num(s.value) << "  (error <= " << num(s.abs_error) << ", "
        << s.terms << " explicit terms" << (s.converged ? "" : ", not converged") << ")\n";
    if (j.contains("closed_form")) {
      out << "closed form " << j["closed_form_expression"].get<std::string>() << " = "
          << num(j["closed_form"].get<double>())
          << "  diff " << num(j["closed_form_diff"].get<double>()) << '\n';
    }
  } else {
    print_object(j, args.format, out);
  }
  return s.converged ? kSuccess : kNonConvergence;
}

std::vector<IntegralParams> load_grid(const std::vector<std::string>& spec) {
  if (spec.size() == 1 && spec[0] == "default") return default_grid();
  if (spec.size() == 2 && spec[0] == "file") {
    std::ifstream in(spec[1]);
    if (!in) throw GridFormatError("cannot open grid file '" + spec[1] + "'");
    return parse_grid(in);
  }
  throw GridFormatError("--grid expects 'default' or 'file PATH'");
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  const auto grid = load_grid(args.grid);
  std::vector<VerificationReport> reports(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        reports[i] = verify_point(grid[i], args.tol);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int jobs = std::clamp<int>(args.jobs, 1, static_cast<int>(std::max<std::size_t>(grid.size(), 1)));
  std::vector<std::thread> pool;
  for (int k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::size_t passed = 0;
  bool all_converged = true;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const Json j = report_json(reports[i]);
    if (args.format == "json") {
      out << format_json(j) << '\n';
    } else {
      if (i == 0) out << csv_header(j) << '\n';
      out << csv_row(j) << '\n';
    }
    passed += reports[i].pass ? 1 : 0;
    all_converged = all_converged && reports[i].oracle.converged && reports[i].closed_form.converged;
  }
  err << passed << "/" << reports.size() << " points pass at tol " << num(args.tol)
      << (all_converged ? "" : " (some evaluations did not converge)") << '\n';
  if (!all_converged) return kNonConvergence;
  return passed == reports.size() ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form evaluation and quadrature verification of polylogarithmic integrals",
               "polyint"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate I(a, b, p, t) in closed form");
  eval->add_option("--sign", eval_args.sign, "Sign inside the polylogarithm")
      ->required()
      ->check(CLI::IsMember({"plus", "minus"}));
  eval->add_option("--a", eval_args.a, "Exponent scale inside Li_t")->required();
  eval->add_option("--b", eval_args.b, "Exponent scale in the denominator")->required();
  eval->add_option("--p", eval_args.p, "Power of x")->required();
  eval->add_option("--t", eval_args.t, "Polylogarithm order")->required();
  eval->add_option("--tol", eval_args.tol, "Series tolerance")->capture_default_str();
  eval->add_option("--format", eval_args.format)
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Compare closed forms with quadrature over a grid");
  verify->add_option("--grid", verify_args.grid, "'default' or 'file PATH'")
      ->expected(1, 2)
      ->capture_default_str();
  verify->add_option("--tol", verify_args.tol, "Pass if abs or rel difference is below this")
      ->capture_default_str();
  verify->add_option("--jobs", verify_args.jobs, "Worker threads")->capture_default_str();
  verify->add_option("--format", verify_args.format)
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  SumArgs sum_args;
  auto* sum = app.add_subcommand("sum", "Sum a linear Euler sum S_{p,t}(r)");
  sum->add_option("--kind", sum_args.kind, "plain or alt(ernating)")
      ->required()
      ->check(CLI::IsMember({"plain", "alt"}));
  sum->add_option("--p", sum_args.p)->required();
  sum->add_option("--t", sum_args.t)->required();
  sum->add_option("--r", sum_args.r)->capture_default_str();
  sum->add_option("--tol", sum_args.tol)->capture_default_str();
  sum->add_option("--format", sum_args.format)
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
  }

  try {
    if (eval->parsed()) return cmd_eval(eval_args, out);
    if (sum->parsed()) return cmd_sum(sum_args, out);
    if (verify_args.jobs < 1) throw DomainError("--jobs must be >= 1");
    if (!(verify_args.tol > 0.0)) throw DomainError("--tol must be positive");
    return cmd_verify(verify_args, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const GridFormatError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kNonConvergence;
  }
}

}  // namespace polyint::cli
