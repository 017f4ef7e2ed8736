#include "polyint/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "polyint/errors.hpp"
#include "polyint/polylog.hpp"

namespace polyint {
namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// 1 / (1 + e^z) without overflow.
double fermi(double z) {
  if (z > 0.0) {
    const double e = std::exp(-z);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(z));
}

Complex line_integrand(const IntegralParams& params, double x) {
  const Complex li = params.sign == Sign::plus ? polylog_exp(params.t, params.a * x)
                                               : Complex(polylog_neg_exp(params.t, params.a * x));
  return std::pow(x, params.p) * li * fermi(params.b * x);
}

// log x for x in (0, 1], accurate both near 0 and near 1.
double log_unit(double x, double one_minus_x) {
  return x < 0.5 ? std::log(x) : std::log1p(-one_minus_x);
}

void require_converged(const QuadratureResult& r, const char* what) {
  if (!r.converged) throw ConvergenceError(std::string(what) + ": quadrature did not converge");
}

}  // namespace

QuadratureOptions line_options(const IntegralParams& params, double tol) {
  params.validate();
  QuadratureOptions options;
  options.tol = tol;
  // The integrand decays like exp(-min(|a|, |b|) |x|) times a polynomial.
  options.upper_cutoff = 800.0 / std::min(std::abs(params.a), std::abs(params.b));
  return options;
}

QuadratureResult integrate_line(const IntegralParams& params, double tol) {
  return integrate_line(params, line_options(params, tol));
}

QuadratureResult integrate_line(const IntegralParams& params, const QuadratureOptions& options) {
  params.validate();
  return exp_sinh(
      [&params](double x) { return line_integrand(params, x) + line_integrand(params, -x); },
      options);
}

UnitIntegral UnitIntegral::K(Sign sign, double c, int p, double q, int t) {
  UnitIntegral u;
  u.kind = Kind::k_integral;
  u.sign = sign;
  u.c = c;
  u.p = p;
  u.q = q;
  u.t = t;
  return u;
}

UnitIntegral UnitIntegral::LogMoment(int m) {
  UnitIntegral u;
  u.kind = Kind::log_moment;
  u.m = m;
  return u;
}

QuadratureResult integrate_unit(const UnitIntegral& integral, double tol) {
  QuadratureOptions options;
  options.tol = tol;
  if (integral.kind == UnitIntegral::Kind::log_moment) {
    if (integral.m < 0) throw DomainError("log moment order must be >= 0");
    return tanh_sinh(
        [m = integral.m](double x, double omx) {
          return Complex(std::pow(log_unit(x, omx), m) / (1.0 + x));
        },
        options);
  }
  if (!(integral.c >= -1.0)) throw DomainError("K integral: c must be >= -1");
  if (!(integral.q > 0.0)) throw DomainError("K integral: q must be positive");
  if (integral.p < 0 || integral.t < 0) throw DomainError("K integral: p and t must be >= 0");
  if (integral.sign == Sign::plus && integral.t == 0) {
    throw DivergenceError("K integral: Li_0(x^q) is not integrable at x = 1");
  }
  return tanh_sinh(
      [&integral](double x, double omx) {
        const double lx = log_unit(x, omx);
        const double mu = integral.q * lx;
        const double li = integral.sign == Sign::plus ? polylog_exp(integral.t, mu).real()
                                                      : polylog_neg_exp(integral.t, mu);
        return Complex(std::pow(x, integral.c) * std::pow(lx, integral.p) * li / (1.0 + x));
      },
      options);
}

double fermi_dirac_polylog(int t, double y, double tol) {
  if (t < 1) throw DomainError("fermi_dirac_polylog: t must be >= 1");
  if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("fermi_dirac_polylog: y must be positive");
  const double log_y = std::log(y);
  QuadratureOptions options;
  options.tol = tol;
  options.upper_cutoff = std::max(0.0, log_y) + 800.0;
  const auto r = exp_sinh(
      [t, log_y](double x) { return Complex(std::pow(x, t - 1) * fermi(x - log_y)); }, options);
  require_converged(r, "fermi_dirac_polylog");
  return -r.value.real() / factorial(t - 1);
}

double eta_mellin(int s, double tol) {
  if (s < 1) throw DomainError("eta_mellin: s must be >= 1");
  QuadratureOptions options;
  options.tol = tol;
  options.upper_cutoff = 800.0;
  const auto r =
      exp_sinh([s](double x) { return Complex(std::pow(x, s - 1) * fermi(x)); }, options);
  require_converged(r, "eta_mellin");
  return r.value.real() / factorial(s - 1);
}

}  // namespace polyint
