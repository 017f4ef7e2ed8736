#include "polyint/closed_form.hpp"

#include <cmath>
#include <string>

#include "polyint/bernoulli.hpp"
#include "polyint/constants.hpp"
#include "polyint/errors.hpp"
#include "polyint/euler_sums.hpp"
#include "polyint/series.hpp"
#include "polyint/special_functions.hpp"

namespace polyint {
namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double parity_sign(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

// xi^+ = zeta, xi^- = eta, with the s = 0 values -1/2 and 1/2.
double xi(Sign sign, int s) { return sign == Sign::plus ? riemann_zeta(s) : dirichlet_eta(s); }

double as_double(unsigned long long v) { return static_cast<double>(v); }

void check_q(double q) {
  if (!(q > 0.0) || !std::isfinite(q)) throw DomainError("q must be a positive real");
}

// Adds a series contribution into an accumulating SeriesResult.
void accumulate(SeriesResult& into, const SeriesResult& part, double weight) {
  into.value += weight * part.value;
  into.abs_error += std::abs(weight) * part.abs_error;
  into.terms += part.terms;
  into.converged = into.converged && part.converged;
}

EvalBreakdown assemble(const IntegralParams& params, double A, double B, double C,
                       double series_error, bool converged) {
  EvalBreakdown out;
  out.A = A;
  out.B = B;
  out.C = C;
  out.parity = (params.p + params.t) % 2 == 0 ? Parity::even : Parity::odd;
  out.b_scale = factorial(params.p) * (params.b > 0 ? 1.0 : -1.0) / std::pow(params.b, params.p + 1);
  out.total = out.b_scale * Complex(A + B, C);
  out.abs_error = std::abs(out.b_scale) * series_error;
  out.converged = converged;
  return out;
}

}  // namespace

void IntegralParams::validate() const {
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("a and b must be finite");
  if (!(a * b > 0.0)) throw DomainError("a*b must be positive");
  if (p < 0) throw DomainError("p must be >= 0");
  if (t < 1) throw DomainError("t must be >= 1");
  if (p + t + 1 > 60) throw DomainError("weight p + t too large");
}

double a_term(Sign sign, int p, int t, double q) {
  check_q(q);
  const double pm = sign == Sign::plus ? 1.0 : -1.0;
  double sum = 0.0;
  for (int j = 0; 2 * j <= t; ++j) {
    sum += std::pow(q, t - 2 * j) * as_double(binomial(p + t - 2 * j, p)) *
           dirichlet_eta(p + t + 1 - 2 * j) * xi(sign, 2 * j);
  }
  return pm * parity_sign(p) / std::pow(q, p + 1) * xi(sign, p + t + 1) + pm * 2.0 * sum;
}

double c_term(Sign sign, int p, int t, double q) {
  check_q(q);
  if (sign == Sign::minus) return 0.0;
  return -std::pow(q, t - 1) * as_double(binomial(p + t - 1, p)) * dirichlet_eta(p + t) * kPi;
}

SeriesResult k_integral(Sign sign, double c, int p, double q, int t, double tol) {
  check_q(q);
  if (!(c >= -1.0)) throw DomainError("k_integral: c must be >= -1");
  if (p < 0 || t < 0) throw DomainError("k_integral: p and t must be >= 0");
  // H^{(p+1)}_{(qn+c)/2} - H^{(p+1)}_{(qn+c-1)/2}
  //   = Z(p+1, qn/2 + (c+1)/2) - Z(p+1, qn/2 + (c+2)/2)
  HurwitzLinearSeries series;
  series.kind = sign == Sign::plus ? SumKind::plain : SumKind::alternating;
  series.t = t;
  series.order = p + 1;
  series.scale = 0.5 * q;
  series.terms = {{1.0, 0.5 * (c + 1.0)}, {-1.0, 0.5 * (c + 2.0)}};
  // (-1)^n = -(-1)^{n+1} for the alternating weighting.
  const double weight = parity_sign(p) * factorial(p) / std::ldexp(1.0, p + 1) *
                        (sign == Sign::minus ? -1.0 : 1.0);
  SeriesResult raw = sum_series(series, tol / std::max(1.0, std::abs(weight)));
  raw.value *= weight;
  raw.abs_error *= std::abs(weight);
  raw.converged = raw.abs_error <= tol;
  return raw;
}

double log_moment(int m) {
  if (m < 0) throw DomainError("log_moment: m must be >= 0");
  return parity_sign(m) * factorial(m) * dirichlet_eta(m + 1);
}

double first_integral(int p, double q, int t) {
  check_q(q);
  return parity_sign(p + 1) * factorial(p) / std::pow(q, p + 1) * dirichlet_eta(p + t + 1);
}

SeriesResult double_series_B(Sign sign, int p, int t, double q, double tol) {
  check_q(q);
  if (p < 0 || t < 1) throw DomainError("double_series_B: need p >= 0, t >= 1");
  if ((p + t) % 2 == 1) return {0.0, 0.0, 0, true};
  // sum_{k>=1} (-1)^k (x + k)^{-s} = 2^{-s} [Z(s, x/2 + 1) - Z(s, (x+1)/2)],  x = qn
  const int s = p + 1;
  HurwitzLinearSeries series;
  series.kind = sign == Sign::plus ? SumKind::plain : SumKind::alternating;
  series.t = t;
  series.order = s;
  series.scale = 0.5 * q;
  series.terms = {{1.0, 1.0}, {-1.0, 0.5}};
  const double weight = (parity_sign(p) + parity_sign(t)) * std::ldexp(1.0, -s) *
                        (sign == Sign::minus ? -1.0 : 1.0);
  SeriesResult raw = sum_series(series, tol / std::abs(weight));
  raw.value *= weight;
  raw.abs_error *= std::abs(weight);
  raw.converged = raw.abs_error <= tol;
  return raw;
}

SeriesResult euler_form_B(Sign sign, int p, int t, double q, double tol) {
  check_q(q);
  if (p < 0 || t < 1) throw DomainError("euler_form_B: need p >= 0, t >= 1");
  if ((p + t) % 2 == 1) return {0.0, 0.0, 0, true};
  if (t == 1 && sign == Sign::plus) {
    throw DivergenceError("euler_form_B: the Euler sums do not exist for (t, sign) = (1, plus)");
  }
  const SumKind kind = sign == Sign::plus ? SumKind::plain : SumKind::alternating;
  const double pm = sign == Sign::plus ? 1.0 : -1.0;
  const double outer = pm * (parity_sign(p) + parity_sign(t));
  const double series_tol = std::max(kMinSeriesTolerance, 0.25 * tol / std::abs(outer));
  const auto full = euler_sum({kind, p + 1, t, q}, series_tol);
  const auto half = euler_sum({kind, p + 1, t, 0.5 * q}, series_tol);
  SeriesResult out{0.0, 0.0, 0, true};
  accumulate(out, full, outer);
  accumulate(out, half, -outer * std::ldexp(1.0, -p));
  out.value -= outer * dirichlet_eta(p + 1) * xi(sign, t);
  out.converged = out.converged && out.abs_error <= tol;
  return out;
}

SeriesResult k_route_B(Sign sign, int p, int t, double q, double tol) {
  if ((p + t) % 2 == 1) return {0.0, 0.0, 0, true};
  const double weight = -2.0 / factorial(p);
  auto k = k_integral(sign, 0.0, p, q, t, tol / std::abs(weight));
  k.value *= weight;
  k.abs_error *= std::abs(weight);
  k.converged = k.abs_error <= tol;
  return k;
}

EvalBreakdown evaluate(const IntegralParams& params, double tol) {
  params.validate();
  const double q = params.q();
  const double A = a_term(params.sign, params.p, params.t, q);
  const double C = c_term(params.sign, params.p, params.t, q);
  SeriesResult B{0.0, 0.0, 0, true};
  if ((params.p + params.t) % 2 == 0) {
    const double series_tol = std::max(kMinSeriesTolerance, tol);
    B = (params.t == 1 && params.sign == Sign::plus)
            ? double_series_B(params.sign, params.p, params.t, q, series_tol)
            : euler_form_B(params.sign, params.p, params.t, q, series_tol);
  }
  return assemble(params, A, B.value, C, B.abs_error, B.converged);
}

EvalBreakdown evaluate_p_zero(const IntegralParams& params, double tol) {
  params.validate();
  if (params.p != 0) throw DomainError("evaluate_p_zero: requires p = 0");
  const int t = params.t;
  const double q = params.q();
  const bool even = t % 2 == 0;
  const double series_tol = std::max(kMinSeriesTolerance, 0.25 * tol);
  double A = 0.0, B = 0.0, C = 0.0, err = 0.0;
  bool converged = true;
  double sum = 0.0;
  if (params.sign == Sign::minus) {
    for (int j = 0; 2 * j <= t; ++j) {
      sum += std::pow(q, t - 2 * j) * dirichlet_eta(2 * j) * dirichlet_eta(t + 1 - 2 * j);
    }
    A = -dirichlet_eta(t + 1) / q - 2.0 * sum;
    if (even) {
      const auto s_full = euler_sum({SumKind::alternating, 1, t, q}, series_tol);
      const auto s_half = euler_sum({SumKind::alternating, 1, t, 0.5 * q}, series_tol);
      B = 2.0 * dirichlet_eta(t) * kLog2 - 2.0 * s_full.value + 2.0 * s_half.value;
      err = 2.0 * (s_full.abs_error + s_half.abs_error);
      converged = s_full.converged && s_half.converged;
    }
  } else {
    for (int j = 0; 2 * j <= t; ++j) {
      sum += std::pow(q, t - 2 * j) * dirichlet_eta(t + 1 - 2 * j) *
             (j == 0 ? -0.5 : riemann_zeta(2 * j));
    }
    A = riemann_zeta(t + 1) / q + 2.0 * sum;
    if (even) {
      const auto s_full = euler_sum({SumKind::plain, 1, t, q}, series_tol);
      const auto s_half = euler_sum({SumKind::plain, 1, t, 0.5 * q}, series_tol);
      B = 2.0 * (s_full.value - s_half.value - riemann_zeta(t) * kLog2);
      err = 2.0 * (s_full.abs_error + s_half.abs_error);
      converged = s_full.converged && s_half.converged;
    }
    C = -std::pow(q, t - 1) * dirichlet_eta(t) * kPi;
  }
  return assemble(params, A, B, C, err, converged && err <= tol);
}

EvalBreakdown evaluate_p_equals_t(const IntegralParams& params, double tol) {
  params.validate();
  if (params.p != params.t) throw DomainError("evaluate_p_equals_t: requires p = t");
  const int t = params.t;
  const double q = params.q();
  const double series_tol = std::max(kMinSeriesTolerance, 0.25 * tol);
  if (params.sign == Sign::minus) {
    if (q != 1.0) throw DomainError("evaluate_p_equals_t: minus sign requires q = 1");
    // R = eta(2t+1) - 2 eta(t+1) eta(t) + 2(-1)^t sum_j C(2t-2j, t) eta(2t+1-2j) eta(2j)
    //     + 2 S^{+-}_{t+1,t} - 2^{1-t} S^{+-}_{t+1,t}(1/2)
    // and sign(b) b^{t+1} I / t! = (-1)^{t+1} R.
    double sum = 0.0;
    for (int j = 0; 2 * j <= t; ++j) {
      sum += as_double(binomial(2 * t - 2 * j, t)) * dirichlet_eta(2 * t + 1 - 2 * j) *
             dirichlet_eta(2 * j);
    }
    const auto s_full = euler_sum({SumKind::alternating, t + 1, t, 1.0}, series_tol);
    const auto s_half = euler_sum({SumKind::alternating, t + 1, t, 0.5}, series_tol);
    const double flip = parity_sign(t + 1);
    const double A = flip * (dirichlet_eta(2 * t + 1) + 2.0 * parity_sign(t) * sum);
    const double B = flip * (-2.0 * dirichlet_eta(t + 1) * dirichlet_eta(t) + 2.0 * s_full.value -
                             std::ldexp(s_half.value, 1 - t));
    const double err = 2.0 * s_full.abs_error + std::ldexp(s_half.abs_error, 1 - t);
    return assemble(params, A, B, 0.0, err, s_full.converged && s_half.converged && err <= tol);
  }
  if (t % 2 != 0) throw DomainError("evaluate_p_equals_t: plus sign requires even t");
  double sum = 0.0;
  for (int j = 0; 2 * j <= t; ++j) {
    sum += std::pow(q, t - 2 * j) * as_double(binomial(2 * t - 2 * j, t)) *
           dirichlet_eta(2 * t + 1 - 2 * j) * (j == 0 ? -0.5 : riemann_zeta(2 * j));
  }
  const double A = parity_sign(t) / std::pow(q, t + 1) * riemann_zeta(2 * t + 1) + 2.0 * sum;
  const auto s_full = euler_sum({SumKind::plain, t + 1, t, q}, series_tol);
  const auto s_half = euler_sum({SumKind::plain, t + 1, t, 0.5 * q}, series_tol);
  const double B = 2.0 * (s_full.value - std::ldexp(s_half.value, -t) -
                          dirichlet_eta(t + 1) * riemann_zeta(t));
  const double C = -std::pow(q, t - 1) * as_double(binomial(2 * t - 1, t)) *
                   dirichlet_eta(2 * t) * kPi;
  const double err = 2.0 * (s_full.abs_error + std::ldexp(s_half.abs_error, -t));
  return assemble(params, A, B, C, err, s_full.converged && s_half.converged && err <= tol);
}

SeriesResult minus_normalized_via_k(int p, double q, int t, double tol) {
  check_q(q);
  if (p < 0 || t < 1) throw DomainError("minus_normalized_via_k: need p >= 0, t >= 1");
  const double k_tol = 0.25 * tol;
  SeriesResult out{0.0, 0.0, 0, true};
  // int_0^1 log^p y Li_t(-y^q) / y dy = K^-(0) + K^-(-1)
  accumulate(out, k_integral(Sign::minus, 0.0, p, q, t, k_tol), 1.0);
  accumulate(out, k_integral(Sign::minus, -1.0, p, q, t, k_tol), 1.0);
  // -(1 + (-1)^{p+t}) K^-(0)
  if ((p + t) % 2 == 0) accumulate(out, k_integral(Sign::minus, 0.0, p, q, t, k_tol), -2.0);
  // -2 (-1)^{p+t} sum_j q^{t-2j}/(t-2j)! eta(2j) int_0^1 log^{p+t-2j} y / (1+y) dy
  double sum = 0.0;
  for (int j = 0; 2 * j <= t; ++j) {
    sum += std::pow(q, t - 2 * j) / factorial(t - 2 * j) * dirichlet_eta(2 * j) *
           log_moment(p + t - 2 * j);
  }
  out.value -= 2.0 * parity_sign(p + t) * sum;
  out.converged = out.converged && out.abs_error <= tol;
  return out;
}

}  // namespace polyint
