#include "polyint/euler_sums.hpp"

#include <cmath>
#include <sstream>

#include "polyint/constants.hpp"
#include "polyint/errors.hpp"
#include "polyint/special_functions.hpp"

namespace polyint {

void EulerSumSpec::validate() const {
  if (p < 1) throw DomainError("Euler sum: p must be >= 1");
  if (t < 1) throw DomainError("Euler sum: t must be >= 1");
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("Euler sum: r must be a positive real");
  if (kind == SumKind::plain && t == 1) throw DivergenceError("Euler sum S_{p,1} diverges");
}

std::string describe(const EulerSumSpec& spec) {
  std::ostringstream os;
  os << "S" << (spec.kind == SumKind::alternating ? "^{+-}" : "") << "_{" << spec.p << ","
     << spec.t << "}(" << spec.r << ")";
  return os.str();
}

SeriesResult euler_sum(const EulerSumSpec& spec, double tol, SeriesTrace* trace) {
  spec.validate();
  if (!(tol >= kMinSeriesTolerance)) throw DomainError("euler_sum: tolerance below 1e-13");
  // H^{(p)}_{rn} = C_p - Z(p, rn + 1), with C_1 = gamma and C_p = zeta(p).
  HurwitzLinearSeries series;
  series.kind = spec.kind;
  series.t = spec.t;
  series.order = spec.p;
  series.scale = spec.r;
  series.constant = spec.p == 1 ? kEulerGamma : riemann_zeta(spec.p);
  series.terms = {{-1.0, 1.0}};
  return sum_series(series, tol, trace);
}

ScaledDecomposition scaled_decomposition(int p, int t, double tol) {
  if (t < 2) throw DomainError("scaled_decomposition: t must be >= 2");
  const double lhs = euler_sum({SumKind::plain, p, t, 2.0}, tol).value;
  const double plain = euler_sum({SumKind::plain, p, t, 1.0}, tol).value;
  const double alt = euler_sum({SumKind::alternating, p, t, 1.0}, tol).value;
  return {lhs, std::ldexp(plain - alt, t - 1)};
}

namespace {

void require_even(int t, const char* who) {
  if (t < 2 || t % 2 != 0) throw DomainError(std::string(who) + ": t must be even and >= 2");
}

}  // namespace

double alternating_linear_sum(int t) {
  require_even(t, "alternating_linear_sum");
  double sum = 0.0;
  for (int j = 1; j <= t / 2 - 1; ++j) sum += dirichlet_eta(2 * j) * riemann_zeta(t + 1 - 2 * j);
  return 0.5 * ((t + 1) * dirichlet_eta(t + 1) - riemann_zeta(t + 1) - 2.0 * sum);
}

double half_scaled_identity(int t) {
  require_even(t, "half_scaled_identity");
  double sum = 0.0;
  for (int j = 1; j <= t / 2 - 1; ++j) {
    sum += std::ldexp(1.0, 2 * j) * dirichlet_eta(2 * j) * riemann_zeta(t + 1 - 2 * j);
  }
  return 0.5 * ((t + 3) * dirichlet_eta(t + 1) - (t + 1) * riemann_zeta(t + 1) -
                std::ldexp(sum, 1 - t));
}

const std::vector<KnownClosedForm>& known_closed_forms() {
  static const std::vector<KnownClosedForm> table = [] {
    const double z2 = riemann_zeta(2), z3 = riemann_zeta(3), z5 = riemann_zeta(5),
                 z7 = riemann_zeta(7);
    std::vector<KnownClosedForm> v;
    v.push_back({"S_{3,4}", "18 zeta(7) - 10 zeta(2) zeta(5)",
                 {{1.0, {SumKind::plain, 3, 4, 1.0}}},
                 18.0 * z7 - 10.0 * z2 * z5});
    v.push_back({"S^{+-}_{3,4}", "363/128 zeta(7) - 9/8 zeta(5) zeta(2)",
                 {{1.0, {SumKind::alternating, 3, 4, 1.0}}},
                 363.0 / 128.0 * z7 - 9.0 / 8.0 * z5 * z2});
    v.push_back({"S_{3,4}(2)", "1941/16 zeta(7) - 71 zeta(5) zeta(2)",
                 {{1.0, {SumKind::plain, 3, 4, 2.0}}},
                 1941.0 / 16.0 * z7 - 71.0 * z5 * z2});
    for (int t : {2, 4, 6}) {
      v.push_back({"S^{+-}_{1," + std::to_string(t) + "}",
                   "(1/2)[(t+1) eta(t+1) - zeta(t+1) - 2 sum eta(2j) zeta(t+1-2j)]",
                   {{1.0, {SumKind::alternating, 1, t, 1.0}}},
                   alternating_linear_sum(t)});
    }
    for (int t : {2, 4, 6}) {
      v.push_back({"S^{+-}_{1," + std::to_string(t) + "}(1/2)",
                   "(1/2)[(t+3) eta(t+1) - (t+1) zeta(t+1) - 2^{1-t} sum 4^j eta(2j) zeta(t+1-2j)]",
                   {{1.0, {SumKind::alternating, 1, t, 0.5}}},
                   half_scaled_identity(t)});
    }
    // Shuffle relation S_{p,t} + S_{t,p} = zeta(p) zeta(t) + zeta(p+t).
    v.push_back({"S_{2,3} + S_{3,2}", "zeta(2) zeta(3) + zeta(5)",
                 {{1.0, {SumKind::plain, 2, 3, 1.0}}, {1.0, {SumKind::plain, 3, 2, 1.0}}},
                 z2 * z3 + z5});
    return v;
  }();
  return table;
}

std::optional<KnownClosedForm> find_closed_form(const EulerSumSpec& spec) {
  for (const auto& entry : known_closed_forms()) {
    if (entry.combination.size() != 1) continue;
    const auto& [w, s] = entry.combination.front();
    if (w == 1.0 && s.kind == spec.kind && s.p == spec.p && s.t == spec.t && s.r == spec.r) {
      return entry;
    }
  }
  return std::nullopt;
}

}  // namespace polyint
