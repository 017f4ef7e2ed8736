#include <gtest/gtest.h>

#include <cmath>

#include "polyint/closed_form.hpp"
#include "polyint/constants.hpp"
#include "polyint/errors.hpp"
#include "polyint/oracle.hpp"
#include "polyint/polylog.hpp"
#include "polyint/special_functions.hpp"
#include "reference.hpp"

namespace polyint {
namespace {

using test::rel_diff;

TEST(IntegrateLine, MinusExample) {
  const QuadratureResult r = integrate_line({Sign::minus, 1.0, 1.0, 0, 2});
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value.real(), -2.0 * riemann_zeta(3), 1e-10);
  EXPECT_EQ(r.value.imag(), 0.0);
}

TEST(IntegrateLine, PlusExampleIsComplex) {
  const QuadratureResult r = integrate_line({Sign::plus, 2.0, 1.0, 1, 1});
  EXPECT_TRUE(r.converged);
  const Complex v = -12.0 * r.value;
  EXPECT_LE(rel_diff(v.real(), 3.0 * riemann_zeta(3) + 6.0 * kPi * kPi * kLog2), 1e-9);
  EXPECT_LE(rel_diff(v.imag(), std::pow(kPi, 3)), 1e-9);
}

TEST(IntegrateLine, SubstitutionScaling) {
  const QuadratureResult lhs = integrate_line({Sign::minus, 1.0, 2.0, 0, 1});
  const QuadratureResult rhs = integrate_line({Sign::minus, 0.5, 1.0, 0, 1});
  EXPECT_NEAR(lhs.value.real(), 0.5 * rhs.value.real(), 1e-11);
}

TEST(IntegrateLine, RejectsInvalidParams) {
  EXPECT_THROW(integrate_line({Sign::minus, 1.0, -1.0, 0, 1}), DomainError);
}

TEST(IntegrateLine, ExtraLevelDoesNotRaiseEstimate) {
  for (Sign sign : {Sign::plus, Sign::minus}) {
    for (double q : {0.5, 3.0}) {
      for (int p = 0; p <= 3; p += 3) {
        for (int t : {1, 4}) {
          const IntegralParams params{sign, q, 1.0, p, t};
          QuadratureOptions options = line_options(params, 1e-11);
          const QuadratureResult r = integrate_line(params, options);
          options.min_level = options.max_level = r.levels_used + 1;
          const QuadratureResult finer = integrate_line(params, options);
          EXPECT_LE(finer.abs_error_estimate, r.abs_error_estimate)
              << to_string(sign) << " q=" << q << " p=" << p << " t=" << t;
        }
      }
    }
  }
}

TEST(IntegrateUnit, Examples) {
  EXPECT_NEAR(integrate_unit(UnitIntegral::LogMoment(0)).value.real(), kLog2, 1e-13);
  EXPECT_NEAR(integrate_unit(UnitIntegral::LogMoment(3)).value.real(), log_moment(3), 1e-12);
  EXPECT_NEAR(integrate_unit(UnitIntegral::K(Sign::minus, 0.0, 0, 1.0, 1)).value.real(),
              -0.5 * kLog2 * kLog2, 1e-13);
  EXPECT_NEAR(integrate_unit(UnitIntegral::K(Sign::minus, -1.0, 1, 2.0, 3)).value.real(),
              k_integral(Sign::minus, -1.0, 1, 2.0, 3).value, 1e-10);
}

TEST(IntegrateUnit, KSeriesMatchesQuadrature) {
  for (Sign sign : {Sign::plus, Sign::minus}) {
    for (double c : {-1.0, 0.0, 0.5, 2.0}) {
      for (int p = 0; p <= 3; ++p) {
        for (double q : {0.5, 1.0, 2.0, 3.0}) {
          for (int t = 1; t <= 3; ++t) {
            const double series = k_integral(sign, c, p, q, t).value;
            const QuadratureResult quad = integrate_unit(UnitIntegral::K(sign, c, p, q, t));
            ASSERT_TRUE(quad.converged);
            EXPECT_NEAR(quad.value.real(), series, 1e-10)
                << to_string(sign) << " c=" << c << " p=" << p << " q=" << q << " t=" << t;
          }
        }
      }
    }
  }
}

TEST(IntegrateUnit, RejectsShiftsBelowMinusOne) {
  EXPECT_THROW(integrate_unit(UnitIntegral::K(Sign::minus, -1.5, 0, 1.0, 1)), DomainError);
}

TEST(FermiDirac, Examples) {
  EXPECT_NEAR(fermi_dirac_polylog(1, 1.0), -kLog2, 1e-13);
  EXPECT_NEAR(fermi_dirac_polylog(2, 1.0), -kPi * kPi / 12.0, 1e-13);
  EXPECT_NEAR(fermi_dirac_polylog(3, 4.0), polylog_continued(3, -4.0).real(), 1e-12);
}

TEST(FermiDirac, MatchesPolylog) {
  for (int t = 1; t <= 4; ++t) {
    for (double y : {0.5, 1.0, 3.0, 10.0}) {
      EXPECT_LE(rel_diff(fermi_dirac_polylog(t, y), polylog_continued(t, -y).real()), 1e-9)
          << "t=" << t << " y=" << y;
    }
  }
}

TEST(EtaMellin, MatchesEta) {
  for (int s = 2; s <= 5; ++s) {
    EXPECT_NEAR(eta_mellin(s), dirichlet_eta(s), 1e-10) << "s=" << s;
  }
}

TEST(EtaMellin, UnreachableToleranceThrows) {
  EXPECT_THROW(eta_mellin(3, 1e-30), ConvergenceError);
}

}  // namespace
}  // namespace polyint
