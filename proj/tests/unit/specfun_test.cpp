#include <cmath>
#include <complex>

#include <gtest/gtest.h>
#include <hyperex/errors.hpp>
#include <hyperex/specfun.hpp>

#include "oracles.hpp"

namespace {

using namespace hyperex;
namespace ref = hyperex::testing;

TEST(ExpIntegral, MatchesStandardLibraryAcrossRange) {
  for (int sign : {-1, 1}) {
    for (int k = 0; k <= 120; ++k) {
      const double x = sign * std::pow(10.0, -6.0 + 8.8 * k / 120.0);
      if (x > 700.0) continue;
      EXPECT_NEAR(specfun::exp_integral_ei(x) / ref::ei(x), 1.0, 1e-12) << "x = " << x;
    }
  }
}

TEST(ExpIntegral, ReferenceValueAtMinusOne) {
  EXPECT_NEAR(specfun::exp_integral_ei(-1.0), -0.21938393439552, 1e-12);
}

TEST(ExpIntegral, RegimeSeamsAreContinuous) {
  for (double x : {-1.0, 40.0}) {
    const double below = specfun::exp_integral_ei(std::nextafter(x, -1e9));
    const double above = specfun::exp_integral_ei(std::nextafter(x, 1e9));
    EXPECT_NEAR(below / above, 1.0, 1e-13) << "x = " << x;
  }
}

TEST(ExpIntegral, RejectsZeroAndOverflow) {
  EXPECT_THROW(specfun::exp_integral_ei(0.0), DomainError);
  EXPECT_THROW(specfun::exp_integral_ei(800.0), DomainError);
  EXPECT_THROW(specfun::exp_integral_ei(NAN), DomainError);
}

TEST(ScaledEi, AgreesWhereDirectProductIsRepresentable) {
  for (double a : {1e-4, 0.1, 1.0, 7.5, 50.0, 300.0}) {
    EXPECT_NEAR(specfun::scaled_ei_negative(a) / (std::exp(a) * ref::ei(-a)), 1.0, 1e-12) << a;
  }
}

TEST(ScaledEi, StaysFiniteForHugeArguments) {
  const double a = 1e8;
  const double v = specfun::scaled_ei_negative(a);
  ASSERT_TRUE(std::isfinite(v));
  EXPECT_NEAR(-a * v, 1.0 - 1.0 / a, 1e-15);
}

TEST(Profiles, MatchDefinitions) {
  for (double a : {1e-3, 0.05, 1.0, 4.0, 30.0}) {
    const double e = std::exp(a) * ref::ei(-a);
    EXPECT_NEAR(specfun::decreasing_profile(a), 1.0 - a - a * a * e, 1e-11);
    EXPECT_NEAR(specfun::increasing_profile(a), -a * e, 1e-12);
  }
}

TEST(Profiles, StrictlyMonotoneAndBounded) {
  double prev_down = 1.0;
  double prev_up = 0.0;
  for (int k = 0; k < 400; ++k) {
    const double a = std::pow(10.0, -4.0 + 9.0 * k / 399.0);
    const double down = specfun::decreasing_profile(a);
    const double up = specfun::increasing_profile(a);
    EXPECT_LT(down, prev_down);
    EXPECT_GT(up, prev_up);
    EXPECT_GT(down, 0.0);
    EXPECT_LT(up, 1.0);
    prev_down = down;
    prev_up = up;
  }
}

TEST(BesselJ0, MatchesStandardLibrary) {
  for (int k = 0; k <= 200; ++k) {
    const double x = 0.25 * k;
    EXPECT_NEAR(specfun::bessel_j0(x), ref::j0(x), 1e-13) << x;
  }
}

TEST(PrincipalSqrt, BranchAndValues) {
  const auto w = specfun::principal_sqrt({0.0, 1.0});
  EXPECT_NEAR(w.real(), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(w.imag(), std::sqrt(0.5), 1e-15);
  EXPECT_GE(specfun::principal_sqrt({-4.0, -1e-300}).real(), 0.0);
  EXPECT_THROW(specfun::principal_sqrt({-1.0, 0.0}), BranchCutError);
}

TEST(LaplaceKernel, MatchesDirectIntegral) {
  const double b = 1.0;
  for (auto [lambda, a] : {std::pair{std::complex<double>(1.0, 0.0), 0.5},
                           std::pair{std::complex<double>(0.7, -2.0), 1.5},
                           std::pair{std::complex<double>(2.0, 3.0), 0.0}}) {
    const auto direct = ref::simpson(
        [&](double v) {
          const double u = b + v * v;
          return 2.0 * v * std::exp(-lambda * u) * ref::j0(a * std::sqrt(v * v * (u + b)));
        },
        0.0, std::sqrt(60.0 / lambda.real()), 100000);
    EXPECT_LT(std::abs(specfun::laplace_j0_kernel(lambda, a, b) - direct), 1e-10);
  }
}

}  // namespace
