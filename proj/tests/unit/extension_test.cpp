#include <cmath>

#include <gtest/gtest.h>
#include <hyperex/errors.hpp>
#include <hyperex/extension.hpp>

#include "oracles.hpp"

namespace {

using namespace hyperex;
using geometry::Vector;
namespace ref = hyperex::testing;
using ref::kPi;

Vector radial(int d, double r) {
  Vector x = Vector::Zero(d);
  x[0] = r;
  return x;
}

TEST(Extension, ClosedFormAgainstBesselSum) {
  for (auto [a, s] : {std::pair{1.0, 1.0}, std::pair{0.5, 2.0}}) {
    const extension::ExpProfile profile{a, {2, s}};
    for (double r : {0.0, 1.5, 3.0}) {
      for (double t : {0.0, 2.0, -3.5}) {
        const auto closed = extension::extension_closed(profile, radial(2, r), t);
        EXPECT_LT(std::abs(closed - ref::extension_d2(a, s, r, t)), 1e-9) << r << ' ' << t;
      }
    }
  }
}

TEST(Extension, AtOriginIsTheL1Norm) {
  const extension::ExpProfile profile{1.5, {2, 0.5}};
  const auto v = extension::extension_closed(profile, radial(2, 0.0), 0.0);
  EXPECT_NEAR(v.real(), 2.0 * kPi * std::exp(-0.75) / 1.5, 1e-14);
  EXPECT_EQ(v.imag(), 0.0);
}

TEST(Extension, QuadratureMatchesClosedForm) {
  const extension::ExpProfile profile{0.8, {2, 1.0}};
  for (double r : {0.0, 2.0, 4.0}) {
    for (double t : {0.0, 1.0, 4.0}) {
      const auto q = extension::extension_quadrature(profile, radial(2, r), t, {});
      EXPECT_LT(std::abs(q.value - extension::extension_closed(profile, radial(2, r), t)), 1e-10);
    }
  }
}

TEST(Extension, ThreeDimensionalQuadratureAtOrigin) {
  const double a = 1.2;
  const double s = 0.7;
  const extension::ExpProfile profile{a, {3, s}};
  const auto q = extension::extension_quadrature(profile, radial(3, 0.0), 0.0, {});
  EXPECT_NEAR(q.value.real() / (4.0 * kPi * s * std::cyl_bessel_k(1.0, a * s) / a), 1.0, 1e-10);
  EXPECT_THROW(extension::extension_closed(profile, radial(3, 0.0), 0.0), UnsupportedError);
}

TEST(Extension, OscillationBudget) {
  QuadSpec q;
  q.max_oscillations = 10.0;
  const extension::ExpProfile profile{1e-3, {2, 1.0}};
  EXPECT_THROW(extension::extension_quadrature(profile, radial(2, 50.0), 50.0, q), BudgetError);
}

TEST(Norms, L2NormMatchesBesselReference) {
  for (int d : {2, 3}) {
    for (double a : {1e-3, 0.5, 7.0}) {
      EXPECT_NEAR(extension::l2_norm_sq({a, {d, 1.3}}) / ref::l2_norm_sq(d, 1.3, a), 1.0, 1e-12);
    }
  }
}

TEST(Norms, ConvolutionL2ClosedAgainstReference) {
  for (double a : {1e-3, 0.2, 1.0, 30.0}) {
    const extension::ExpProfile profile{a, {2, 1.0}};
    EXPECT_NEAR(extension::weighted_conv_l2_sq_closed(profile, 2) / ref::conv22_l2_sq(1.0, a), 1.0, 1e-12);
    EXPECT_NEAR(extension::weighted_conv_l2_sq_closed(profile, 3) / ref::conv23_l2_sq(1.0, a), 1.0, 1e-9);
  }
}

TEST(Norms, ConvolutionL2QuadratureAgreesWithClosed) {
  for (double a : {0.05, 1.0, 10.0}) {
    const extension::ExpProfile profile{a, {2, 1.0}};
    for (int k : {2, 3}) {
      const Estimate e = extension::weighted_conv_l2_sq(profile, k, {});
      EXPECT_NEAR(e.value / extension::weighted_conv_l2_sq_closed(profile, k), 1.0, 1e-9);
    }
  }
}

TEST(Norms, WeightedConvolutionIsExponentialTimesMeasure) {
  const extension::ExpProfile profile{0.4, {2, 1.0}};
  const geometry::SpacetimePoint p{radial(2, 1.0), 3.0};
  EXPECT_NEAR(extension::weighted_conv_closed(profile, 2, p), std::exp(-1.2) * 2.0 * kPi / std::sqrt(8.0), 1e-14);
}

TEST(Identities, CauchySchwarzEquality) {
  const auto sides = extension::cauchy_schwarz_sides({1.0, {2, 1.0}}, {});
  EXPECT_LE(std::abs(sides.lhs.value - sides.rhs.value), sides.lhs.error + sides.rhs.error + 1e-9 * sides.lhs.value);
}

TEST(Identities, ConvolutionBoundIsStrict) {
  for (int n : {2, 3}) {
    const auto b = extension::convolution_bound({0.5, {2, 1.0}}, n, {});
    EXPECT_LT(b.norm + b.error, b.bound);
  }
  const auto b = extension::convolution_bound({0.5, {3, 1.0}}, 2, {});
  EXPECT_LT(b.norm + b.error, b.bound);
}

TEST(Identities, PlancherelForTheL4Norm) {
  const extension::ExpProfile profile{1.0, {2, 1.0}};
  const Estimate direct = extension::l4_norm_direct(profile);
  const Estimate conv = extension::lp_norm_extension_via_conv(profile, 4, {});
  EXPECT_NEAR(direct.value / conv.value, 1.0, 1e-5);
  EXPECT_THROW(extension::lp_norm_extension_via_conv({1.0, {3, 1.0}}, 6, {}), UnsupportedError);
}

TEST(Profile, Validation) {
  EXPECT_THROW((extension::ExpProfile{0.0, {2, 1.0}}.validate()), ValidationError);
  EXPECT_THROW((extension::ExpProfile{1.0, {2, -1.0}}.validate()), ValidationError);
}

}  // namespace
