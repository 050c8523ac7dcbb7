#include <cmath>
#include <random>

#include <gtest/gtest.h>
#include <hyperex/errors.hpp>
#include <hyperex/geometry.hpp>
#include <hyperex/measures.hpp>

#include "oracles.hpp"

namespace {

using namespace hyperex;
using geometry::SpacetimePoint;
using geometry::Vector;
namespace ref = hyperex::testing;
using ref::kPi;

SpacetimePoint on_axis(int d, double tau) { return {Vector::Zero(d), tau}; }

TEST(ConvClosed, ValuesOnTimeAxis) {
  const double s = 1.3;
  for (double tau : {2.7, 3.0, 5.0, 40.0}) {
    EXPECT_NEAR(measures::conv_closed({2, 2, s}, on_axis(2, tau)), 2.0 * kPi / tau, 1e-14);
    EXPECT_NEAR(measures::conv_closed({3, 2, s}, on_axis(3, tau)), 2.0 * kPi * std::sqrt(1.0 - 4.0 * s * s / (tau * tau)),
                1e-14);
  }
  for (double tau : {4.0, 8.0}) {
    EXPECT_NEAR(measures::conv_closed({2, 3, s}, on_axis(2, tau)), 4.0 * kPi * kPi * (1.0 - 3.0 * s / tau), 1e-13);
  }
  EXPECT_NEAR(measures::conv_closed({2, 2, 1.0}, on_axis(2, 4.0)), kPi / 2.0, 1e-15);
}

TEST(ConvClosed, ZeroOutsideSupport) {
  Vector xi(2);
  xi << 3.0, 0.0;
  EXPECT_EQ(measures::conv_closed({2, 2, 1.0}, {xi, 3.5}), 0.0);
  EXPECT_EQ(measures::conv_closed({2, 2, 1.0}, on_axis(2, 1.0)), 0.0);
  EXPECT_EQ(measures::conv_closed({2, 3, 1.0}, on_axis(2, 2.9)), 0.0);
}

TEST(ConvClosed, RejectsUnsupportedForms) {
  EXPECT_THROW(measures::conv_closed({3, 3, 1.0}, on_axis(3, 9.0)), UnsupportedError);
  EXPECT_THROW(measures::conv_closed({2, 2, -1.0}, on_axis(2, 9.0)), ValidationError);
  EXPECT_THROW(measures::conv_closed({2, 2, 1.0}, on_axis(3, 9.0)), ValidationError);
}

TEST(ConvClosed, SupNorms) {
  const auto a = measures::conv_sup_norm({2, 2, 2.0});
  EXPECT_DOUBLE_EQ(a.value, kPi / 2.0);
  EXPECT_EQ(a.attained, measures::Attainment::boundary);
  EXPECT_DOUBLE_EQ(measures::conv_sup_norm({2, 3, 1.0}).value, 4.0 * kPi * kPi);
  EXPECT_EQ(measures::conv_sup_norm({3, 2, 1.0}).attained, measures::Attainment::infinity);
  EXPECT_DOUBLE_EQ(measures::conv_sup_norm({3, 2, 1.0}).value, 2.0 * kPi);
}

TEST(PointOracle, AgreesWithClosedForm) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int d : {2, 3}) {
    const measures::MeasureSpec spec{{d, 1.0}, measures::Sheet::plus};
    for (int k = 0; k < 25; ++k) {
      const Vector xi = geometry::random_in_ball(d, 5.0, rng);
      const double m = 2.0 + 0.01 + 6.0 * u(rng);
      const SpacetimePoint p{xi, std::sqrt(m * m + xi.squaredNorm())};
      const double closed = measures::conv_closed({d, 2, 1.0}, p);
      for (auto route : {measures::PointRoute::direct, measures::PointRoute::reduced}) {
        const auto r = measures::conv_point_oracle(spec, 2, p, {}, route);
        EXPECT_NEAR(r.value / closed, 1.0, 1e-9);
        EXPECT_NEAR(r.mass, m, 1e-10 * p.tau);
      }
    }
  }
}

TEST(PointOracle, LowerSheetIsReflection) {
  const measures::MeasureSpec spec{{2, 1.0}, measures::Sheet::minus};
  const auto r = measures::conv_point_oracle(spec, 2, on_axis(2, -4.0), {});
  EXPECT_NEAR(r.value, kPi / 2.0, 1e-12);
}

TEST(PointOracle, RejectsPointsOffSupport) {
  const measures::MeasureSpec spec{{2, 1.0}, measures::Sheet::plus};
  EXPECT_THROW(measures::conv_point_oracle(spec, 2, on_axis(2, 1.5), {}), DomainError);
  EXPECT_THROW(measures::conv_point_oracle(spec, 3, on_axis(2, 9.0), {}), UnsupportedError);
}

TEST(SurfaceIntegral, ExponentialWeight) {
  for (int d : {2, 3}) {
    const double s = 0.8;
    const measures::TestFunction g{[](const Vector&, double tau) { return std::exp(-2.0 * tau); }, 40.0};
    const Estimate e = measures::surface_integral({{d, s}, measures::Sheet::plus}, g, {});
    EXPECT_NEAR(e.value / ref::l2_norm_sq(d, s, 1.0), 1.0, 1e-9) << "d = " << d;
  }
}

TEST(SurfaceIntegral, BothSheetsDoubleAnEvenWeight) {
  const measures::TestFunction g{[](const Vector&, double tau) { return std::exp(-2.0 * std::abs(tau)); }, 40.0};
  const Estimate one = measures::surface_integral({{2, 1.0}, measures::Sheet::plus}, g, {});
  const Estimate two = measures::surface_integral({{2, 1.0}, measures::Sheet::both}, g, {});
  EXPECT_NEAR(two.value, 2.0 * one.value, 1e-12);
}

TEST(SurfaceIntegral, TruncationBelowDecayRadiusIsABudgetError) {
  QuadSpec q;
  q.truncation_radius = 2.0;
  const measures::TestFunction g{[](const Vector&, double tau) { return std::exp(-tau); }, 40.0};
  EXPECT_THROW(measures::surface_integral({{2, 1.0}, measures::Sheet::plus}, g, q), BudgetError);
}

// With the window e^{-tau} the pairing factorises into (int e^{-psi} d sigma)^n.
double factorised(int d, int n, double s) {
  const double single = d == 2 ? 2.0 * kPi * std::exp(-s) : 4.0 * kPi * s * std::cyl_bessel_k(1.0, s);
  return std::pow(single, n);
}

TEST(Pairing, TensorRuleFactorises) {
  const measures::RadialWindow window{[](double, double tau) { return std::exp(-tau); }, 45.0};
  for (int d : {2, 3}) {
    const auto r = measures::conv_pairing_oracle({{d, 1.0}, measures::Sheet::plus}, 2, window, {});
    EXPECT_NEAR(r.value / factorised(d, 2, 1.0), 1.0, 1e-9) << "d = " << d;
    EXPECT_FALSE(r.monte_carlo);
  }
}

TEST(Pairing, ClosedPairingFactorises) {
  const measures::RadialWindow window{[](double, double tau) { return std::exp(-tau); }, 45.0};
  EXPECT_NEAR(measures::closed_pairing({2, 2, 1.0}, window).value / factorised(2, 2, 1.0), 1.0, 1e-8);
  EXPECT_NEAR(measures::closed_pairing({3, 2, 1.0}, window).value / factorised(3, 2, 1.0), 1.0, 1e-8);
  EXPECT_NEAR(measures::closed_pairing({2, 3, 1.0}, window).value / factorised(2, 3, 1.0), 1.0, 1e-8);
}

TEST(Pairing, MonteCarloWithinErrorBarAndDeterministic) {
  const measures::RadialWindow window{[](double, double tau) { return std::exp(-tau); }, 45.0};
  QuadSpec q;
  q.samples = 200000;
  q.seed = 4;
  q.importance_rate = 0.5;
  const auto a = measures::conv_pairing_oracle({{2, 1.0}, measures::Sheet::plus}, 3, window, q);
  const auto b = measures::conv_pairing_oracle({{2, 1.0}, measures::Sheet::plus}, 3, window, q);
  EXPECT_TRUE(a.monte_carlo);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.samples, q.samples);
  EXPECT_LT(std::abs(a.value - factorised(2, 3, 1.0)), 4.0 * a.error);
}

TEST(SumSupport, NoViolations) {
  for (const char* name : {"++", "+-", "--", "+++", "++-", "+--", "---"}) {
    const auto c = measures::parse_sum_case(name);
    EXPECT_EQ(measures::to_string(c), name);
    EXPECT_EQ(measures::sum_support_predicates(1.0, 2, c, 20000, 5), 0u) << name;
    EXPECT_EQ(measures::sum_support_predicates(0.3, 3, c, 20000, 6), 0u) << name;
  }
  EXPECT_THROW(measures::parse_sum_case("+*"), ValidationError);
  EXPECT_EQ(measures::scalar_inequality_violations(100000, 7), 0u);
}

}  // namespace
