#include <cmath>
#include <random>

#include <gtest/gtest.h>
#include <hyperex/errors.hpp>
#include <hyperex/geometry.hpp>

namespace {

using namespace hyperex;
using geometry::SpacetimePoint;
using geometry::Vector;

TEST(Hyperboloid, PsiAndLift) {
  const geometry::HyperboloidParams params{3, 2.0};
  Vector y(3);
  y << 1.0, 2.0, 2.0;
  EXPECT_DOUBLE_EQ(geometry::psi(params, y), std::sqrt(13.0));
  const SpacetimePoint p = geometry::lift(params, y);
  EXPECT_DOUBLE_EQ(p.interval(), 4.0);
  EXPECT_THROW((geometry::HyperboloidParams{4, 1.0}.validate()), ValidationError);
  EXPECT_THROW((geometry::HyperboloidParams{2, 0.0}.validate()), ValidationError);
}

TEST(Lorentz, BoostLayout) {
  const auto b = geometry::boost(0.6, 2);
  const double g = 1.0 / std::sqrt(1.0 - 0.36);
  EXPECT_DOUBLE_EQ(b.matrix()(0, 0), g);
  EXPECT_DOUBLE_EQ(b.matrix()(2, 2), g);
  EXPECT_DOUBLE_EQ(b.matrix()(0, 2), g * 0.6);
  EXPECT_DOUBLE_EQ(b.matrix()(2, 0), g * 0.6);
  EXPECT_DOUBLE_EQ(b.matrix()(1, 1), 1.0);
  EXPECT_LT(b.form_defect(), 1e-14);
  EXPECT_THROW(geometry::boost(1.0, 2), DomainError);
}

TEST(Lorentz, GroupOperationsPreserveForm) {
  std::mt19937_64 rng(3);
  for (int d : {2, 3}) {
    for (int k = 0; k < 50; ++k) {
      const auto a = geometry::random_lorentz(d, rng, 0.9);
      const auto b = geometry::compose(geometry::rotation_embed(geometry::random_orthogonal(d, rng)), a);
      EXPECT_LT(b.form_defect(), 1e-12);
      const auto id = geometry::compose(b, b.inverse());
      EXPECT_LT((id.matrix() - geometry::LorentzMap::identity(d).matrix()).norm(), 1e-12);
      EXPECT_LT(geometry::coord_swap(1, d, d).form_defect(), 1e-15);
    }
  }
}

TEST(Lorentz, RejectsNonLorentzMatrices) {
  geometry::Matrix m = geometry::Matrix::Identity(3, 3);
  m(0, 0) = 2.0;
  EXPECT_THROW(geometry::LorentzMap{m}, ValidationError);
  geometry::Matrix flip = geometry::Matrix::Identity(3, 3);
  flip(2, 2) = -1.0;
  EXPECT_THROW(geometry::LorentzMap{flip}, ValidationError);
}

TEST(Lorentz, IntervalInvariant) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    const auto l = geometry::random_lorentz(3, rng);
    const Vector xi = geometry::random_in_ball(3, 3.0, rng);
    const SpacetimePoint p{xi, 4.0};
    EXPECT_NEAR(l.apply(p).interval(), p.interval(), 1e-11 * (1.0 + l.matrix().squaredNorm()));
  }
}

TEST(NormalForm, MapsToTimeAxis) {
  std::mt19937_64 rng(9);
  for (int d : {2, 3}) {
    for (int k = 0; k < 100; ++k) {
      const Vector xi = geometry::random_in_ball(d, 8.0, rng);
      const SpacetimePoint p{xi, xi.norm() + 0.5};
      const auto nf = geometry::normal_form(p);
      const SpacetimePoint q = nf.map.apply(p);
      EXPECT_LT(q.xi.norm(), 1e-10 * p.tau);
      EXPECT_NEAR(q.tau, nf.mass, 1e-10 * p.tau);
      EXPECT_NEAR(nf.mass * nf.mass, p.interval(), 1e-10 * p.tau * p.tau);
    }
  }
  EXPECT_THROW(geometry::normal_form({Vector::Ones(2), 1.0}), DomainError);
}

TEST(Metric, KnownValueFromOrigin) {
  const geometry::HyperboloidParams params{2, 1.5};
  Vector zero = Vector::Zero(2);
  Vector y(2);
  y << 3.0, -1.0;
  const double psi = geometry::psi(params, y);
  EXPECT_NEAR(geometry::ds_metric(params, zero, y), std::sqrt((params.s + psi) / (2.0 * params.s)) - 1.0, 1e-15);
}

TEST(Metric, QuasiMetricProperties) {
  std::mt19937_64 rng(11);
  const geometry::HyperboloidParams params{3, 1.0};
  for (int k = 0; k < 1000; ++k) {
    const Vector x = geometry::random_in_ball(3, 4.0, rng);
    const Vector y = geometry::random_in_ball(3, 4.0, rng);
    const double d = geometry::ds_metric(params, x, y);
    EXPECT_GT(d, 0.0);
    EXPECT_DOUBLE_EQ(d, geometry::ds_metric(params, y, x));
    EXPECT_EQ(geometry::ds_metric(params, x, x), 0.0);
    EXPECT_NEAR(geometry::kernel_Ks(params, x, y), 1.0 / (1.0 + d), 1e-14);
    EXPECT_NEAR(geometry::Ds_metric(params, geometry::lift(params, x), geometry::lift(params, y)), d,
                1e-12 * (1.0 + d));
  }
}

TEST(Metric, StableForNearbyPoints) {
  const geometry::HyperboloidParams params{2, 1.0};
  Vector x(2);
  x << 0.3, 0.4;
  Vector y = x;
  y[0] += 1e-9;
  const double d = geometry::ds_metric(params, x, y);
  EXPECT_GT(d, 0.0);
  EXPECT_LT(d, 1e-18);
}

TEST(Metric, DsRejectsDegeneratePairs) {
  const geometry::HyperboloidParams params{2, 1.0};
  EXPECT_THROW(geometry::Ds_metric(params, {Vector::Zero(2), 0.0}, {Vector::Zero(2), 0.0}), DomainError);
}

TEST(Metric, FittedConstantsBracketSamples) {
  const geometry::HyperboloidParams params{2, 1.0};
  const auto fit = geometry::fit_ds_constants(params, 3.0, 5000, 17);
  EXPECT_GT(fit.c1, 0.0);
  EXPECT_GT(fit.c2, fit.c1);
  std::mt19937_64 rng(18);
  for (int k = 0; k < 2000; ++k) {
    const Vector x = geometry::random_in_ball(2, 3.0, rng);
    const Vector y = geometry::random_in_ball(2, 3.0, rng);
    const double dist = (x - y).norm();
    const double d = geometry::ds_metric(params, x, y);
    EXPECT_GE(d, 0.5 * fit.c1 * dist * dist);
    EXPECT_LE(d, 2.0 * fit.c2 * dist);
  }
}

TEST(Sampling, OrthogonalAndBall) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 100; ++k) {
    const auto q = geometry::random_orthogonal(3, rng);
    EXPECT_LT((q.transpose() * q - geometry::SpatialMatrix::Identity(3, 3)).norm(), 1e-13);
    EXPECT_LE(geometry::random_in_ball(3, 2.0, rng).norm(), 2.0);
  }
}

}  // namespace
