#include "hyperex/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hyperex/errors.hpp"

namespace hyperex::geometry {
namespace {

void require_dim(int d) {
  if (d < 1 || d > 3) throw ValidationError("dimension must be 1, 2 or 3, got " + std::to_string(d));
}

// |x|^2 |y|^2 - (x.y)^2 through the cross product, free of cancellation.
double wedge_squared(const Vector& x, const Vector& y) {
  switch (x.size()) {
    case 1:
      return 0.0;
    case 2: {
      const double c = x[0] * y[1] - x[1] * y[0];
      return c * c;
    }
    default: {
      const double c0 = x[1] * y[2] - x[2] * y[1];
      const double c1 = x[2] * y[0] - x[0] * y[2];
      const double c2 = x[0] * y[1] - x[1] * y[0];
      return c0 * c0 + c1 * c1 + c2 * c2;
    }
  }
}

// psi(x) psi(y) - x.y - s^2 >= 0, the excess of the Minkowski product of the
// two lifted points over s^2.
double lifted_excess(const HyperboloidParams& params, const Vector& x, const Vector& y) {
  const double s2 = params.s * params.s;
  const double xx = x.squaredNorm();
  const double yy = y.squaredNorm();
  const double xy = x.dot(y);
  const double pp = std::sqrt((s2 + xx) * (s2 + yy));
  if (xy >= 0.0) {
    const double dd = (x - y).squaredNorm();
    // 4 s^2 |x-y|^2 + |(x-y) ^ (x+y)|^2 with (x-y) ^ (x+y) = 2 x ^ y.
    const double num = 4.0 * s2 * dd + 4.0 * wedge_squared(x, y);
    return num / (4.0 * (s2 + pp + xy));
  }
  return (s2 * (xx + yy) + xx * yy) / (pp + s2) - xy;
}

}  // namespace

void HyperboloidParams::validate() const {
  if (d != 2 && d != 3) {
    throw ValidationError("hyperboloid dimension must be 2 or 3, got " + std::to_string(d));
  }
  if (!(s > 0.0) || !std::isfinite(s)) throw ValidationError("hyperboloid mass s must be positive");
}

SpacetimePoint make_point(std::initializer_list<double> xi, double tau) {
  SpacetimePoint p;
  p.xi.resize(static_cast<Eigen::Index>(xi.size()));
  Eigen::Index i = 0;
  for (double v : xi) p.xi[i++] = v;
  p.tau = tau;
  return p;
}

double psi(const HyperboloidParams& params, double r) { return std::hypot(params.s, r); }

double psi(const HyperboloidParams& params, const Vector& y) {
  return std::sqrt(params.s * params.s + y.squaredNorm());
}

SpacetimePoint lift(const HyperboloidParams& params, const Vector& y) {
  return SpacetimePoint{y, psi(params, y)};
}

bool in_convolution_region(const SpacetimePoint& p, int n, double s) {
  const double ns = n * s;
  return p.tau > std::sqrt(ns * ns + p.xi.squaredNorm());
}

Matrix minkowski_form(int d) {
  require_dim(d);
  Matrix j = Matrix::Identity(d + 1, d + 1);
  for (int i = 0; i < d; ++i) j(i, i) = -1.0;
  return j;
}

LorentzMap::LorentzMap(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 2 || m_.rows() > 4) {
    throw ValidationError("LorentzMap needs a square matrix of size 2..4");
  }
  const double scale = 1.0 + m_.squaredNorm();
  if (form_defect() > 1e-9 * scale) throw ValidationError("matrix does not preserve the form x.Jy");
  if (m_(m_.rows() - 1, m_.cols() - 1) <= 0.0) {
    throw ValidationError("matrix reverses time orientation");
  }
}

LorentzMap LorentzMap::identity(int d) {
  require_dim(d);
  return LorentzMap(Matrix::Identity(d + 1, d + 1));
}

SpacetimePoint LorentzMap::apply(const SpacetimePoint& p) const {
  const int d = dim();
  if (p.dim() != d) throw ValidationError("point dimension does not match map");
  Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 4, 1> v(d + 1);
  v.head(d) = p.xi;
  v[d] = p.tau;
  const Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 4, 1> w = m_ * v;
  return SpacetimePoint{w.head(d), w[d]};
}

LorentzMap LorentzMap::inverse() const {
  const Matrix j = minkowski_form(dim());
  return LorentzMap(j * m_.transpose() * j);
}

double LorentzMap::form_defect() const {
  const Matrix j = minkowski_form(dim());
  return (m_.transpose() * j * m_ - j).cwiseAbs().maxCoeff();
}

LorentzMap boost(double t, int d) {
  require_dim(d);
  if (!(std::abs(t) < 1.0)) throw DomainError("boost parameter must satisfy |t| < 1");
  const double gamma = 1.0 / std::sqrt((1.0 - t) * (1.0 + t));
  Matrix m = Matrix::Identity(d + 1, d + 1);
  m(0, 0) = gamma;
  m(0, d) = gamma * t;
  m(d, 0) = gamma * t;
  m(d, d) = gamma;
  return LorentzMap(std::move(m));
}

LorentzMap rotation_embed(const SpatialMatrix& a) {
  const int d = static_cast<int>(a.rows());
  require_dim(d);
  if (a.cols() != d) throw ValidationError("rotation matrix must be square");
  const double defect = (a.transpose() * a - SpatialMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (defect > 1e-10) throw ValidationError("rotation matrix is not orthogonal");
  Matrix m = Matrix::Identity(d + 1, d + 1);
  m.topLeftCorner(d, d) = a;
  return LorentzMap(std::move(m));
}

LorentzMap coord_swap(int i, int j, int d) {
  require_dim(d);
  if (i < 1 || i > d || j < 1 || j > d) throw ValidationError("swap indices must lie in 1..d");
  Matrix m = Matrix::Identity(d + 1, d + 1);
  m.row(i - 1).swap(m.row(j - 1));
  return LorentzMap(std::move(m));
}

LorentzMap compose(const LorentzMap& outer, const LorentzMap& inner) {
  if (outer.dim() != inner.dim()) throw ValidationError("cannot compose maps of different dimension");
  return LorentzMap(outer.matrix() * inner.matrix());
}

NormalForm normal_form(const SpacetimePoint& p) {
  const int d = p.dim();
  require_dim(d);
  const double r = p.xi.norm();
  if (!(p.tau > r)) throw DomainError("normal_form: point is not strictly inside the light cone");

  SpatialMatrix a = SpatialMatrix::Identity(d, d);
  if (r > 0.0) {
    // Householder reflection sending xi to (|xi|, 0, ..., 0).
    Vector v = p.xi;
    v[0] -= r;
    const double vv = v.squaredNorm();
    if (vv > 1e-30 * r * r) a -= (2.0 / vv) * (v * v.transpose());
  }
  const LorentzMap rot = rotation_embed(a);
  const LorentzMap lt = boost(-r / p.tau, d);
  const double mass = std::sqrt((p.tau - r) * (p.tau + r));
  return NormalForm{compose(lt, rot), mass};
}

double ds_metric(const HyperboloidParams& params, const Vector& x, const Vector& y) {
  const double s = params.s;
  const double excess = lifted_excess(params, x, y);
  const double radicand = 4.0 * s * s + 2.0 * excess;
  return excess / (s * (std::sqrt(radicand) + 2.0 * s));
}

double Ds_metric(const HyperboloidParams& params, const SpacetimePoint& p1, const SpacetimePoint& p2) {
  if (p1.dim() != p2.dim()) throw ValidationError("D_s: points of different dimension");
  const double t = p1.tau + p2.tau;
  const double r = (p1.xi + p2.xi).norm();
  const double radicand = (t - r) * (t + r);
  if (!(t > r) || !(radicand > 0.0)) throw DomainError("D_s: degenerate radicand");
  return std::sqrt(radicand) / (2.0 * params.s) - 1.0;
}

double kernel_Ks(const HyperboloidParams& params, const Vector& x, const Vector& y) {
  const double s = params.s;
  const double radicand = 4.0 * s * s + 2.0 * lifted_excess(params, x, y);
  return 2.0 * s / std::sqrt(radicand);
}

bool same_point(const Vector& x, const Vector& y) {
  return (x - y).norm() <= 1e-9 * (1.0 + x.norm());
}

DsConstants fit_ds_constants(const HyperboloidParams& params, double radius, std::size_t samples,
                             std::uint64_t seed) {
  params.validate();
  std::mt19937_64 rng(seed);
  DsConstants out;
  out.c1 = std::numeric_limits<double>::infinity();
  out.c2 = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const Vector x = random_in_ball(params.d, radius, rng);
    const Vector y = random_in_ball(params.d, radius, rng);
    const double dist = (x - y).norm();
    if (dist < 1e-6) continue;
    const double ds = ds_metric(params, x, y);
    out.c1 = std::min(out.c1, ds / (dist * dist));
    out.c2 = std::max(out.c2, ds / dist);
    ++out.samples;
  }
  return out;
}

SpatialMatrix random_orthogonal(int d, std::mt19937_64& rng) {
  require_dim(d);
  std::normal_distribution<double> normal;
  SpatialMatrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = normal(rng);
  Eigen::HouseholderQR<SpatialMatrix> qr(g);
  SpatialMatrix q = qr.householderQ();
  const SpatialMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j)
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  return q;
}

LorentzMap random_lorentz(int d, std::mt19937_64& rng, double max_speed) {
  std::uniform_real_distribution<double> speed(-max_speed, max_speed);
  const LorentzMap outer = rotation_embed(random_orthogonal(d, rng));
  const LorentzMap mid = boost(speed(rng), d);
  const LorentzMap inner = rotation_embed(random_orthogonal(d, rng));
  return compose(outer, compose(mid, inner));
}

Vector random_in_ball(int d, double radius, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Vector v(d);
  double n2 = 0.0;
  do {
    for (int i = 0; i < d; ++i) v[i] = normal(rng);
    n2 = v.squaredNorm();
  } while (n2 == 0.0);
  const double r = radius * std::pow(unit(rng), 1.0 / d);
  return v * (r / std::sqrt(n2));
}

}  // namespace hyperex::geometry
