#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace hyperex::geometry {

/// Spatial vector of dimension d <= 3 (stored inline, never on the heap).
using Vector = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 3, 1>;
/// (d+1) x (d+1) matrix, d <= 3; time is the last coordinate.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, 4, 4>;
/// d x d spatial matrix.
using SpatialMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, 3, 3>;

/// Dimension and mass of the hyperboloid {(y, sqrt(s^2 + |y|^2))}.
struct HyperboloidParams {
  int d = 2;
  double s = 1.0;

  /// Throws ValidationError unless d is 2 or 3 and s is positive and finite.
  void validate() const;
};

/// Frequency-side point (xi, tau).
struct SpacetimePoint {
  Vector xi;
  double tau = 0.0;

  int dim() const noexcept { return static_cast<int>(xi.size()); }
  /// tau^2 - |xi|^2.
  double interval() const noexcept { return tau * tau - xi.squaredNorm(); }
};

SpacetimePoint make_point(std::initializer_list<double> xi, double tau);

/// sqrt(s^2 + r^2).
double psi(const HyperboloidParams& params, double r);
double psi(const HyperboloidParams& params, const Vector& y);

/// (y, psi_s(y)) on the upper sheet.
SpacetimePoint lift(const HyperboloidParams& params, const Vector& y);

/// True when tau > sqrt((n s)^2 + |xi|^2), the open support region of the
/// n-fold convolution.
bool in_convolution_region(const SpacetimePoint& p, int n, double s);

/// diag(-1, ..., -1, +1) of size d + 1.
Matrix minkowski_form(int d);

/// Linear map of R^{d+1} preserving x . J y and the upper light cone.
class LorentzMap {
 public:
  explicit LorentzMap(Matrix m);

  static LorentzMap identity(int d);

  int dim() const noexcept { return static_cast<int>(m_.rows()) - 1; }
  const Matrix& matrix() const noexcept { return m_; }

  SpacetimePoint apply(const SpacetimePoint& p) const;
  /// J m^T J, the group inverse.
  LorentzMap inverse() const;
  /// max_ij |(m^T J m - J)_ij|.
  double form_defect() const;

 private:
  Matrix m_;
};

/// L^t: hyperbolic rotation of (xi_1, tau) with factor 1/sqrt(1 - t^2).
/// Throws DomainError unless |t| < 1.
LorentzMap boost(double t, int d);

/// R_A (xi, tau) = (A xi, tau) for orthogonal A (A^T A = I within 1e-10).
LorentzMap rotation_embed(const SpatialMatrix& a);

/// P_{i,j}: swaps spatial coordinates i and j (1-based).
LorentzMap coord_swap(int i, int j, int d);

/// Matrix product; compose(outer, inner) applies inner first.
LorentzMap compose(const LorentzMap& outer, const LorentzMap& inner);

struct NormalForm {
  LorentzMap map;
  double mass = 0.0;
};

/// L = L^t o R_A with A xi = (|xi|, 0, ...) and t = -|xi|/tau, so that
/// L (xi, tau) = (0, sqrt(tau^2 - |xi|^2)). Requires tau > |xi|.
NormalForm normal_form(const SpacetimePoint& p);

/// d_s(x, y) = (1/2s) sqrt((psi(x) + psi(y))^2 - |x + y|^2) - 1, evaluated
/// without cancellation for nearby points.
double ds_metric(const HyperboloidParams& params, const Vector& x, const Vector& y);

/// D_s on spacetime points: (2s)^{-1} sqrt((tau1 + tau2)^2 - |xi1 + xi2|^2) - 1.
/// Throws DomainError when the radicand is not positive.
double Ds_metric(const HyperboloidParams& params, const SpacetimePoint& p1,
                 const SpacetimePoint& p2);

/// K_s = 2s / sqrt((psi(x) + psi(y))^2 - |x + y|^2) = 1 / (d_s + 1).
double kernel_Ks(const HyperboloidParams& params, const Vector& x, const Vector& y);

/// Tolerance used for "x == y" in floating point: 1e-9 (1 + |x|).
bool same_point(const Vector& x, const Vector& y);

/// Fitted constants C1 |x-y|^2 <= d_s(x,y) <= C2 |x-y| over sampled pairs in
/// the ball of radius R.
struct DsConstants {
  double c1 = 0.0;
  double c2 = 0.0;
  std::size_t samples = 0;
};

DsConstants fit_ds_constants(const HyperboloidParams& params, double radius, std::size_t samples,
                             std::uint64_t seed);

/// Haar-random orthogonal d x d matrix.
SpatialMatrix random_orthogonal(int d, std::mt19937_64& rng);

/// Random element of L+: R_A o L^t o R_B with |t| <= max_speed.
LorentzMap random_lorentz(int d, std::mt19937_64& rng, double max_speed = 0.8);

/// Uniform point in the ball of radius R in R^d.
Vector random_in_ball(int d, double radius, std::mt19937_64& rng);

}  // namespace hyperex::geometry
