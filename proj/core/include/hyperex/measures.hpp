#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>

#include "hyperex/geometry.hpp"
#include "hyperex/quadrature.hpp"

namespace hyperex::measures {

using geometry::HyperboloidParams;
using geometry::SpacetimePoint;
using geometry::Vector;

enum class Sheet { plus, minus, both };

/// sigma_s on the upper sheet, its reflection, or the two-sheeted sum.
struct MeasureSpec {
  HyperboloidParams params;
  Sheet sheet = Sheet::plus;
};

/// Closed-form n-fold convolution sigma_s^{(*n)}; (d, n) in {(2,2), (2,3), (3,2)}.
struct ConvClosedForm {
  int d = 2;
  int n = 2;
  double s = 1.0;

  /// Throws UnsupportedError for other (d, n) and ValidationError for s <= 0.
  void validate() const;
};

/// Value of the convolution at p; zero off the closed support
/// tau >= sqrt((n s)^2 + |xi|^2).
double conv_closed(const ConvClosedForm& form, const SpacetimePoint& p);

/// Same value as a function of the invariant m^2 = tau^2 - |xi|^2 only
/// (caller guarantees tau > 0).
double conv_closed_invariant(const ConvClosedForm& form, double m2);

enum class Attainment { boundary, infinity };

struct SupNorm {
  double value = 0.0;
  Attainment attained = Attainment::infinity;
};

SupNorm conv_sup_norm(const ConvClosedForm& form);

std::string_view to_string(Attainment a);

/// Test function on R^{d+1} together with a Euclidean radius outside which
/// it is negligible.
struct TestFunction {
  std::function<double(const Vector& xi, double tau)> g;
  double decay_radius = 0.0;
};

/// int g d sigma over the selected sheet(s) by a radial-angular tensor rule.
/// The error is the difference to the same rule at half resolution. Throws
/// BudgetError when quad.truncation_radius is set but does not cover the
/// declared decay radius.
Estimate surface_integral(const MeasureSpec& spec, const TestFunction& g, const QuadSpec& quad);

/// Window depending on (|xi|, tau) only; negligible for tau > tau_max.
struct RadialWindow {
  std::function<double(double rho, double tau)> g;
  double tau_max = 0.0;
};

struct PairingResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t samples = 0;
  bool monte_carlo = false;
  /// Set when the time budget ran out before all samples were drawn.
  bool partial = false;
};

/// int g d sigma^{(*n)} = int g(x_1 + ... + x_n, psi(x_1) + ... + psi(x_n))
/// prod dx_i / psi(x_i) on the upper sheet. n = 2 uses a tensor
/// Gauss-Legendre rule in (psi_1, psi_2, relative angle); n = 3 draws
/// quad.samples points from the density e^{-beta psi}/psi with seed
/// quad.seed (beta = quad.importance_rate).
PairingResult conv_pairing_oracle(const MeasureSpec& spec, int n, const RadialWindow& window,
                                  const QuadSpec& quad);

/// int g(|xi|, tau) sigma^{(*n)}(xi, tau) dxi dtau from the closed form,
/// integrated in (|xi|, tau^2 - |xi|^2) by adaptive quadrature.
Estimate closed_pairing(const ConvClosedForm& form, const RadialWindow& window,
                        double rel_tol = 1e-10);

enum class PointRoute {
  /// Resolve the delta directly at p (rays for d = 2, bipolar coordinates
  /// for d = 3).
  direct,
  /// Move p to (0, m) with geometry::normal_form and resolve the delta there.
  reduced,
};

struct PointOracleResult {
  double value = 0.0;
  double error = 0.0;
  double mass = 0.0;
  /// tau^2 - |xi|^2 - (2s)^2 is within 1e-8 (1 + tau^2) of zero.
  bool ill_conditioned = false;
};

/// Pointwise sigma_s * sigma_s(p) without using the closed form. Requires
/// n == 2 and p strictly inside the support; throws DomainError otherwise.
PointOracleResult conv_point_oracle(const MeasureSpec& spec, int n, const SpacetimePoint& p,
                                    const QuadSpec& quad, PointRoute route = PointRoute::direct);

/// Sheet pattern of a sum of two or three hyperboloid points, e.g. "++-".
enum class SumCase { pp, pm, mm, ppp, ppm, pmm, mmm };

SumCase parse_sum_case(std::string_view text);
std::string_view to_string(SumCase c);

/// Samples points on the named sheets, forms their sum and counts sums that
/// fall outside the cone region the sheets predict.
std::size_t sum_support_predicates(double s, int d, SumCase which, std::size_t samples,
                                   std::uint64_t seed);

/// Violations of sqrt(s^2+a^2) sqrt(s^2+b^2) >= s^2 + ab and of
/// sqrt(4s^2+a^2) sqrt(s^2+b^2) >= 2s^2 + ab over random (a, b, s).
std::size_t scalar_inequality_violations(std::size_t samples, std::uint64_t seed);

}  // namespace hyperex::measures
