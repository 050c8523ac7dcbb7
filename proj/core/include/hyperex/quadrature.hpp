#pragma once

// Thin wrappers over Boost.Math quadrature with the budget conventions used
// throughout the library.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace hyperex {

/// Quadrature / Monte-Carlo budget shared by every numerical oracle.
struct QuadSpec {
  enum class Rule { gauss_kronrod, gauss_legendre, monte_carlo };

  Rule rule = Rule::gauss_kronrod;
  /// Spatial truncation radius in y; 0 selects one from the declared decay.
  double truncation_radius = 0.0;
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 0;
  double abs_tol = 1e-13;
  double rel_tol = 1e-11;
  unsigned max_depth = 20;
  /// Composite Gauss-Legendre panels per radial direction.
  unsigned panels = 48;
  /// Nodes per angular direction for tensor rules.
  unsigned angular_nodes = 96;
  /// Upper bound on oscillation periods across an oscillatory integral.
  double max_oscillations = 2.0e4;
  /// Monte-Carlo importance rate beta of the density e^{-beta psi}/psi.
  double importance_rate = 1.0;
  /// Wall-clock budget for sampling oracles; 0 means unlimited.
  double time_budget_ms = 0.0;
};

/// A numerical value with an absolute error estimate.
struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

namespace quad {

/// Adaptive 31-point Gauss-Kronrod on a finite interval.
template <class F>
Estimate kronrod(F&& f, double a, double b, double rel_tol = 1e-12, unsigned max_depth = 20) {
  if (a == b) return {};
  double err = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      f, a, b, max_depth, rel_tol, &err, nullptr);
  return {v, err};
}

/// Double-exponential rule on a finite interval; tolerant of endpoint
/// algebraic singularities.
template <class F>
Estimate tanh_sinh(F&& f, double a, double b, double rel_tol = 1e-12) {
  if (a == b) return {};
  static thread_local boost::math::quadrature::tanh_sinh<double> integrator(15);
  double err = 0.0;
  const double v = integrator.integrate(f, a, b, rel_tol, &err, nullptr);
  return {v, err};
}

/// Integral over [lower, inf) after the substitution u = lower + v / scale,
/// so that a decay like e^{-scale (u - lower)} becomes e^{-v}.
template <class F>
Estimate half_line(F&& f, double lower, double scale, double rel_tol = 1e-12) {
  static thread_local boost::math::quadrature::exp_sinh<double> integrator(12);
  auto g = [&](double v) { return f(lower + v / scale); };
  double err = 0.0;
  const double v = integrator.integrate(g, 0.0, std::numeric_limits<double>::infinity(), rel_tol,
                                        &err, nullptr);
  return {v / scale, err / scale};
}

/// Nodes and weights of a composite Gauss-Legendre rule on [a, b].
struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }
};

Rule1D composite_legendre(double a, double b, unsigned panels);

/// Periodic trapezoid rule on [0, 2 pi) with n nodes.
Rule1D periodic_trapezoid(unsigned n);

}  // namespace quad
}  // namespace hyperex
