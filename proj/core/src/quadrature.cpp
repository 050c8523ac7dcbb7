#include "hyperex/quadrature.hpp"

#include <numbers>

namespace hyperex::quad {

Rule1D composite_legendre(double a, double b, unsigned panels) {
  using Gauss = boost::math::quadrature::gauss<double, 16>;
  const auto& x = Gauss::abscissa();
  const auto& w = Gauss::weights();
  Rule1D rule;
  if (panels == 0) panels = 1;
  rule.nodes.reserve(panels * 16);
  rule.weights.reserve(panels * 16);
  const double h = (b - a) / panels;
  for (unsigned p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    const double half = 0.5 * h;
    for (std::size_t k = 0; k < x.size(); ++k) {
      rule.nodes.push_back(mid - half * x[k]);
      rule.weights.push_back(half * w[k]);
      rule.nodes.push_back(mid + half * x[k]);
      rule.weights.push_back(half * w[k]);
    }
  }
  return rule;
}

Rule1D periodic_trapezoid(unsigned n) {
  Rule1D rule;
  if (n == 0) n = 1;
  rule.nodes.resize(n);
  rule.weights.assign(n, 2.0 * std::numbers::pi / n);
  for (unsigned k = 0; k < n; ++k) rule.nodes[k] = 2.0 * std::numbers::pi * k / n;
  return rule;
}

}  // namespace hyperex::quad
