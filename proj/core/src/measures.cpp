#include "hyperex/measures.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <boost/math/tools/roots.hpp>

#include "hyperex/errors.hpp"
#include "hyperex/parallel.hpp"

namespace hyperex::measures {
namespace {

constexpr double pi = std::numbers::pi;

double sphere_area(int d) { return d == 2 ? 2.0 * pi : 4.0 * pi; }

// Tensor rule for int g dsigma over the disc/ball of radius y_max.
double tensor_surface(const MeasureSpec& spec, const TestFunction& g, double y_max, unsigned panels,
                      unsigned angular) {
  const int d = spec.params.d;
  const double s = spec.params.s;
  const quad::Rule1D radial = quad::composite_legendre(0.0, y_max, panels);
  const quad::Rule1D phi = quad::periodic_trapezoid(angular);
  const quad::Rule1D polar = quad::composite_legendre(-1.0, 1.0, std::max(1u, (angular + 31) / 32));
  const bool upper = spec.sheet != Sheet::minus;
  const bool lower = spec.sheet != Sheet::plus;

  std::vector<double> partial(radial.size());
  parallel_for(radial.size(), [&](std::size_t i) {
    const double r = radial.nodes[i];
    const double ps = std::hypot(s, r);
    Vector y(d);
    std::vector<double> terms;
    auto add = [&](double w) {
      double v = 0.0;
      if (upper) v += g.g(y, ps);
      if (lower) v += g.g(y, -ps);
      terms.push_back(w * v);
    };
    if (d == 2) {
      terms.reserve(phi.size());
      for (std::size_t k = 0; k < phi.size(); ++k) {
        y << r * std::cos(phi.nodes[k]), r * std::sin(phi.nodes[k]);
        add(phi.weights[k]);
      }
    } else {
      terms.reserve(phi.size() * polar.size());
      for (std::size_t j = 0; j < polar.size(); ++j) {
        const double c = polar.nodes[j];
        const double sn = std::sqrt((1.0 - c) * (1.0 + c));
        for (std::size_t k = 0; k < phi.size(); ++k) {
          y << r * sn * std::cos(phi.nodes[k]), r * sn * std::sin(phi.nodes[k]), r * c;
          add(polar.weights[j] * phi.weights[k]);
        }
      }
    }
    const double jac = (d == 2 ? r : r * r) / ps;
    partial[i] = radial.weights[i] * jac * pairwise_sum(terms.data(), terms.size());
  });
  return pairwise_sum(partial.data(), partial.size());
}

// Tensor rule over (u_1, u_2, relative angle) with u = s + w^2.
double tensor_pairing(int d, double s, const RadialWindow& window, double sign, double w_max,
                      unsigned panels, unsigned angular) {
  const quad::Rule1D w = quad::composite_legendre(0.0, w_max, panels);
  const quad::Rule1D phi = quad::periodic_trapezoid(angular);
  const quad::Rule1D polar = quad::composite_legendre(-1.0, 1.0, std::max(1u, (angular + 31) / 32));
  const quad::Rule1D& angle = d == 2 ? phi : polar;
  std::vector<double> cosines(angle.size());
  for (std::size_t k = 0; k < angle.size(); ++k) {
    cosines[k] = d == 2 ? std::cos(angle.nodes[k]) : angle.nodes[k];
  }

  std::vector<double> partial(w.size());
  parallel_for(w.size(), [&](std::size_t i) {
    const double w1 = w.nodes[i];
    const double u1 = s + w1 * w1;
    const double r1 = w1 * std::sqrt(2.0 * s + w1 * w1);
    std::vector<double> row(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
      const double w2 = w.nodes[j];
      const double u2 = s + w2 * w2;
      const double r2 = w2 * std::sqrt(2.0 * s + w2 * w2);
      const double tau = sign * (u1 + u2);
      double inner = 0.0;
      for (std::size_t k = 0; k < angle.size(); ++k) {
        const double rho2 = r1 * r1 + r2 * r2 + 2.0 * r1 * r2 * cosines[k];
        inner += angle.weights[k] * window.g(std::sqrt(std::max(rho2, 0.0)), tau);
      }
      const double jac = 4.0 * w1 * w2 * (d == 2 ? 1.0 : r1 * r2);
      row[j] = w.weights[j] * jac * inner;
    }
    partial[i] = w.weights[i] * pairwise_sum(row.data(), row.size());
  });
  const double total = pairwise_sum(partial.data(), partial.size());
  return (d == 2 ? 2.0 * pi : 8.0 * pi * pi) * total;
}

struct Moments {
  std::size_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.count == 0) return;
    const double n = static_cast<double>(count + o.count);
    const double delta = o.mean - mean;
    mean += delta * static_cast<double>(o.count) / n;
    m2 += o.m2 + delta * delta * static_cast<double>(count) * static_cast<double>(o.count) / n;
    count += o.count;
  }
};

// Draws y on the sheet with density proportional to e^{-beta psi(y)} / psi(y)
// and returns psi(y).
double draw_weighted(int d, double s, double beta, std::mt19937_64& rng, Vector& y) {
  std::exponential_distribution<double> expo(beta);
  if (d == 2) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
    const double u = s + expo(rng);
    const double r = std::sqrt((u - s) * (u + s));
    const double t = angle(rng);
    y << r * std::cos(t), r * std::sin(t);
    return u;
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::gamma_distribution<double> gamma2(2.0, 1.0 / beta);
  std::normal_distribution<double> normal;
  const double p_gamma = 1.0 / (1.0 + s * beta);
  double u = 0.0;
  double r = 0.0;
  for (;;) {
    // Proposal proportional to u e^{-beta u} on [s, inf), then accept with
    // probability r / u.
    const double v = unit(rng) < p_gamma ? gamma2(rng) : expo(rng);
    u = s + v;
    r = std::sqrt(v * (u + s));
    if (unit(rng) * u <= r) break;
  }
  Vector dir(3);
  double n2 = 0.0;
  do {
    dir << normal(rng), normal(rng), normal(rng);
    n2 = dir.squaredNorm();
  } while (n2 == 0.0);
  y = dir * (r / std::sqrt(n2));
  return u;
}

// e^{beta s} times the normaliser of e^{-beta psi}/psi over R^d.
double shifted_normaliser(int d, double s, double beta) {
  if (d == 2) return 2.0 * pi / beta;
  const auto e = quad::half_line(
      [&](double u) { return std::sqrt((u - s) * (u + s)) * std::exp(-beta * (u - s)); }, s, beta,
      1e-13);
  return 4.0 * pi * e.value;
}

PairingResult monte_carlo_pairing(int d, double s, double sign, const RadialWindow& window,
                                  const QuadSpec& quad) {
  const double beta = quad.importance_rate;
  if (!(beta > 0.0)) throw ValidationError("importance rate must be positive");
  const std::size_t total = quad.samples;
  if (total < 2) throw ValidationError("Monte-Carlo pairing needs at least two samples");
  const double log_z3 = 3.0 * std::log(shifted_normaliser(d, s, beta));

  constexpr std::size_t chunk = 1u << 14;
  const std::size_t chunks = (total + chunk - 1) / chunk;
  std::vector<Moments> moments(chunks);
  std::vector<char> done(chunks, 0);
  const auto start = std::chrono::steady_clock::now();
  std::atomic<bool> expired{false};

  parallel_for(chunks, [&](std::size_t c) {
    if (quad.time_budget_ms > 0.0) {
      const std::chrono::duration<double, std::milli> spent = std::chrono::steady_clock::now() - start;
      if (expired.load() || spent.count() > quad.time_budget_ms) {
        expired.store(true);
        return;
      }
    }
    std::seed_seq seq{static_cast<std::uint32_t>(quad.seed), static_cast<std::uint32_t>(quad.seed >> 32),
                      static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32)};
    std::mt19937_64 rng(seq);
    const std::size_t n = std::min(chunk, total - c * chunk);
    Vector y(d);
    Vector sum(d);
    Moments m;
    for (std::size_t k = 0; k < n; ++k) {
      sum.setZero();
      double u = 0.0;
      for (int i = 0; i < 3; ++i) {
        u += draw_weighted(d, s, beta, rng, y);
        sum += y;
      }
      const double g = window.g(sum.norm(), sign * u);
      m.add(g == 0.0 ? 0.0 : g * std::exp(beta * (u - 3.0 * s) + log_z3));
    }
    moments[c] = m;
    done[c] = 1;
  });

  Moments all;
  bool partial = false;
  for (std::size_t c = 0; c < chunks; ++c) {
    if (done[c]) {
      all.merge(moments[c]);
    } else {
      partial = true;
    }
  }
  PairingResult out;
  out.monte_carlo = true;
  out.partial = partial;
  out.samples = all.count;
  if (all.count < 2) {
    out.value = std::nan("");
    out.error = std::numeric_limits<double>::infinity();
    return out;
  }
  const double n = static_cast<double>(all.count);
  out.value = all.mean;
  out.error = std::sqrt(all.m2 / (n - 1.0) / n);
  return out;
}

double sheet_sign(const MeasureSpec& spec) {
  switch (spec.sheet) {
    case Sheet::plus:
      return 1.0;
    case Sheet::minus:
      return -1.0;
    case Sheet::both:
      break;
  }
  throw UnsupportedError("convolution oracles act on a single sheet");
}

using boost::math::tools::eps_tolerance;
using boost::math::tools::toms748_solve;

template <class F>
double bracketed_root(F&& f, double lo, double hi, double f_lo, double f_hi) {
  std::uintmax_t iters = 200;
  const auto [a, b] = toms748_solve(f, lo, hi, f_lo, f_hi, eps_tolerance<double>(52), iters);
  return 0.5 * (a + b);
}

// Rays from xi/2 in the plane; each ray meets the level set
// psi(y) + psi(xi - y) = tau exactly once.
double ray_integral(double s, const SpacetimePoint& p, unsigned nodes) {
  const Vector half = 0.5 * p.xi;
  const double tau = p.tau;
  const double hi = 0.5 * (tau + p.xi.norm()) + s;
  const quad::Rule1D theta = quad::periodic_trapezoid(nodes);
  std::vector<double> values(theta.size());
  for (std::size_t k = 0; k < theta.size(); ++k) {
    Vector e(2);
    e << std::cos(theta.nodes[k]), std::sin(theta.nodes[k]);
    auto h = [&](double rho) {
      const Vector y = half + rho * e;
      const Vector z = half - rho * e;
      return std::sqrt(s * s + y.squaredNorm()) + std::sqrt(s * s + z.squaredNorm()) - tau;
    };
    const double h0 = h(0.0);
    const double h1 = h(hi);
    const double rho = h1 == 0.0 ? hi : bracketed_root(h, 0.0, hi, h0, h1);
    const Vector y = half + rho * e;
    const Vector z = half - rho * e;
    const double py = std::sqrt(s * s + y.squaredNorm());
    const double pz = std::sqrt(s * s + z.squaredNorm());
    const double slope = y.dot(e) / py - z.dot(e) / pz;
    values[k] = theta.weights[k] * rho / (std::abs(slope) * py * pz);
  }
  return pairwise_sum(values.data(), values.size());
}

// Bipolar coordinates rho = |y|, varsigma = |xi - y|: with u_i = psi the
// delta leaves (2 pi / |xi|) times the length of the admissible u_1 range.
Estimate bipolar_value(double s, const SpacetimePoint& p) {
  const double tau = p.tau;
  const double r = p.xi.norm();
  auto rho = [&](double u) { return std::sqrt(std::max((u - s) * (u + s), 0.0)); };
  auto vs = [&](double u) { return rho(tau - u); };
  const double mid = 0.5 * tau;
  const double top = tau - s;

  auto fa = [&](double u) { return rho(u) - vs(u) - r; };
  auto fb = [&](double u) { return rho(u) + vs(u) - r; };
  double ua = top;
  if (const double f_top = fa(top); f_top > 0.0) ua = bracketed_root(fa, mid, top, fa(mid), f_top);
  double ub = top;
  if (const double f_top = fb(top); f_top < 0.0) ub = bracketed_root(fb, mid, top, fb(mid), f_top);
  const double u_hi = std::min(ua, ub);
  const double scale = 2.0 * pi / r;
  return {scale * 2.0 * (u_hi - mid), scale * 8.0 * std::numeric_limits<double>::epsilon() * tau};
}

}  // namespace

void ConvClosedForm::validate() const {
  const bool ok = (d == 2 && (n == 2 || n == 3)) || (d == 3 && n == 2);
  if (!ok) {
    throw UnsupportedError("no closed convolution for (d, n) = (" + std::to_string(d) + ", " +
                           std::to_string(n) + ")");
  }
  if (!(s > 0.0) || !std::isfinite(s)) throw ValidationError("mass s must be positive");
}

double conv_closed_invariant(const ConvClosedForm& form, double m2) {
  form.validate();
  const double ns = form.n * form.s;
  if (!(m2 >= ns * ns)) return 0.0;
  if (form.d == 2 && form.n == 2) return 2.0 * pi / std::sqrt(m2);
  if (form.d == 2) return 4.0 * pi * pi * (1.0 - 3.0 * form.s / std::sqrt(m2));
  return 2.0 * pi * std::sqrt(1.0 - 4.0 * form.s * form.s / m2);
}

double conv_closed(const ConvClosedForm& form, const SpacetimePoint& p) {
  form.validate();
  if (p.dim() != form.d) throw ValidationError("point dimension does not match the convolution");
  const double r = p.xi.norm();
  if (!(p.tau >= std::hypot(form.n * form.s, r))) return 0.0;
  return conv_closed_invariant(form, (p.tau - r) * (p.tau + r));
}

SupNorm conv_sup_norm(const ConvClosedForm& form) {
  form.validate();
  if (form.d == 2 && form.n == 2) return {pi / form.s, Attainment::boundary};
  if (form.d == 2) return {4.0 * pi * pi, Attainment::infinity};
  return {2.0 * pi, Attainment::infinity};
}

std::string_view to_string(Attainment a) {
  return a == Attainment::boundary ? "boundary" : "infinity";
}

Estimate surface_integral(const MeasureSpec& spec, const TestFunction& g, const QuadSpec& quad) {
  spec.params.validate();
  if (!g.g) return {};
  const double s = spec.params.s;
  const double reach = g.decay_radius > s ? std::sqrt((g.decay_radius - s) * (g.decay_radius + s) / 2.0)
                                          : 0.0;
  double y_max = reach;
  if (quad.truncation_radius > 0.0) {
    if (quad.truncation_radius < reach) {
      throw BudgetError("truncation radius " + std::to_string(quad.truncation_radius) +
                        " does not cover the declared decay radius (needs " + std::to_string(reach) +
                        ")");
    }
    y_max = quad.truncation_radius;
  }
  if (y_max == 0.0) return {};
  const unsigned panels = std::max(2u, quad.panels);
  const unsigned angular = std::max(8u, quad.angular_nodes);
  const double fine = tensor_surface(spec, g, y_max, panels, angular);
  const double coarse = tensor_surface(spec, g, y_max, panels / 2, angular / 2);
  return {fine, std::abs(fine - coarse)};
}

PairingResult conv_pairing_oracle(const MeasureSpec& spec, int n, const RadialWindow& window,
                                  const QuadSpec& quad) {
  spec.params.validate();
  const double sign = sheet_sign(spec);
  if (n != 2 && n != 3) throw UnsupportedError("pairing oracle supports n = 2 or 3");
  if (!window.g) return {};
  const int d = spec.params.d;
  const double s = spec.params.s;
  if (n == 3) return monte_carlo_pairing(d, s, sign, window, quad);

  const double w_max = std::sqrt(std::max(window.tau_max - 2.0 * s, 0.0));
  PairingResult out;
  if (w_max == 0.0) return out;
  const unsigned panels = std::max(2u, quad.panels);
  const unsigned angular = std::max(8u, quad.angular_nodes);
  out.value = tensor_pairing(d, s, window, sign, w_max, panels, angular);
  const double coarse = tensor_pairing(d, s, window, sign, w_max, panels / 2, angular / 2);
  out.error = std::abs(out.value - coarse);
  out.samples = static_cast<std::size_t>(panels) * 16 * panels * 16 * angular;
  return out;
}

Estimate closed_pairing(const ConvClosedForm& form, const RadialWindow& window, double rel_tol) {
  form.validate();
  if (!window.g) return {};
  const double q0 = form.n * form.s * form.n * form.s;
  const double t_max = window.tau_max;
  if (!(t_max * t_max > q0)) return {};
  const double omega = sphere_area(form.d);
  double inner_error = 0.0;
  auto inner = [&](double rho) {
    const double q1 = t_max * t_max - rho * rho;
    if (q1 <= q0) return 0.0;
    auto f = [&](double q) {
      const double tau = std::sqrt(q + rho * rho);
      return window.g(rho, tau) * conv_closed_invariant(form, q) / (2.0 * tau);
    };
    const Estimate e = quad::tanh_sinh(f, q0, q1, rel_tol);
    inner_error += std::abs(e.error);
    return omega * std::pow(rho, form.d - 1) * e.value;
  };
  const double rho_max = std::sqrt(t_max * t_max - q0);
  const Estimate outer = quad::kronrod(inner, 0.0, rho_max, rel_tol, 15);
  return {outer.value, outer.error + inner_error * rho_max / 31.0};
}

PointOracleResult conv_point_oracle(const MeasureSpec& spec, int n, const SpacetimePoint& p,
                                    const QuadSpec& quad, PointRoute route) {
  spec.params.validate();
  if (n != 2) throw UnsupportedError("point oracle is implemented for n = 2 only");
  const double sign = sheet_sign(spec);
  const int d = spec.params.d;
  const double s = spec.params.s;
  if (p.dim() != d) throw ValidationError("point dimension does not match the hyperboloid");
  SpacetimePoint q = p;
  q.tau *= sign;
  q.xi *= sign;
  const double r = q.xi.norm();
  const double m2 = (q.tau - r) * (q.tau + r);
  if (!(q.tau > 0.0) || !(m2 > 4.0 * s * s)) {
    throw DomainError("point oracle needs a point strictly inside the support");
  }

  PointOracleResult out;
  out.mass = std::sqrt(m2);
  out.ill_conditioned = m2 - 4.0 * s * s < 1e-8 * (1.0 + q.tau * q.tau);

  if (route == PointRoute::reduced) {
    const geometry::NormalForm nf = geometry::normal_form(q);
    const double m = nf.mass;
    // At (0, m) the fiber is y = -x with 2 psi(x) = m, a sphere of radius r*.
    const double half = 0.5 * m;
    const double r_star = std::sqrt((half - s) * (half + s));
    out.value = sphere_area(d) * std::pow(r_star, d - 2) / (2.0 * half);
    const geometry::SpacetimePoint image = nf.map.apply(q);
    out.error = out.value * ((image.xi.norm() + std::abs(image.tau - m)) / (1.0 + m) + 8.0 * std::numeric_limits<double>::epsilon());
    return out;
  }

  if (d == 2) {
    unsigned nodes = std::max(16u, quad.angular_nodes);
    double previous = ray_integral(s, q, nodes / 2);
    double current = ray_integral(s, q, nodes);
    while (std::abs(current - previous) > 1e-14 * std::abs(current) && nodes < (1u << 16)) {
      nodes *= 2;
      previous = current;
      current = ray_integral(s, q, nodes);
    }
    out.value = current;
    out.error = std::abs(current - previous);
    return out;
  }

  if (r < 1e-6 * q.tau) {
    // Bipolar coordinates degenerate on the axis; use the reduced route.
    PointOracleResult axis = conv_point_oracle(spec, n, p, quad, PointRoute::reduced);
    axis.ill_conditioned = out.ill_conditioned;
    return axis;
  }
  const Estimate e = bipolar_value(s, q);
  out.value = e.value;
  out.error = e.error;
  return out;
}

SumCase parse_sum_case(std::string_view text) {
  static constexpr std::array<std::pair<std::string_view, SumCase>, 7> table{{
      {"++", SumCase::pp},
      {"+-", SumCase::pm},
      {"--", SumCase::mm},
      {"+++", SumCase::ppp},
      {"++-", SumCase::ppm},
      {"+--", SumCase::pmm},
      {"---", SumCase::mmm},
  }};
  for (const auto& [name, c] : table) {
    if (name == text) return c;
  }
  throw ValidationError("unknown sheet pattern '" + std::string(text) + "'");
}

std::string_view to_string(SumCase c) {
  switch (c) {
    case SumCase::pp:
      return "++";
    case SumCase::pm:
      return "+-";
    case SumCase::mm:
      return "--";
    case SumCase::ppp:
      return "+++";
    case SumCase::ppm:
      return "++-";
    case SumCase::pmm:
      return "+--";
    case SumCase::mmm:
      return "---";
  }
  return "?";
}

std::size_t sum_support_predicates(double s, int d, SumCase which, std::size_t samples,
                                   std::uint64_t seed) {
  HyperboloidParams params{d, s};
  params.validate();
  const std::string_view pattern = to_string(which);
  const int count = static_cast<int>(pattern.size());
  const double ns = count * s;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> decade(-4.0, 2.0);
  std::normal_distribution<double> normal;
  std::size_t violations = 0;
  Vector xi(d);
  Vector y(d);
  for (std::size_t k = 0; k < samples; ++k) {
    xi.setZero();
    double tau = 0.0;
    double scale = 0.0;
    for (int i = 0; i < count; ++i) {
      for (int j = 0; j < d; ++j) y[j] = normal(rng);
      y *= s * std::pow(10.0, decade(rng)) / y.norm();
      const double ps = geometry::psi(params, y);
      xi += y;
      tau += pattern[i] == '+' ? ps : -ps;
      scale += ps;
    }
    const double bound = std::hypot(ns, xi.norm());
    const double slack = 1e-12 * scale;
    bool ok = true;
    switch (which) {
      case SumCase::pp:
      case SumCase::ppp:
        ok = tau >= bound - slack;
        break;
      case SumCase::mm:
      case SumCase::mmm:
        ok = tau <= -bound + slack;
        break;
      case SumCase::pm:
        ok = std::abs(tau) <= bound + slack;
        break;
      case SumCase::ppm:
        ok = tau >= -bound - slack;
        break;
      case SumCase::pmm:
        ok = tau <= bound + slack;
        break;
    }
    if (!ok) ++violations;
  }
  return violations;
}

std::size_t scalar_inequality_violations(std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> decade(-3.0, 2.0);
  std::size_t violations = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double a = std::pow(10.0, decade(rng));
    const double b = std::pow(10.0, decade(rng));
    const double s = std::pow(10.0, decade(rng));
    const double slack = 1e-13 * (s * s + a * a + b * b);
    if (std::sqrt(s * s + a * a) * std::sqrt(s * s + b * b) < s * s + a * b - slack) ++violations;
    if (std::sqrt(4.0 * s * s + a * a) * std::sqrt(s * s + b * b) < 2.0 * s * s + a * b - slack) {
      ++violations;
    }
  }
  return violations;
}

}  // namespace hyperex::measures
