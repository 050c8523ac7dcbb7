#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include <hyperex/hyperex.hpp>

namespace hyperex::cli {
namespace {

constexpr double pi = std::numbers::pi;
constexpr double eps = std::numeric_limits<double>::epsilon();

using geometry::SpacetimePoint;
using geometry::Vector;

class Recorder {
 public:
  Recorder(std::string suite, std::vector<Check>& out) : suite_(std::move(suite)), out_(out) {}

  void discrepancy(std::string name, double value, double measured, double tolerance,
                   std::optional<double> error_bar = std::nullopt) {
    const bool ok = std::isfinite(measured) && measured <= tolerance;
    out_.push_back({suite_, std::move(name), value, measured, tolerance, ok, error_bar});
  }

  void count(std::string name, std::size_t violations) {
    const auto v = static_cast<double>(violations);
    discrepancy(std::move(name), v, v, 0.0);
  }

  // lo <= value < hi (or <= hi when the upper end is closed).
  void range(std::string name, double value, double lo, double hi, bool open_top = true) {
    double miss = 0.0;
    if (!(value >= lo)) miss = lo - value;
    if (open_top ? !(value < hi) : !(value <= hi)) miss = std::max(value - hi, eps);
    if (!std::isfinite(value)) miss = std::numeric_limits<double>::infinity();
    discrepancy(std::move(name), value, miss, 0.0);
  }

  void flag(std::string name, bool ok, double value = 0.0) {
    discrepancy(std::move(name), value, ok ? 0.0 : 1.0, 0.0);
  }

 private:
  std::string suite_;
  std::vector<Check>& out_;
};

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::size_t pick(const VerifyOptions& o, std::size_t fallback) { return o.samples.value_or(fallback); }
std::size_t grid_size(const VerifyOptions& o, std::size_t fallback) {
  return std::max<std::size_t>(o.grid.value_or(fallback), 3);
}

// ---------------------------------------------------------------- specfun

void specfun_suite(const VerifyOptions& o, std::vector<Check>& out) {
  Recorder r("specfun", out);
  const Estimate e1 = quad::half_line([](double t) { return std::exp(-(t - 1.0)) / t; }, 1.0, 1.0, 1e-15);
  const double oracle = -std::exp(-1.0) * e1.value;
  const double ei = specfun::exp_integral_ei(-1.0);
  r.discrepancy("ei_minus_one", ei, std::abs(ei - oracle), 1e-12);
  r.discrepancy("ei_minus_one_reference", ei, std::abs(ei + 0.21938393439552), 1e-12);

  double worst = 0.0;
  for (int sign : {-1, 1}) {
    for (int k = 0; k < 50; ++k) {
      const double x = sign * std::pow(10.0, -2.0 + 4.0 * k / 49.0);
      const double h = 1e-5 * std::abs(x);
      const double fd = (specfun::exp_integral_ei(x + h) - specfun::exp_integral_ei(x - h)) / (2.0 * h);
      worst = std::max(worst, rel(fd, std::exp(x) / x));
    }
  }
  r.discrepancy("ei_derivative", worst, worst, 1e-6);
  const double big = specfun::increasing_profile(1e4);
  r.discrepancy("ei_asymptotic_1e4", big, std::abs(big - 1.0), 2e-4);

  const auto grid = functionals::make_grid(1e-3, 1e2, grid_size(o, 200), true);
  bool down = true;
  bool up = true;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    down = down && specfun::decreasing_profile(grid[i]) < specfun::decreasing_profile(grid[i - 1]);
    up = up && specfun::increasing_profile(grid[i]) > specfun::increasing_profile(grid[i - 1]);
  }
  r.flag("decreasing_profile_strict", down);
  r.flag("increasing_profile_strict", up);
  r.discrepancy("decreasing_profile_limits",
                specfun::decreasing_profile(1e-9),
                std::max(std::abs(specfun::decreasing_profile(1e-9) - 1.0), specfun::decreasing_profile(1e6)),
                1e-5);
  r.discrepancy("increasing_profile_limits", specfun::increasing_profile(1e6),
                std::max(specfun::increasing_profile(1e-9), std::abs(specfun::increasing_profile(1e6) - 1.0)),
                1e-5);

  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> decade(-6.0, 6.0);
  double sq = 0.0;
  for (std::size_t k = 0; k < pick(o, 10000); ++k) {
    const std::complex<double> z(u(rng) * std::pow(10.0, decade(rng)), u(rng) * std::pow(10.0, decade(rng)));
    if (z.imag() == 0.0 && z.real() <= 0.0) continue;
    const auto w = specfun::principal_sqrt(z);
    sq = std::max(sq, std::abs(w * w - z) / std::abs(z));
  }
  r.discrepancy("principal_sqrt_square", sq, sq, 8.0 * eps);

  const quad::Rule1D ring = quad::periodic_trapezoid(64);
  double j = 0.0;
  for (std::size_t k = 0; k < ring.size(); ++k) j += ring.weights[k] * std::cos(2.5 * std::cos(ring.nodes[k]));
  j /= 2.0 * pi;
  r.discrepancy("j0_periodic_integral", specfun::bessel_j0(2.5), std::abs(specfun::bessel_j0(2.5) - j), 1e-10);
  const double zero = [] {
    double lo = 2.0;
    double hi = 3.0;
    for (int k = 0; k < 200 && hi - lo > 1e-15; ++k) {
      const double mid = 0.5 * (lo + hi);
      (specfun::bessel_j0(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }();
  r.discrepancy("j0_first_zero", zero, std::abs(zero - 2.404825557695773), 1e-12);

  const Estimate lt = quad::kronrod(
      [](double v) {
        const double uu = 1.0 + v * v;
        return 2.0 * v * std::exp(-2.0 * uu) * specfun::bessel_j0(std::sqrt((uu - 1.0) * (uu + 1.0)));
      },
      0.0, 7.0, 1e-14, 25);
  const double kernel = specfun::laplace_j0_kernel({2.0, 0.0}, 1.0, 1.0).real();
  r.discrepancy("laplace_kernel", kernel, std::abs(kernel - lt.value), 1e-10);
}

// ---------------------------------------------------------------- lorentz

void lorentz_suite(const VerifyOptions& o, std::vector<Check>& out) {
  Recorder r("lorentz", out);
  std::mt19937_64 rng(o.seed + 1);
  std::uniform_real_distribution<double> speed(-0.95, 0.95);
  double defect = 0.0;
  std::size_t cone = 0;
  double round_trip = 0.0;
  double ds_inv = 0.0;
  for (int d : {2, 3}) {
    for (int k = 0; k < 200; ++k) {
      std::vector<geometry::LorentzMap> maps{
          geometry::boost(speed(rng), d), geometry::rotation_embed(geometry::random_orthogonal(d, rng)),
          geometry::coord_swap(1 + k % d, 1 + (k / d) % d, d), geometry::random_lorentz(d, rng)};
      maps.push_back(geometry::compose(maps[0], maps[3]));
      maps.push_back(maps[4].inverse());
      for (const auto& m : maps) {
        defect = std::max(defect, m.form_defect());
        const Vector xi = geometry::random_in_ball(d, 5.0, rng);
        const SpacetimePoint p{xi, xi.norm() * 1.01 + 0.1};
        const SpacetimePoint q = m.apply(p);
        if (!(q.tau > q.xi.norm())) ++cone;
      }
      const Vector xi = geometry::random_in_ball(d, 10.0, rng);
      const SpacetimePoint p{xi, std::sqrt(xi.squaredNorm() + 0.01 + 25.0 * std::abs(speed(rng)))};
      const auto nf = geometry::normal_form(p);
      const SpacetimePoint image = nf.map.apply(p);
      round_trip = std::max(round_trip, (image.xi.norm() + std::abs(image.tau - nf.mass)) / (1.0 + p.tau));

      const geometry::HyperboloidParams params{d, 1.0};
      const auto p1 = geometry::lift(params, geometry::random_in_ball(d, 4.0, rng));
      const auto p2 = geometry::lift(params, geometry::random_in_ball(d, 4.0, rng));
      const auto l = geometry::random_lorentz(d, rng);
      const double before = geometry::Ds_metric(params, p1, p2);
      const double after = geometry::Ds_metric(params, l.apply(p1), l.apply(p2));
      ds_inv = std::max(ds_inv, std::abs(before - after) / (1.0 + before));
    }
  }
  r.discrepancy("form_defect", defect, defect, 1e-12);
  r.count("cone_preserved", cone);
  r.discrepancy("normal_form_round_trip", round_trip, round_trip, 1e-10);
  r.discrepancy("Ds_invariance", ds_inv, ds_inv, 1e-10);

  double worst = 0.0;
  const std::size_t pairs = pick(o, 20);
  for (std::size_t k = 0; k < pairs; ++k) {
    const int d = k % 2 == 0 ? 2 : 3;
    const auto l = geometry::random_lorentz(d, rng, 0.6);
    const Vector c = geometry::random_in_ball(d, 1.0, rng);
    const double tc = 1.5 + std::abs(speed(rng));
    const double width = 0.8 + 0.4 * std::abs(speed(rng));
    auto g = [c, tc, width](const Vector& xi, double tau) {
      return std::exp(-((xi - c).squaredNorm() + (tau - tc) * (tau - tc)) / (width * width));
    };
    auto gl = [g, l](const Vector& xi, double tau) {
      const SpacetimePoint p = l.apply({xi, tau});
      return g(p.xi, p.tau);
    };
    const double reach = c.norm() + tc + 7.0 * width;
    const double stretch = l.inverse().matrix().norm();
    QuadSpec q;
    q.panels = d == 2 ? 48 : 32;
    q.angular_nodes = d == 2 ? 96 : 64;
    const measures::MeasureSpec spec{{d, 1.0}, measures::Sheet::plus};
    const Estimate a = measures::surface_integral(spec, {g, reach}, q);
    const Estimate b = measures::surface_integral(spec, {gl, stretch * reach}, q);
    worst = std::max(worst, std::abs(a.value - b.value));
  }
  r.discrepancy("measure_invariance", worst, worst, 1e-6);
}

// ---------------------------------------------------------------- support

void support_suite(const VerifyOptions& o, std::vector<Check>& out) {
  Recorder r("support", out);
  const std::size_t n = pick(o, 1'000'000);
  for (const char* name : {"++", "+-", "--", "+++", "++-", "+--", "---"}) {
    const auto c = measures::parse_sum_case(name);
    const int d = std::string_view(name).size() == 2 ? 2 : 3;
    r.count(std::string("sum_support_") + name,
            measures::sum_support_predicates(1.0, d, c, n, o.seed + std::string_view(name).size()));
  }
  r.count("scalar_inequalities", measures::scalar_inequality_violations(n, o.seed + 11));
  const double tau = 2.0;
  r.discrepancy("vertex_equality", tau, std::abs(2.0 * geometry::psi({2, 1.0}, 0.0) - tau), 0.0);
}

// ---------------------------------------------------------------- sharp

void sharp_suite(const VerifyOptions& o, std::vector<Check>& out) {
  Recorder r("sharp", out);
  const auto comb = functionals::two_sheeted_combiner_check(pick(o, 1'000'000), o.seed);
  r.count("combiner_violations", comb.violations);
  r.discrepancy("combiner_equality", comb.equality_defect, comb.equality_defect, 1e-15);
  r.discrepancy("factor_consistency", comb.factor_p6, comb.factor_consistency, 1e-15);

  struct Expected {
    int d;
    int p;
    double one;
    double factor;
  };
  const Expected table[] = {{2, 4, std::pow(2.0, 0.75) * pi, std::pow(1.5, 0.25)},
                            {2, 6, std::pow(2.0 * pi, 5.0 / 6.0), std::cbrt(2.5)},
                            {3, 4, std::pow(2.0 * pi, 1.25), std::pow(1.5, 0.25)}};
  for (const auto& e : table) {
    const std::string tag = std::to_string(e.d) + std::to_string(e.p);
    const auto one = functionals::best_constant(e.d, e.p);
    const auto two = functionals::best_constant(e.d, e.p, 1.0, functionals::SheetCount::two);
    r.discrepancy("H" + tag, one.value, rel(one.value, e.one), 1e-14);
    r.discrepancy("H" + tag + "_two_sheet", two.value, rel(two.value, e.factor * e.one), 1e-14);
    for (double s : {0.5, 1.0, 3.0}) {
      const double bound = functionals::sup_bound_constant(e.d, e.p, s);
      const double h = functionals::best_constant(e.d, e.p, s).value;
      r.discrepancy("sup_bound_" + tag + "_s" + short_number(s), bound, rel(bound, h), 1e-14);
    }
    const double conv_form = functionals::convolution_form_constant(e.d, e.p);
    const double via_h = one.value / std::pow(2.0 * pi, static_cast<double>(e.d + 1) / e.p);
    r.discrepancy("convolution_form_" + tag, conv_form, rel(conv_form, via_h), 1e-14);
  }
}

// ---------------------------------------------------------------- metric

void metric_suite(const VerifyOptions& o, std::vector<Check>& out) {
  Recorder r("metric", out);
  std::mt19937_64 rng(o.seed + 2);
  const std::size_t n = pick(o, 10000);
  for (int d : {2, 3}) {
    const geometry::HyperboloidParams params{d, 1.0};
    const std::string tag = "_d" + std::to_string(d);
    double sym = 0.0;
    double lift = 0.0;
    double kernel = 0.0;
    double diag = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const Vector x = geometry::random_in_ball(d, 5.0, rng);
      const Vector y = geometry::random_in_ball(d, 5.0, rng);
      const double dxy = geometry::ds_metric(params, x, y);
      sym = std::max(sym, std::abs(dxy - geometry::ds_metric(params, y, x)));
      const double big = geometry::Ds_metric(params, geometry::lift(params, x), geometry::lift(params, y));
      lift = std::max(lift, std::abs(big - dxy) / (1.0 + dxy));
      kernel = std::max(kernel, std::abs(geometry::kernel_Ks(params, x, y) * (dxy + 1.0) - 1.0));
      diag = std::max(diag, geometry::ds_metric(params, x, x));
    }
    r.discrepancy("symmetry" + tag, sym, sym, 1e-14);
    r.discrepancy("lift_identity" + tag, lift, lift, 1e-10);
    r.discrepancy("kernel_identity" + tag, kernel, kernel, 1e-12);
    r.discrepancy("diagonal_zero" + tag, diag, diag, 0.0);

    std::size_t growth = 0;
    for (std::size_t k = 0; k < 1000; ++k) {
      const Vector x = geometry::random_in_ball(d, 5.0, rng);
      const double r0 = 4.0 * (1.0 + x.norm());
      for (double radius : {r0, 2.0 * r0, 8.0 * r0}) {
        Vector far = Vector::Zero(d);
        Vector near = Vector::Zero(d);
        far[0] = radius;
        near[0] = radius / 2.0;
        if (!(geometry::ds_metric(params, x, far) > geometry::ds_metric(params, x, near))) ++growth;
      }
    }
    r.count("unbounded_growth" + tag, growth);

    const auto fit = geometry::fit_ds_constants(params, 5.0, std::max<std::size_t>(n, 1000), o.seed + 3);
    r.flag("fitted_constants" + tag, fit.c1 > 0.0 && std::isfinite(fit.c2), fit.c1);
    // Ball inclusions with the fitted constants, checked on fresh pairs.
    const double c1 = 0.5 * fit.c1;
    const double c2 = 2.0 * fit.c2;
    std::size_t misses = 0;
    std::mt19937_64 fresh(o.seed + 4);
    std::uniform_real_distribution<double> radius(1e-3, 2.0);
    for (std::size_t k = 0; k < n; ++k) {
      const Vector x = geometry::random_in_ball(d, 5.0, fresh);
      const Vector y = geometry::random_in_ball(d, 5.0, fresh);
      const double rr = radius(fresh);
      const double dist = (x - y).norm();
      const double dsv = geometry::ds_metric(params, x, y);
      if (dist < rr / c2 && !(dsv < rr)) ++misses;
      if (dsv < rr && !(dist < std::sqrt(rr / c1))) ++misses;
    }
    r.count("ball_inclusion" + tag, misses);
  }
}

// ---------------------------------------------------------------- oracle

SpacetimePoint random_interior(int d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Vector xi = geometry::random_in_ball(d, 6.0, rng);
  const double m = 2.0 * (1.0 + std::pow(10.0, -5.0 + 6.0 * u(rng)));
  return {xi, std::sqrt(m * m + xi.squaredNorm())};
}

void oracle_suite(const VerifyOptions& o, std::vector<Check>& out) {
  Recorder r("oracle", out);
  std::mt19937_64 rng(o.seed + 5);
  const std::size_t points = pick(o, 100);
  for (int d : {2, 3}) {
    const measures::MeasureSpec spec{{d, 1.0}, measures::Sheet::plus};
    const measures::ConvClosedForm form{d, 2, 1.0};
    double worst = 0.0;
    for (std::size_t k = 0; k < points; ++k) {
      const SpacetimePoint p = random_interior(d, rng);
      const auto v = measures::conv_point_oracle(spec, 2, p, {});
      worst = std::max(worst, rel(v.value, measures::conv_closed(form, p)));
    }
    r.discrepancy("point_oracle_d" + std::to_string(d), worst, worst, 1e-6);

    SpacetimePoint off = random_interior(d, rng);
    const auto nf = geometry::normal_form(off);
    const SpacetimePoint axis = nf.map.apply(off);
    const double a = measures::conv_point_oracle(spec, 2, off, {}).value;
    const double b = measures::conv_point_oracle(spec, 2, axis, {}).value;
    r.discrepancy("normal_form_agreement_d" + std::to_string(d), a, rel(a, b), 1e-10);

    const measures::RadialWindow window{
        [](double rho, double tau) { return std::exp(-(rho * rho + (tau - 4.0) * (tau - 4.0)) / 2.0); }, 16.0};
    QuadSpec q;
    q.panels = 24;
    q.angular_nodes = 64;
    const auto pair = measures::conv_pairing_oracle(spec, 2, window, q);
    const auto closed = measures::closed_pairing(form, window);
    r.discrepancy("pairing_n2_d" + std::to_string(d), pair.value, rel(pair.value, closed.value), 1e-6,
                  pair.error);
  }

  const measures::RadialWindow window{
      [](double rho, double tau) { return std::exp(-(rho * rho + (tau - 5.0) * (tau - 5.0)) / 2.0); }, 17.0};
  QuadSpec mc;
  mc.samples = std::max<std::size_t>(pick(o, 1'000'000), 1000);
  mc.seed = o.seed;
  const auto pair = measures::conv_pairing_oracle({{2, 1.0}, measures::Sheet::plus}, 3, window, mc);
  const auto closed = measures::closed_pairing({2, 3, 1.0}, window);
  r.discrepancy("pairing_n3_sigma", pair.value, std::abs(pair.value - closed.value) / pair.error, 3.0,
                pair.error);

  double invariance = 0.0;
  for (int k = 0; k < 200; ++k) {
    const int d = k % 2 == 0 ? 2 : 3;
    const measures::ConvClosedForm form{d, 2, 1.0};
    const SpacetimePoint p = random_interior(d, rng);
    const auto l = geometry::random_lorentz(d, rng);
    invariance = std::max(invariance, rel(measures::conv_closed(form, l.apply(p)), measures::conv_closed(form, p)));
  }
  r.discrepancy("closed_lorentz_invariance", invariance, invariance, 1e-9);

  const std::size_t side = grid_size(o, 316);
  std::size_t strict = 0;
  for (const auto& form : {measures::ConvClosedForm{2, 2, 1.0}, measures::ConvClosedForm{2, 3, 1.0},
                           measures::ConvClosedForm{3, 2, 1.0}}) {
    const double sup = measures::conv_sup_norm(form).value;
    const double ns = form.n * form.s;
    for (std::size_t i = 0; i < side; ++i) {
      for (std::size_t j = 0; j < side; ++j) {
        const double rho = 10.0 * static_cast<double>(i) / static_cast<double>(side);
        const double m = ns * (1.0 + 1e-6 * std::pow(1e9, static_cast<double>(j) / static_cast<double>(side - 1)));
        if (m * m - ns * ns < 1e-8 * (1.0 + m * m + rho * rho)) continue;
        Vector xi = Vector::Zero(form.d);
        xi[0] = rho;
        const double v = measures::conv_closed(form, {xi, std::sqrt(m * m + rho * rho)});
        if (!(v < sup)) ++strict;
      }
    }
  }
  r.count("strict_below_sup", strict);
}

// ---------------------------------------------------------------- functional

void functional_suite(const VerifyOptions& o, std::vector<Check>& out) {
  Recorder r("functional", out);
  const QuadSpec q;
  using functionals::best_constant;
  r.range("q26_limit_ratio", functionals::q_ratio_closed(2, 6, 1e-3, 1.0) / best_constant(2, 6).value, 0.997, 1.0);
  r.range("q24_limit_ratio", functionals::q_ratio_closed(2, 4, 1e2, 1.0) / best_constant(2, 4).value, 0.999, 1.0);
  const Estimate q34 = functionals::q_ratio_quadrature(3, 4, 1e-2, 1.0, q);
  r.range("q34_limit_ratio", q34.value / best_constant(3, 4).value, 0.95, 1.0);

  const Estimate a3 = extension::weighted_conv_l2_sq({1e-3, {3, 1.0}}, 2, q);
  const double scaled = std::pow(1e-3, 4) * a3.value;
  r.discrepancy("conv_limit_d3", scaled, rel(scaled, 2.0 * pi * pi * pi), 1e-2);

  double ext = 0.0;
  for (double a : {0.5, 1.0, 2.0}) {
    const extension::ExpProfile profile{a, {2, 1.0}};
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        Vector x(2);
        x << i, 0.0;
        const auto numeric = extension::extension_quadrature(profile, x, j, q);
        ext = std::max(ext, std::abs(numeric.value - extension::extension_closed(profile, x, j)));
      }
    }
  }
  r.discrepancy("extension_closed_vs_quadrature", ext, ext, 1e-8);

  for (int k : {2, 3}) {
    const extension::ExpProfile profile{1.0, {2, 1.0}};
    const Estimate num = extension::weighted_conv_l2_sq(profile, k, q);
    const double closed = extension::weighted_conv_l2_sq_closed(profile, k);
    r.discrepancy("conv_norm_k" + std::to_string(k), num.value, rel(num.value, closed), 1e-6, num.error);
  }
  for (int p : {4, 6}) {
    const Estimate num = functionals::q_ratio_quadrature(2, p, 1.0, 1.0, q);
    const double closed = functionals::q_ratio_closed(2, p, 1.0, 1.0);
    r.discrepancy("q2" + std::to_string(p) + "_closed_vs_quadrature", num.value, rel(num.value, closed), 1e-6,
                  num.error);
  }

  const auto grid = functionals::make_grid(1e-3, 1e2, grid_size(o, 200), true);
  for (int p : {4, 6}) {
    const auto scan = functionals::monotonicity_scan(2, p, 1.0, grid);
    r.flag("monotone_q2" + std::to_string(p), scan.strict);
  }

  std::size_t above = 0;
  for (int p : {4, 6}) {
    for (double s : {0.5, 1.0, 2.0}) {
      const double h = best_constant(2, p, s).value;
      for (double a : grid) {
        const auto pt = functionals::evaluate_q(2, p, a, s, functionals::Method::closed, q);
        if (!(pt.q_value + pt.error < h)) ++above;
      }
    }
  }
  for (double a : {1e-2, 0.1, 1.0, 10.0}) {
    const auto pt = functionals::evaluate_q(3, 4, a, 1.0, functionals::Method::quadrature, q);
    if (!(pt.q_value + pt.error < best_constant(3, 4).value)) ++above;
  }
  r.count("q_below_constant", above);

  // s = 3 is not a power of two, so the rescaling is not exact in floating point.
  r.discrepancy("scaling_q24", 0.0, functionals::scaling_check(2, 4, 3.0, 0.3), 1e-10);
  r.discrepancy("scaling_q26", 0.0, functionals::scaling_check(2, 6, 3.0, 0.3), 1e-10);
  r.discrepancy("scaling_q34", 0.0, functionals::scaling_check(3, 4, 2.0, 0.1, q), 1e-8);
  r.discrepancy("scaling_q34_s3", 0.0, functionals::scaling_check(3, 4, 3.0, 0.1, q), 1e-8);

  const auto sides = extension::cauchy_schwarz_sides({1.0, {2, 1.0}}, q);
  const double bar = sides.lhs.error + sides.rhs.error + 1e-10 * sides.lhs.value;
  r.discrepancy("cauchy_schwarz_equality", sides.rhs.value, std::abs(sides.lhs.value - sides.rhs.value), bar,
                sides.rhs.error);

  std::size_t loose = 0;
  for (const auto& [d, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    for (double a : {0.1, 1.0, 10.0}) {
      const auto b = extension::convolution_bound({a, {d, 1.0}}, n, q);
      if (!(b.norm + b.error < b.bound)) ++loose;
    }
  }
  r.count("convolution_bound_strict", loose);

  const extension::ExpProfile unit{1.0, {2, 1.0}};
  const Estimate direct = extension::l4_norm_direct(unit);
  const Estimate conv = extension::lp_norm_extension_via_conv(unit, 4, q);
  r.discrepancy("plancherel_l4", direct.value, rel(direct.value, conv.value), 1e-3);

  const measures::TestFunction weight{[](const Vector&, double tau) { return std::exp(-2.0 * tau); }, 40.0};
  const Estimate surf = measures::surface_integral({{2, 1.0}, measures::Sheet::plus}, weight, q);
  r.discrepancy("l2_norm_surface", surf.value, rel(surf.value, extension::l2_norm_sq(unit)), 1e-8);
  const double small = 1e-6 * extension::l2_norm_sq({1e-3, {3, 1.0}}) / pi;
  r.discrepancy("l2_norm_d3_limit", small, std::abs(small - 1.0), 1e-2);

  const double mf = functionals::mass_fraction(2, 1.0, 1e-3, 10.0);
  r.range("mass_fraction_small_a", mf, 0.0179 - 0.0005, 0.0179 + 0.0005, false);
  r.discrepancy("mass_fraction_quadrature", mf, rel(functionals::mass_fraction_quadrature(2, 1.0, 1e-3, 10.0), mf),
                1e-8);
  const double vertex = functionals::mass_fraction(2, 1.0, 1e2, 1.0);
  r.discrepancy("mass_fraction_vertex", vertex, 1.0 - vertex, 1e-3);
  bool monotone = true;
  for (int d : {2, 3}) {
    for (std::size_t i = 1; i < 40; ++i) {
      const double ra = 0.1 * static_cast<double>(i);
      monotone = monotone && functionals::mass_fraction(d, 1.0, 0.5, ra + 0.1) > functionals::mass_fraction(d, 1.0, 0.5, ra);
      monotone = monotone && functionals::mass_fraction(d, 1.0, ra + 0.1, 2.0) > functionals::mass_fraction(d, 1.0, ra, 2.0);
    }
  }
  r.flag("mass_fraction_monotone", monotone);

  const auto p26 = functionals::limit_probe(2, 6, 1.0, 1e-2);
  r.flag("richardson_q26", std::abs(p26.extrapolated - 1.0) < std::abs(p26.ratio - 1.0), p26.extrapolated);
  const auto p24 = functionals::limit_probe(2, 4, 1.0, 10.0);
  r.flag("richardson_q24", std::abs(p24.extrapolated - 1.0) < std::abs(p24.ratio - 1.0), p24.extrapolated);
}

using Suite = void (*)(const VerifyOptions&, std::vector<Check>&);

const std::vector<std::pair<std::string, Suite>>& registry() {
  static const std::vector<std::pair<std::string, Suite>> suites{
      {"specfun", specfun_suite}, {"lorentz", lorentz_suite}, {"support", support_suite},
      {"sharp", sharp_suite},     {"metric", metric_suite},   {"oracle", oracle_suite},
      {"functional", functional_suite}};
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v{"all"};
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<Check> run_verify(const VerifyOptions& options) {
  std::vector<Check> checks;
  bool found = false;
  for (const auto& [name, fn] : registry()) {
    if (options.suite == "all" || options.suite == name) {
      fn(options, checks);
      found = true;
    }
  }
  if (!found) throw ValidationError("unknown suite '" + options.suite + "'");
  return checks;
}

}  // namespace hyperex::cli
