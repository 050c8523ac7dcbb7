#include "hyperex/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hyperex/errors.hpp"
#include "hyperex/extension.hpp"
#include "hyperex/measures.hpp"
#include "hyperex/parallel.hpp"
#include "hyperex/specfun.hpp"

namespace hyperex::functionals {
namespace {

constexpr double pi = std::numbers::pi;

void require_pair(int d, int p) {
  if (!supported_pair(d, p)) {
    throw UnsupportedError("unsupported (d, p) = (" + std::to_string(d) + ", " + std::to_string(p) +
                           "); expected (2,4), (2,6) or (3,4)");
  }
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) throw ValidationError(std::string(name) + " must be positive");
}

std::string exponent_text(double e) {
  if (e == -0.25) return "-1/4";
  return std::to_string(e);
}

double unit_constant(int d, int p) {
  if (d == 2 && p == 4) return std::pow(2.0, 0.75) * pi;
  if (d == 2) return std::pow(2.0 * pi, 5.0 / 6.0);
  return std::pow(2.0 * pi, 1.25);
}

std::string unit_symbol(int d, int p) {
  if (d == 2 && p == 4) return "2^(3/4)*pi";
  if (d == 2) return "(2*pi)^(5/6)";
  return "(2*pi)^(5/4)";
}

bool tends_to_zero(int d, int p) { return !(d == 2 && p == 4); }

}  // namespace

std::string_view to_string(SheetCount sheets) { return sheets == SheetCount::one ? "one" : "two"; }

SheetCount parse_sheet_count(std::string_view text) {
  if (text == "one") return SheetCount::one;
  if (text == "two") return SheetCount::two;
  throw ValidationError("sheet must be 'one' or 'two'");
}

bool supported_pair(int d, int p) { return (d == 2 && (p == 4 || p == 6)) || (d == 3 && p == 4); }

double scaling_exponent(int d, int p) { return 0.5 * (d - 1) - static_cast<double>(d + 1) / p; }

double two_sheet_factor(int p) {
  if (p == 4) return std::pow(1.5, 0.25);
  if (p == 6) return std::cbrt(2.5);
  throw UnsupportedError("two-sheeted factor is known for p = 4 and p = 6 only");
}

SharpConstant best_constant(int d, int p, double s, SheetCount sheet) {
  require_pair(d, p);
  require_positive(s, "s");
  SharpConstant c{d, p, s, unit_constant(d, p), sheet, unit_symbol(d, p)};
  const double e = scaling_exponent(d, p);
  if (e != 0.0) {
    c.value *= std::pow(s, e);
    if (s != 1.0) c.symbolic += "*s^(" + exponent_text(e) + ")";
  }
  if (sheet == SheetCount::two) {
    c.value *= two_sheet_factor(p);
    c.symbolic = (p == 4 ? "(3/2)^(1/4)*" : "(5/2)^(1/3)*") + c.symbolic;
  }
  return c;
}

std::vector<SharpConstant> constants_table(double s) {
  std::vector<SharpConstant> rows;
  for (SheetCount sheet : {SheetCount::one, SheetCount::two}) {
    rows.push_back(best_constant(2, 4, s, sheet));
    rows.push_back(best_constant(2, 6, s, sheet));
    rows.push_back(best_constant(3, 4, s, sheet));
  }
  return rows;
}

double sup_bound_constant(int d, int p, double s) {
  require_pair(d, p);
  const measures::ConvClosedForm form{d, p / 2, s};
  const double sup = measures::conv_sup_norm(form).value;
  return std::pow(2.0 * pi, static_cast<double>(d + 1) / p) * std::pow(sup, 1.0 / p);
}

double convolution_form_constant(int d, int p, double s) {
  require_pair(d, p);
  const measures::ConvClosedForm form{d, p / 2, s};
  return std::pow(measures::conv_sup_norm(form).value, 1.0 / p);
}

double q_ratio_closed(int d, int p, double a, double s) {
  require_pair(d, p);
  require_positive(a, "a");
  require_positive(s, "s");
  if (d == 3) throw UnsupportedError("no closed expression for Q_{3,4}; use the quadrature method");
  if (p == 6) {
    const double q6 = std::pow(2.0 * pi, 5) * specfun::decreasing_profile(6.0 * a * s);
    return std::pow(q6, 1.0 / 6.0);
  }
  const double q4 = 8.0 * std::pow(pi, 4) / s * specfun::increasing_profile(4.0 * a * s);
  return std::pow(q4, 0.25);
}

Estimate q_ratio_quadrature(int d, int p, double a, double s, const QuadSpec& quad) {
  require_pair(d, p);
  const extension::ExpProfile profile{a, {d, s}};
  profile.validate();
  const Estimate norm = extension::lp_norm_extension_via_conv(profile, p, quad);
  const double f_norm = std::sqrt(extension::l2_norm_sq(profile));
  return {norm.value / f_norm, norm.error / f_norm};
}

std::string_view to_string(Method m) { return m == Method::closed ? "closed" : "quadrature"; }

Method parse_method(std::string_view text) {
  if (text == "closed") return Method::closed;
  if (text == "quadrature") return Method::quadrature;
  throw ValidationError("method must be 'closed' or 'quadrature'");
}

std::string_view to_string(Trend t) {
  switch (t) {
    case Trend::increasing:
      return "increasing";
    case Trend::decreasing:
      return "decreasing";
    case Trend::none:
      break;
  }
  return "none";
}

FunctionalCurvePoint evaluate_q(int d, int p, double a, double s, Method method, const QuadSpec& quad) {
  FunctionalCurvePoint pt{a, 0.0, 0.0, method};
  if (method == Method::closed) {
    pt.q_value = q_ratio_closed(d, p, a, s);
    // The closed expressions carry only rounding error.
    pt.error = 64.0 * std::numeric_limits<double>::epsilon() * pt.q_value;
  } else {
    const Estimate e = q_ratio_quadrature(d, p, a, s, quad);
    pt.q_value = e.value;
    pt.error = e.error;
  }
  return pt;
}

std::vector<double> make_grid(double a_min, double a_max, std::size_t n, bool log_spacing) {
  require_positive(a_min, "a-min");
  if (!(a_max > a_min) || !std::isfinite(a_max)) throw ValidationError("a-max must exceed a-min");
  if (n < 2) throw ValidationError("a grid needs at least two points");
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(n - 1);
    grid[i] = log_spacing ? a_min * std::pow(a_max / a_min, f) : a_min + f * (a_max - a_min);
  }
  grid.back() = a_max;
  return grid;
}

MonotonicityScan monotonicity_scan(int d, int p, double s, const std::vector<double>& a_grid,
                                   Method method, const QuadSpec& quad) {
  require_pair(d, p);
  if (a_grid.size() < 2) throw ValidationError("a grid needs at least two points");
  for (std::size_t i = 0; i < a_grid.size(); ++i) {
    require_positive(a_grid[i], "a");
    if (i > 0 && !(a_grid[i] > a_grid[i - 1])) throw ValidationError("a grid must be strictly increasing");
  }
  MonotonicityScan scan;
  scan.points.resize(a_grid.size());
  parallel_for(a_grid.size(),
               [&](std::size_t i) { scan.points[i] = evaluate_q(d, p, a_grid[i], s, method, quad); });

  if (d == 2) scan.expected = p == 6 ? Trend::decreasing : Trend::increasing;
  bool up = true;
  bool down = true;
  for (std::size_t i = 1; i < scan.points.size(); ++i) {
    const double prev = scan.points[i - 1].q_value;
    const double cur = scan.points[i].q_value;
    if (!(cur > prev)) up = false;
    if (!(cur < prev)) down = false;
  }
  scan.observed = up ? Trend::increasing : (down ? Trend::decreasing : Trend::none);
  scan.strict = scan.expected == Trend::none ? scan.observed != Trend::none
                                             : scan.observed == scan.expected;
  return scan;
}

double scaling_check(int d, int p, double s, double a, const QuadSpec& quad) {
  require_pair(d, p);
  const Method method = d == 3 ? Method::quadrature : Method::closed;
  const double lhs = evaluate_q(d, p, a, s, method, quad).q_value;
  const double rhs = std::pow(s, scaling_exponent(d, p)) * evaluate_q(d, p, a * s, 1.0, method, quad).q_value;
  return std::abs(lhs - rhs) / std::abs(lhs);
}

CombinerCheck two_sheeted_combiner_check(std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> decade(-3.0, 3.0);
  CombinerCheck out;
  out.samples = samples;
  for (std::size_t k = 0; k < samples; ++k) {
    const double x = std::pow(10.0, decade(rng));
    const double y = k % 10 == 0 ? x : std::pow(10.0, decade(rng));
    const double sum2 = (x + y) * (x + y);
    const double gap = 1.5 * sum2 - (x * x + y * y + 4.0 * x * y);
    if (gap < -1e-14 * sum2) ++out.violations;
    if (x == y) {
      out.equality_defect = std::max(out.equality_defect, std::abs(gap) / sum2);
    } else if (std::abs(x - y) > 1e-6 * (x + y) && !(gap > 0.0)) {
      ++out.violations;
    }
  }
  out.factor_p4 = two_sheet_factor(4);
  out.factor_p6 = two_sheet_factor(6);
  out.factor_consistency = std::abs(std::pow(25.0 / 4.0, 1.0 / 6.0) - out.factor_p6);
  return out;
}

double mass_fraction(int d, double s, double a, double radius) {
  geometry::HyperboloidParams{d, s}.validate();
  require_positive(a, "a");
  if (!(radius >= 0.0)) throw ValidationError("radius must be nonnegative");
  const double excess = radius * radius / (std::hypot(s, radius) + s);
  if (d == 2) return -std::expm1(-2.0 * a * excess);
  auto f = [&](double u) { return std::exp(-2.0 * a * (u - s)) * std::sqrt((u - s) * (u + s)); };
  const double inside = quad::tanh_sinh(f, s, s + excess, 1e-13).value;
  const double outside = quad::half_line(f, s + excess, 2.0 * a, 1e-13).value;
  return inside / (inside + outside);
}

double mass_fraction_quadrature(int d, double s, double a, double radius) {
  geometry::HyperboloidParams{d, s}.validate();
  require_positive(a, "a");
  auto f = [&](double r) {
    const double ps = std::hypot(s, r);
    return std::exp(-2.0 * a * (ps - s)) * std::pow(r, d - 1) / ps;
  };
  const double inside = radius > 0.0 ? quad::kronrod(f, 0.0, radius, 1e-13, 25).value : 0.0;
  const double outside = quad::half_line(f, radius, 2.0 * a, 1e-13).value;
  return inside / (inside + outside);
}

LimitProbe limit_probe(int d, int p, double s, double a, const QuadSpec& quad) {
  require_pair(d, p);
  LimitProbe probe;
  probe.method = d == 3 ? Method::quadrature : Method::closed;
  const double h = best_constant(d, p, s).value;
  probe.a = a;
  probe.companion_a = tends_to_zero(d, p) ? 0.5 * a : 2.0 * a;
  probe.ratio = evaluate_q(d, p, a, s, probe.method, quad).q_value / h;
  probe.companion_ratio = evaluate_q(d, p, probe.companion_a, s, probe.method, quad).q_value / h;
  // Leading error is linear in a (a -> 0) or in 1/a (a -> infinity); both
  // halve between the two probes.
  probe.extrapolated = 2.0 * probe.companion_ratio - probe.ratio;
  return probe;
}

}  // namespace hyperex::functionals
