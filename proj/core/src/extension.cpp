#include "hyperex/extension.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hyperex/errors.hpp"

namespace hyperex::extension {
namespace {

constexpr double pi = std::numbers::pi;

double sinc(double z) { return std::abs(z) < 1e-8 ? 1.0 - z * z / 6.0 : std::sin(z) / z; }

measures::ConvClosedForm closed_form(const ExpProfile& profile, int n) {
  measures::ConvClosedForm form{profile.params.d, n, profile.params.s};
  form.validate();
  return form;
}

int fold_count(const ExpProfile& profile, int p_exponent) {
  const int d = profile.params.d;
  const bool ok = (d == 2 && (p_exponent == 4 || p_exponent == 6)) || (d == 3 && p_exponent == 4);
  if (!ok) {
    throw UnsupportedError("no convolution identity for (d, p) = (" + std::to_string(d) + ", " +
                           std::to_string(p_exponent) + ")");
  }
  return p_exponent / 2;
}

}  // namespace

void ExpProfile::validate() const {
  params.validate();
  if (!(a > 0.0) || !std::isfinite(a)) throw ValidationError("profile decay a must be positive");
}

BranchedComplex extension_closed(const ExpProfile& profile, const Vector& x, double t) {
  profile.validate();
  if (profile.params.d != 2) throw UnsupportedError("closed extension is available for d = 2 only");
  if (x.size() != 2) throw ValidationError("x must have two components");
  const BranchedComplex lambda(profile.a, -t);
  return 2.0 * pi * specfun::laplace_j0_kernel(lambda, x.norm(), profile.params.s);
}

ComplexEstimate extension_quadrature(const ExpProfile& profile, const Vector& x, double t,
                                     const QuadSpec& quad) {
  profile.validate();
  const int d = profile.params.d;
  const double s = profile.params.s;
  const double a = profile.a;
  if (x.size() != d) throw ValidationError("x must have d components");
  const double rx = x.norm();

  // Range of u = psi(r) beyond which e^{-a (u - s)} is below double precision.
  double span = 42.0 / a;
  if (quad.truncation_radius > 0.0) span = std::hypot(s, quad.truncation_radius) - s;
  const double freq = std::abs(t) + rx;
  if (freq * span / (2.0 * pi) > quad.max_oscillations) {
    throw BudgetError("extension quadrature would cover " + std::to_string(freq * span / (2.0 * pi)) +
                      " oscillations");
  }

  auto kernel = [&](double u) {
    const double r = std::sqrt((u - s) * (u + s));
    return d == 2 ? 2.0 * pi * specfun::bessel_j0(rx * r) : 4.0 * pi * r * sinc(rx * r);
  };
  auto re = [&](double u) { return std::exp(-a * u) * std::cos(t * u) * kernel(u); };
  auto im = [&](double u) { return std::exp(-a * u) * std::sin(t * u) * kernel(u); };

  ComplexEstimate out;
  double sum_re = 0.0;
  double sum_im = 0.0;
  auto piece = [&](auto&& fr, auto&& fi, double lo, double hi) {
    const Estimate er = quad::kronrod(fr, lo, hi, quad.rel_tol, quad.max_depth);
    const Estimate ei = quad::kronrod(fi, lo, hi, quad.rel_tol, quad.max_depth);
    sum_re += er.value;
    sum_im += ei.value;
    out.error += std::abs(er.error) + std::abs(ei.error);
  };

  // Near u = s substitute u = s + v^2 so the square root in r is smooth.
  const double head = std::min(span, 1.0 / (1.0 + freq));
  piece([&](double v) { return 2.0 * v * re(s + v * v); },
        [&](double v) { return 2.0 * v * im(s + v * v); }, 0.0, std::sqrt(head));
  const double rest = span - head;
  if (rest > 0.0) {
    const double width = std::min(rest / 4.0, freq > 0.0 ? pi / freq : rest);
    const auto count = static_cast<std::size_t>(std::ceil(rest / width));
    const double h = rest / static_cast<double>(count);
    for (std::size_t k = 0; k < count; ++k) {
      const double lo = s + head + h * static_cast<double>(k);
      piece(re, im, lo, k + 1 == count ? s + span : lo + h);
    }
  }
  out.value = {sum_re, sum_im};
  return out;
}

double l2_norm_sq(const ExpProfile& profile) {
  profile.validate();
  const double a = profile.a;
  const double s = profile.params.s;
  if (profile.params.d == 2) return pi / a * std::exp(-2.0 * a * s);
  const Estimate e = quad::half_line(
      [&](double u) { return std::exp(-2.0 * a * (u - s)) * std::sqrt((u - s) * (u + s)); }, s,
      2.0 * a, 1e-13);
  return 4.0 * pi * std::exp(-2.0 * a * s) * e.value;
}

double weighted_conv_closed(const ExpProfile& profile, int n, const SpacetimePoint& p) {
  profile.validate();
  const double v = measures::conv_closed(closed_form(profile, n), p);
  return v == 0.0 ? 0.0 : std::exp(-profile.a * p.tau) * v;
}

Estimate weighted_conv_l2_sq(const ExpProfile& profile, int k, const QuadSpec& quad) {
  profile.validate();
  const auto form = closed_form(profile, k);
  const int d = profile.params.d;
  const double s = profile.params.s;
  const double a = profile.a;
  const double tau0 = k * s;
  const double q0 = tau0 * tau0;
  const double omega = d == 2 ? 2.0 * pi : 4.0 * pi;
  const double inner_tol = std::max(quad.rel_tol, 1e-14);

  // For fixed tau, |xi| = sqrt(tau^2 - q) turns d xi into
  // (omega / 2) (tau^2 - q)^{(d - 2)/2} dq.
  auto inner = [&](double tau) {
    const double t2 = tau * tau;
    if (t2 <= q0) return 0.0;
    auto f = [&](double q) {
      const double c = measures::conv_closed_invariant(form, q);
      const double jac = d == 2 ? 1.0 : std::sqrt(std::max(t2 - q, 0.0));
      return jac * c * c;
    };
    return 0.5 * omega * quad::tanh_sinh(f, q0, t2, inner_tol).value;
  };
  const Estimate outer = quad::half_line(
      [&](double tau) {
        const double w = std::exp(-2.0 * a * (tau - tau0));
        return w > 0.0 ? w * inner(tau) : 0.0;
      },
      tau0, 2.0 * a,
      std::max(quad.rel_tol, 1e-12));
  const double scale = std::exp(-2.0 * a * tau0);
  return {scale * outer.value, scale * outer.error + std::abs(scale * outer.value) * inner_tol};
}

double weighted_conv_l2_sq_closed(const ExpProfile& profile, int k) {
  profile.validate();
  if (profile.params.d != 2 || (k != 2 && k != 3)) {
    throw UnsupportedError("closed convolution norms exist for d = 2, k = 2 or 3");
  }
  const double a = profile.a;
  const double s = profile.params.s;
  const double two_pi = 2.0 * pi;
  if (k == 2) {
    return -std::pow(two_pi, 3) * std::exp(-4.0 * a * s) * specfun::scaled_ei_negative(4.0 * a * s) /
           (2.0 * a);
  }
  const double bracket = 1.0 / (8.0 * a * a * a) -
                         9.0 * s * s * specfun::scaled_ei_negative(6.0 * a * s) / (2.0 * a) -
                         6.0 * s / (8.0 * a * a);
  return std::pow(two_pi, 5) * std::exp(-6.0 * a * s) * bracket;
}

Estimate lp_norm_extension_via_conv(const ExpProfile& profile, int p_exponent, const QuadSpec& quad) {
  profile.validate();
  const int k = fold_count(profile, p_exponent);
  const Estimate sq = weighted_conv_l2_sq(profile, k, quad);
  const int d = profile.params.d;
  const double power_k = std::pow(2.0 * pi, 0.5 * (d + 1)) * std::sqrt(sq.value);
  const double value = std::pow(power_k, 1.0 / k);
  return {value, value * sq.error / (2.0 * k * sq.value)};
}

CauchySchwarzSides cauchy_schwarz_sides(const ExpProfile& profile, const QuadSpec& quad) {
  profile.validate();
  const auto form = closed_form(profile, 2);
  const double a = profile.a;
  CauchySchwarzSides sides;
  sides.lhs = weighted_conv_l2_sq(profile, 2, quad);
  measures::RadialWindow window;
  const double floor = 4.0 * form.s * form.s;
  window.g = [form, a, floor](double rho, double tau) {
    // Sums of two sheet points satisfy tau^2 - rho^2 >= 4 s^2; clamp so that
    // rounding at x = y does not drop the node off the support.
    const double m2 = std::max((tau - rho) * (tau + rho), floor);
    return std::exp(-2.0 * a * tau) * measures::conv_closed_invariant(form, m2);
  };
  window.tau_max = 2.0 * profile.params.s + 20.0 / a;
  const auto rhs = measures::conv_pairing_oracle({profile.params, measures::Sheet::plus}, 2, window, quad);
  sides.rhs = {rhs.value, rhs.error};
  return sides;
}

ConvolutionBound convolution_bound(const ExpProfile& profile, int n, const QuadSpec& quad) {
  profile.validate();
  const auto form = closed_form(profile, n);
  const Estimate sq = weighted_conv_l2_sq(profile, n, quad);
  ConvolutionBound out;
  out.norm = std::sqrt(sq.value);
  out.error = sq.error / (2.0 * out.norm);
  out.bound = std::sqrt(measures::conv_sup_norm(form).value) * std::pow(l2_norm_sq(profile), 0.5 * n);
  return out;
}

Estimate l4_norm_direct(const ExpProfile& profile, double rel_tol) {
  profile.validate();
  if (profile.params.d != 2) throw UnsupportedError("direct L^4 path is available for d = 2 only");
  const double a = profile.a;
  const double s = profile.params.s;
  const double c4 = std::pow(2.0 * pi, 4);

  // |T f_a|^4 as a function of q = |x|^2 and t.
  auto density = [&](double q, double t) {
    const double re = a * a - t * t + q;
    const double im = -2.0 * a * t;
    const double mod2 = re * re + im * im;
    const double mod = std::sqrt(mod2);
    const double re_w = std::sqrt(0.5 * (mod + re));
    return c4 * std::exp(-4.0 * s * re_w) / mod2;
  };
  auto slice = [&](double t) {
    // The modulus of w^2 is smallest near q = t^2 - a^2.
    const double qc = std::max(t * t - a * a, 0.0);
    double v = 0.0;
    if (qc > 0.0) {
      const Estimate head = quad::kronrod([&](double q) { return density(q, t); }, 0.0, qc, rel_tol * 1e-2, 15);
      v += head.value;
    }
    const Estimate tail = quad::half_line([&](double q) { return density(q, t); }, qc,
                                          1.0 / (a * a + 2.0 * a * t), rel_tol * 1e-2);
    return v + tail.value;
  };
  const Estimate outer = quad::half_line(slice, 0.0, a, rel_tol);
  // R^3 volume element: dx dt = pi dq dt, and t ranges over both signs.
  const double fourth = 2.0 * pi * outer.value;
  const double norm = std::pow(fourth, 0.25);
  return {norm, 0.25 * norm * outer.error / outer.value};
}

}  // namespace hyperex::extension
