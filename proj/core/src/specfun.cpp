#include "hyperex/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hyperex/errors.hpp"

namespace hyperex::specfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// gamma + ln|x| + sum_{k>=1} x^k / (k k!). Used for x in [-1, 40].
double ei_series(double x) {
  double term = 1.0;
  double sum = 0.0;
  for (int k = 1; k < 500; ++k) {
    term *= x / k;
    const double contrib = term / k;
    sum += contrib;
    if (std::abs(contrib) <= kEps * std::abs(sum)) break;
  }
  return std::numbers::egamma + std::log(std::abs(x)) + sum;
}

// e^{a} E1(a) for a > 1 by the modified Lentz continued fraction.
double scaled_e1_continued_fraction(double a) {
  constexpr double tiny = 1e-300;
  double b = a + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 1000; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) <= kEps) break;
  }
  return h;
}

// e^{-x} Ei(x) for x > 40 from the asymptotic series sum k!/x^k, truncated
// at its smallest term.
double scaled_ei_asymptotic(double x) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double next = term * k / x;
    if (next > term) break;
    term = next;
    sum += term;
    if (term <= kEps * sum) break;
  }
  return sum / x;
}

}  // namespace

double exp_integral_ei(double x) {
  if (!std::isfinite(x)) throw DomainError("Ei: argument must be finite");
  if (x == 0.0) throw DomainError("Ei: logarithmic singularity at x = 0");
  if (x > 700.0) throw DomainError("Ei: overflow for x > 700");
  if (x < -1.0) {
    const double a = -x;
    return -scaled_e1_continued_fraction(a) * std::exp(-a);
  }
  if (x <= 40.0) return ei_series(x);
  return scaled_ei_asymptotic(x) * std::exp(x);
}

double scaled_ei_negative(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("scaled Ei: need finite a > 0");
  if (a > 1.0) return -scaled_e1_continued_fraction(a);
  return std::exp(a) * ei_series(-a);
}

double decreasing_profile(double a) {
  if (a < 0.0 || !std::isfinite(a)) throw DomainError("decreasing profile: need a >= 0");
  if (a == 0.0) return 1.0;
  // g = -a e^a Ei(-a) in (0, 1); the profile is 1 - a (1 - g).
  const double g = -a * scaled_ei_negative(a);
  return 1.0 - a * (1.0 - g);
}

double increasing_profile(double a) {
  if (a < 0.0 || !std::isfinite(a)) throw DomainError("increasing profile: need a >= 0");
  if (a == 0.0) return 0.0;
  return -a * scaled_ei_negative(a);
}

double bessel_j0(double x) {
  if (!std::isfinite(x)) throw DomainError("J0: argument must be finite");
  const double ax = std::abs(x);
  // The trapezoid rule with n nodes on [0, 2pi) is exact up to aliasing terms
  // of size J_n(x); n beyond |x| by a few Airy widths kills them.
  const int n_full = 2 * static_cast<int>(std::ceil(0.5 * (ax + 12.0 * std::cbrt(ax) + 24.0)));
  const int m = n_full / 2;  // intervals on [0, pi]
  double sum = std::cos(ax);  // endpoints theta = 0 and pi, each with weight 1/2
  for (int k = 1; k < m; ++k) {
    sum += std::cos(ax * std::cos(std::numbers::pi * k / m));
  }
  return sum / m;
}

BranchedComplex principal_sqrt(BranchedComplex z) {
  if (z.imag() == 0.0 && z.real() < 0.0) {
    throw BranchCutError("principal_sqrt: argument " + std::to_string(z.real()) +
                         " lies on the negative real axis");
  }
  if (z.imag() == 0.0) return {std::sqrt(z.real()), 0.0};
  return std::sqrt(z);
}

BranchedComplex laplace_j0_kernel(BranchedComplex lambda, double a, double b) {
  if (!(lambda.real() > 0.0)) throw DomainError("laplace_j0_kernel: need Re(lambda) > 0");
  if (a < 0.0) throw DomainError("laplace_j0_kernel: need a >= 0");
  if (!(b > 0.0)) throw DomainError("laplace_j0_kernel: need b > 0");
  const BranchedComplex w = principal_sqrt(lambda * lambda + a * a);
  return std::exp(-b * w) / w;
}

}  // namespace hyperex::specfun
