#pragma once

#include <complex>

namespace hyperex::specfun {

/// Complex value whose square roots are always taken on the principal
/// branch (cut along the closed negative real axis).
using BranchedComplex = std::complex<double>;

/// Exponential integral Ei(x) = -PV int_{-x}^inf e^{-t}/t dt.
///
/// Accurate to at least 12 significant digits for |x| in [1e-6, 700].
/// Throws DomainError for x == 0, non-finite x, or x > 700 (overflow).
double exp_integral_ei(double x);

/// e^{a} Ei(-a) for a > 0, evaluated without forming e^{a} or Ei(-a)
/// separately, so it stays finite for arbitrarily large a.
double scaled_ei_negative(double a);

/// 1 - a - a^2 e^{a} Ei(-a); strictly decreasing from 1 (a -> 0+) to 0.
double decreasing_profile(double a);

/// -a e^{a} Ei(-a); strictly increasing from 0 (a -> 0+) to 1.
double increasing_profile(double a);

/// Bessel function J0 from the periodic integral (1/2pi) int cos(x cos t) dt,
/// summed with the trapezoid rule (spectrally accurate).
double bessel_j0(double x);

/// Principal square root. Throws BranchCutError when z lies on the
/// negative real axis.
BranchedComplex principal_sqrt(BranchedComplex z);

/// Closed Laplace transform int_b^inf e^{-lambda u} J0(a sqrt(u^2 - b^2)) du
/// = e^{-b w} / w with w = sqrt(lambda^2 + a^2). Requires Re(lambda) > 0,
/// a >= 0, b > 0.
BranchedComplex laplace_j0_kernel(BranchedComplex lambda, double a, double b);

}  // namespace hyperex::specfun
