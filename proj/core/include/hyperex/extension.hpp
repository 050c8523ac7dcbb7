#pragma once

#include "hyperex/geometry.hpp"
#include "hyperex/measures.hpp"
#include "hyperex/quadrature.hpp"
#include "hyperex/specfun.hpp"

namespace hyperex::extension {

using geometry::HyperboloidParams;
using geometry::SpacetimePoint;
using geometry::Vector;
using specfun::BranchedComplex;

/// f_a(y) = exp(-a psi_s(y)) on the hyperboloid of params.
struct ExpProfile {
  double a = 1.0;
  HyperboloidParams params;

  void validate() const;
};

/// T_s f_a(x, t) = 2 pi e^{-s w} / w with w = sqrt((a - i t)^2 + |x|^2).
/// Only d = 2; other dimensions throw UnsupportedError.
BranchedComplex extension_closed(const ExpProfile& profile, const Vector& x, double t);

struct ComplexEstimate {
  BranchedComplex value;
  double error = 0.0;
};

/// T_s f_a(x, t) by direct quadrature of the radial integral (J0 kernel for
/// d = 2, sin(|x| r)/(|x| r) for d = 3). Throws BudgetError when the number
/// of oscillations over the truncated range exceeds quad.max_oscillations.
ComplexEstimate extension_quadrature(const ExpProfile& profile, const Vector& x, double t,
                                     const QuadSpec& quad);

/// ||f_a||^2 in L^2(sigma_s).
double l2_norm_sq(const ExpProfile& profile);

/// (f_a sigma_s)^{(*n)}(p) = e^{-a tau} sigma_s^{(*n)}(p).
double weighted_conv_closed(const ExpProfile& profile, int n, const SpacetimePoint& p);

/// ||(f_a sigma_s)^{(*k)}||_2^2 over R^{d+1} by quadrature in (tau, tau^2 - |xi|^2).
Estimate weighted_conv_l2_sq(const ExpProfile& profile, int k, const QuadSpec& quad);

/// Closed values of the same norm for d = 2 and k in {2, 3}.
double weighted_conv_l2_sq_closed(const ExpProfile& profile, int k);

/// ||T_s f_a||_{L^p} for p = 2k through the convolution identity
/// ||T f||_{2k}^k = (2 pi)^{(d+1)/2} ||(f sigma)^{(*k)}||_2.
/// (d, p) must be one of (2, 4), (2, 6), (3, 4).
Estimate lp_norm_extension_via_conv(const ExpProfile& profile, int p_exponent, const QuadSpec& quad);

/// Both sides of the fiberwise Cauchy-Schwarz bound for n = 2:
/// lhs = ||(f sigma)^{(*2)}||_2^2 and
/// rhs = int f(x)^2 f(y)^2 sigma^{(*2)}(x + y, psi(x) + psi(y)) dsigma(x) dsigma(y).
/// They coincide for exponential profiles.
struct CauchySchwarzSides {
  Estimate lhs;
  Estimate rhs;
};

CauchySchwarzSides cauchy_schwarz_sides(const ExpProfile& profile, const QuadSpec& quad);

/// ||(f_a sigma)^{(*n)}||_2 against ||sigma^{(*n)}||_inf^{1/2} ||f_a||_2^n.
struct ConvolutionBound {
  double norm = 0.0;
  double bound = 0.0;
  double error = 0.0;
};

ConvolutionBound convolution_bound(const ExpProfile& profile, int n, const QuadSpec& quad);

/// ||T_s f_a||_{L^4(R^3)} for d = 2 by integrating |T_s f_a|^4 in
/// (t, |x|^2) over all of R^3 (validation path, loose tolerance).
Estimate l4_norm_direct(const ExpProfile& profile, double rel_tol = 1e-7);

}  // namespace hyperex::extension
