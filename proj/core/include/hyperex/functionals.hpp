#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperex/quadrature.hpp"

namespace hyperex::functionals {

enum class SheetCount { one, two };

std::string_view to_string(SheetCount sheets);
SheetCount parse_sheet_count(std::string_view text);

/// Best constant H_{d,p,s} (one sheet) or its two-sheeted counterpart.
struct SharpConstant {
  int d = 2;
  int p = 4;
  double s = 1.0;
  double value = 0.0;
  SheetCount sheet = SheetCount::one;
  /// Closed expression, e.g. "(3/2)^(1/4)*2^(3/4)*pi*s^(-1/4)".
  std::string symbolic;
};

/// True for (d, p) in {(2, 4), (2, 6), (3, 4)}.
bool supported_pair(int d, int p);

/// (d - 1)/2 - (d + 1)/p, the power of s in H_{d,p,s}.
double scaling_exponent(int d, int p);

/// Throws UnsupportedError for unsupported (d, p) and ValidationError for s <= 0.
SharpConstant best_constant(int d, int p, double s = 1.0, SheetCount sheet = SheetCount::one);

/// All supported pairs, one-sheeted rows first.
std::vector<SharpConstant> constants_table(double s = 1.0);

/// Multiplier of the two-sheeted constant: (3/2)^{1/4} for p = 4 and
/// (5/2)^{1/3} for p = 6.
double two_sheet_factor(int p);

/// (2 pi)^{(d+1)/p} ||sigma_s^{(*p/2)}||_inf^{1/p}, the convolution upper bound.
double sup_bound_constant(int d, int p, double s = 1.0);

/// ||sigma_s^{(*k)}||_inf^{1/(2k)} = sup ||(f sigma)^{(*k)}||_2^{1/k} / ||f||_2.
double convolution_form_constant(int d, int p, double s = 1.0);

/// Q_{d,p}(a, s) = ||T_s f_a||_p / ||f_a||_2 from the closed expressions
/// ((d, p) = (2, 4) or (2, 6)); (3, 4) throws UnsupportedError.
double q_ratio_closed(int d, int p, double a, double s);

/// Q_{d,p}(a, s) through the convolution identity evaluated by quadrature.
Estimate q_ratio_quadrature(int d, int p, double a, double s, const QuadSpec& quad);

enum class Method { closed, quadrature };

std::string_view to_string(Method m);
Method parse_method(std::string_view text);

struct FunctionalCurvePoint {
  double a = 0.0;
  double q_value = 0.0;
  double error = 0.0;
  Method method = Method::closed;
};

FunctionalCurvePoint evaluate_q(int d, int p, double a, double s, Method method, const QuadSpec& quad);

enum class Trend { increasing, decreasing, none };

std::string_view to_string(Trend t);

struct MonotonicityScan {
  std::vector<FunctionalCurvePoint> points;
  /// Direction the closed expressions predict; none for (3, 4).
  Trend expected = Trend::none;
  /// Direction observed on the grid (none when not strictly monotone).
  Trend observed = Trend::none;
  /// observed == expected, or observed != none when nothing is predicted.
  bool strict = false;
};

/// Evaluates Q on a strictly increasing grid (>= 2 points) in parallel and
/// classifies its monotonicity. Throws ValidationError on a bad grid.
MonotonicityScan monotonicity_scan(int d, int p, double s, const std::vector<double>& a_grid,
                                   Method method = Method::closed, const QuadSpec& quad = {});

/// n points from a_min to a_max, geometric when log_spacing is set.
std::vector<double> make_grid(double a_min, double a_max, std::size_t n, bool log_spacing);

/// |Q(a, s) - s^e Q(a s, 1)| / Q(a, s) with e = scaling_exponent(d, p); the
/// closed expressions are used where they exist.
double scaling_check(int d, int p, double s, double a, const QuadSpec& quad = {});

struct CombinerCheck {
  std::size_t samples = 0;
  std::size_t violations = 0;
  /// Largest |gap| over the equality samples X = Y.
  double equality_defect = 0.0;
  double factor_p4 = 0.0;
  double factor_p6 = 0.0;
  /// |(25/4)^{1/6} - (5/2)^{1/3}|.
  double factor_consistency = 0.0;
};

/// Checks X^2 + Y^2 + 4XY <= (3/2)(X + Y)^2 on random X, Y >= 0, with
/// strict inequality whenever X and Y differ.
CombinerCheck two_sheeted_combiner_check(std::size_t samples, std::uint64_t seed);

/// ||f_a||^2 on the ball B(0, R) over the full norm.
double mass_fraction(int d, double s, double a, double radius);

/// Same ratio by radial quadrature in |y| (independent of the closed form).
double mass_fraction_quadrature(int d, double s, double a, double radius);

/// Q / H at a finite a plus a first-order Richardson extrapolation toward
/// the limit: a -> 0+ for p = 6 and d = 3, a -> infinity for (2, 4).
struct LimitProbe {
  double a = 0.0;
  double ratio = 0.0;
  double companion_a = 0.0;
  double companion_ratio = 0.0;
  double extrapolated = 0.0;
  Method method = Method::closed;
};

LimitProbe limit_probe(int d, int p, double s, double a, const QuadSpec& quad = {});

}  // namespace hyperex::functionals
