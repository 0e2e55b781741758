#pragma once

// Coefficient formulas on precomputed curve functionals, shared by the public
// functions and the portfolio mesh kernel.

#include <cmath>

#include "fuzzyskew/fuzzy_number.hpp"

namespace fuzzyskew::detail {

inline double ratio_or_zero(double num, double den) noexcept { return den == 0.0 ? 0.0 : num / den; }

/// One curve read at a, 1/2, 1 - a and 1.
struct CurveSamples {
  double at_a;
  double at_half;
  double at_1ma;
  double at_one;
};

CurveSamples sample(CurveView c, double a) noexcept;

/// Numerators and denominators of the lower/upper inner ratios and the outer
/// ratio. Each is a linear functional of the curves.
struct RatioTerms {
  double lower_num, lower_den;
  double upper_num, upper_den;
  double outer_num, outer_den;
};

RatioTerms point_terms(const CurveSamples& d, const CurveSamples& u) noexcept;

/// v * outer + (1 - v) * inner for either ratio family.
inline double mix(const RatioTerms& t, double v) noexcept {
  const double inner =
      0.5 * (ratio_or_zero(t.lower_num, t.lower_den) + ratio_or_zero(t.upper_num, t.upper_den));
  return v * ratio_or_zero(t.outer_num, t.outer_den) + (1.0 - v) * inner;
}

/// mix() with the three ratios over a common denominator: one division per
/// call instead of three. Falls back to mix() when a denominator is zero or
/// the product leaves the normal range.
inline double mix_one_division(const RatioTerms& t, double v) noexcept {
  const double ld = t.lower_den, ud = t.upper_den, od = t.outer_den;
  const double inner_den = ld * ud;
  const double den = inner_den * od;
  if (!std::isnormal(den)) return mix(t, v);
  const double inner_num = t.lower_num * ud + t.upper_num * ld;
  return (v * t.outer_num * inner_den + (1.0 - v) * 0.5 * inner_num * od) / den;
}

/// Integrals of xi - xi(1) over [0, 1/2] and [1/2, 1], xi(1/2) - xi(1), and xi(1).
struct CurveHalves {
  double first;
  double second;
  double at_half;
  double at_one;
};

CurveHalves halves(CurveView c) noexcept;

RatioTerms integral_terms(const CurveHalves& d, const CurveHalves& u) noexcept;

/// 1/2 int (xi_d - e)^3 + 1/2 int (xi_u - e)^3.
double third_moment_about(FuzzyView f, double e) noexcept;

/// mu_3 / omega^3 given the mean and omega. Throws DegenerateInput on omega == 0.
double vb13_skewness_from(FuzzyView f, double mean, double omega);

}  // namespace fuzzyskew::detail
