#pragma once

// Quantile-based skewness for fuzzy numbers.
//
// The left component is read as the CDF of a variable X_L and the right
// component as the survival function of X_R, so xi_d(alpha) = Q_{X_L}(alpha)
// and xi_u(alpha) = Q_{X_R}(1 - alpha). Skewness is then a convex combination
//
//   S = v * outer + (1 - v) * inner,
//
// where `inner` averages the Groeneveld-Meeden coefficients of X_L and X_R
// and `outer` measures the asymmetry of the alpha-cut profile around the core.
// Point forms (jkpt1) read the curves at alpha, 1/2 and 1 - alpha; integral
// forms (jkpt2) integrate numerators and denominators over alpha in [0, 1/2].
//
// Every ratio returns 0 when its denominator vanishes (flat component or
// zero-width cut): a crisp piece carries no asymmetry.

#include "fuzzyskew/fuzzy_number.hpp"

namespace fuzzyskew {

struct JkptConfig {
  double alpha = 0.25;  ///< quantile level, 0 < alpha <= 1/2 (0.25 Bowley, 0.1 Kelley)
  double v = 0.5;       ///< weight of the outer constituent

  /// Throws InvalidArgument when alpha or v is out of range.
  void validate() const;
};

double gm1_lower(FuzzyView f, double alpha);
double gm1_upper(FuzzyView f, double alpha);
double inner_point(FuzzyView f, double alpha);
/// Accepts 0 < alpha < 1.
double outer_point(FuzzyView f, double alpha);
double jkpt1(FuzzyView f, const JkptConfig& cfg);

double gm2_lower(FuzzyView f) noexcept;
double gm2_upper(FuzzyView f) noexcept;
double inner_integral(FuzzyView f) noexcept;
double outer_integral(FuzzyView f) noexcept;
double jkpt2(FuzzyView f, double v = 0.5);

}  // namespace fuzzyskew
