#pragma once

// Moment-based coefficients: the possibilistic mean and the VB13 and LGY15
// (mean, dispersion, skewness) families. All integrals are segment-exact on
// piecewise-linear curves.

#include "fuzzyskew/fuzzy_number.hpp"

namespace fuzzyskew {

enum class MomentFamily { vb13, lgy15 };

struct MomentPanel {
  double mean = 0.0;
  double dispersion = 0.0;  ///< omega for VB13, variance for LGY15
  double skewness = 0.0;
  MomentFamily family = MomentFamily::vb13;
};

/// 1/2 (int xi_d + int xi_u) over [0, 1].
double possibilistic_mean(FuzzyView f) noexcept;

/// Downside risk omega = int (xi_u - xi_d) over [0, 1].
double vb13_omega(FuzzyView f) noexcept;

/// mu_3 = 1/2 int (xi_d - E)^3 + 1/2 int (xi_u - E)^3, E the possibilistic mean.
double vb13_third_moment(FuzzyView f) noexcept;

/// mu_3 / omega^3. Throws DegenerateInput when omega == 0.
double vb13_skewness(FuzzyView f);

MomentPanel vb13_panel(FuzzyView f);

// LGY15: alpha-weighted integrands; the skewness is deliberately left
// unnormalized, so it scales with the cube of the input.
double lgy15_mean(FuzzyView f) noexcept;
double lgy15_variance(FuzzyView f) noexcept;
double lgy15_skewness(FuzzyView f) noexcept;

MomentPanel lgy15_panel(FuzzyView f) noexcept;

}  // namespace fuzzyskew
