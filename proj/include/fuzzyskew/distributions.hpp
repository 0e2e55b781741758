#pragma once

// Quantile functions of Beta/Uniform variables on affine supports, and the
// construction of a fuzzy number from a pair (X_L, X_R) whose quantile
// functions become the alpha-cut endpoints:
//   lower(alpha) = Q_{X_L}(alpha),   upper(alpha) = Q_{X_R}(1 - alpha).

#include <cstddef>

#include "fuzzyskew/fuzzy_number.hpp"

namespace fuzzyskew {

enum class Family { beta, uniform };

struct QuantileSpec {
  Family family = Family::uniform;
  double shape1 = 1.0;  ///< Beta a (ignored for uniform)
  double shape2 = 1.0;  ///< Beta b (ignored for uniform)
  Interval support{0.0, 1.0};

  /// Throws InvalidArgument on nonpositive shapes or an empty support.
  void validate() const;
};

/// Regularized incomplete beta I_x(a, b).
double beta_cdf(double x, double a, double b);
double beta_pdf(double x, double a, double b);

/// Inverse of beta_cdf in x, to |I_x - p| <= 1e-12 (or machine resolution in x).
double beta_quantile(double p, double a, double b);

double cdf(const QuantileSpec& spec, double x);
double quantile(const QuantileSpec& spec, double p);

inline constexpr std::size_t kDefaultQuantileGrid = 1001;

/// Samples both components on a uniform alpha grid of `grid_size` nodes.
/// Requires left.support.hi <= right.support.lo.
FuzzyNumber fuzzy_from_quantiles(const QuantileSpec& left, const QuantileSpec& right,
                                 std::size_t grid_size = kDefaultQuantileGrid);

}  // namespace fuzzyskew
