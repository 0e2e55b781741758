#pragma once

// Threshold-constrained portfolio optimization (TCPO).
//
// Every weight vector of the simplex mesh is evaluated; the portfolio return
// is the fuzzy weighted sum of the asset returns. Two of (mean, dispersion,
// skewness) are thresholds, the third is the objective:
//
//   max_skew      max S   s.t. E >= rho, D <= beta
//   max_mean      max E   s.t. D <= beta, S >= gamma
//   min_variance  min D   s.t. E >= rho, S >= gamma
//
// Ties (objective within 1e-12 * max(1, |best|) of the optimum) resolve to
// the lexicographically smallest weight vector, independent of thread count.

#include <chrono>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "fuzzyskew/fuzzy_number.hpp"
#include "fuzzyskew/metrics.hpp"

namespace fuzzyskew {

enum class Mode { max_skew, max_mean, min_variance };

std::string_view to_string(Mode m) noexcept;
/// Accepts "skew", "mean", "var" (and the enum spellings).
Mode parse_mode(std::string_view name);

struct PortfolioProblem {
  std::vector<FuzzyNumber> assets;
  Mode mode = Mode::max_skew;
  double rho = 0.0;    ///< minimum mean
  double beta = 0.0;   ///< maximum dispersion
  double gamma = 0.0;  ///< minimum skewness (max_mean, min_variance)
  std::size_t mesh = 100;
  MetricSpec metrics{};

  void validate() const;
};

struct Solution {
  std::vector<double> weights;
  Panel panel{};
  std::uint64_t evaluated_points = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// Panel of the portfolio sum_i w_i * assets_i.
Panel evaluate(std::span<const double> weights, std::span<const FuzzyNumber> assets, const MetricSpec& metrics);

bool is_feasible(const Panel& p, const PortfolioProblem& problem) noexcept;

/// Value maximized by the search (min_variance maximizes -dispersion).
double objective(const Panel& p, Mode mode) noexcept;

/// Relative tie tolerance around the optimum.
inline constexpr double kTieTolerance = 1e-12;

/// OpenMP mesh evaluation. workers == 0 uses the OpenMP default team size.
/// Throws NoFeasiblePoint when nothing satisfies the thresholds.
Solution optimize(const PortfolioProblem& problem, int workers = 0);

/// Single-threaded reference: builds each portfolio with weighted_sum and
/// evaluates it with evaluate_panel. optimize() reaches the same panels by a
/// different summation order, so values agree to rounding and the weights
/// agree unless a point sits on a threshold or tie boundary within rounding.
Solution optimize_serial(const PortfolioProblem& problem);

}  // namespace fuzzyskew
