#pragma once

// Timing of full TCPO runs per coefficient, mode and asset count.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fuzzyskew/portfolio.hpp"

namespace fuzzyskew {

struct BenchConfig {
  std::vector<MetricSpec> metrics;
  std::vector<Mode> modes{Mode::min_variance, Mode::max_skew, Mode::max_mean};
  double rho = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  std::size_t mesh = 100;
  std::size_t repeats = 3;
  int workers = 1;
};

struct BenchRow {
  std::string coefficient;
  Mode mode = Mode::max_skew;
  std::size_t n_assets = 0;
  std::size_t mesh = 0;
  std::uint64_t evaluated_points = 0;
  double elapsed_ms_median = 0.0;
  double ns_per_eval = 0.0;
  bool feasible = false;
};

/// One row per (metric, mode). Infeasible runs are timed all the same.
std::vector<BenchRow> run_bench(std::span<const FuzzyNumber> assets, const BenchConfig& config);

/// Header: coefficient,mode,n_assets,mesh,evaluated_points,elapsed_ms_median,ns_per_eval,feasible
std::string bench_csv(std::span<const BenchRow> rows, bool header = true);

/// n assets cycled from `base`, copy c of asset i shifted by 1.0 * c so that
/// no two synthetic assets coincide.
std::vector<FuzzyNumber> synthetic_assets(std::span<const FuzzyNumber> base, std::size_t n);

}  // namespace fuzzyskew
