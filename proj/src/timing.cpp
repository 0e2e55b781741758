#include "fuzzyskew/timing.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <utility>

#include "fuzzyskew/error.hpp"

namespace fuzzyskew {

std::vector<BenchRow> run_bench(std::span<const FuzzyNumber> assets, const BenchConfig& config) {
  if (config.metrics.empty()) throw InvalidArgument("bench: need at least one coefficient");
  if (config.repeats == 0) throw InvalidArgument("bench: repeats must be at least 1");

  PortfolioProblem problem;
  problem.assets.assign(assets.begin(), assets.end());
  problem.rho = config.rho;
  problem.beta = config.beta;
  problem.gamma = config.gamma;
  problem.mesh = config.mesh;

  std::vector<BenchRow> rows;
  std::vector<std::pair<MetricSpec, Mode>> runs;
  for (const auto& spec : config.metrics)
    for (const Mode mode : config.modes) {
      runs.emplace_back(spec, mode);
      rows.push_back({spec.label(), mode, assets.size(), config.mesh, 0, 0.0, 0.0, false});
    }

  // Repeats are the outer loop so that slow drift in machine load is spread
  // over every row instead of landing on whichever row runs last.
  std::vector<std::vector<double>> ms(runs.size());
  for (std::size_t r = 0; r < config.repeats; ++r) {
    for (std::size_t i = 0; i < runs.size(); ++i) {
      problem.metrics = runs[i].first;
      problem.mode = runs[i].second;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        const Solution s = optimize(problem, config.workers);
        rows[i].evaluated_points = s.evaluated_points;
        rows[i].feasible = true;
      } catch (const NoFeasiblePoint& e) {
        rows[i].evaluated_points = e.evaluated();
      }
      ms[i].push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    }
  }

  for (std::size_t i = 0; i < runs.size(); ++i) {
    auto& v = ms[i];
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    BenchRow& row = rows[i];
    row.elapsed_ms_median = n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
    row.ns_per_eval =
        row.evaluated_points ? row.elapsed_ms_median * 1e6 / static_cast<double>(row.evaluated_points) : 0.0;
  }
  return rows;
}

std::string bench_csv(std::span<const BenchRow> rows, bool header) {
  std::ostringstream os;
  if (header) os << "coefficient,mode,n_assets,mesh,evaluated_points,elapsed_ms_median,ns_per_eval,feasible\n";
  for (const auto& r : rows) {
    os << '"' << r.coefficient << "\"," << to_string(r.mode) << ',' << r.n_assets << ',' << r.mesh << ','
       << r.evaluated_points << ',' << r.elapsed_ms_median << ',' << r.ns_per_eval << ',' << (r.feasible ? 1 : 0)
       << '\n';
  }
  return os.str();
}

std::vector<FuzzyNumber> synthetic_assets(std::span<const FuzzyNumber> base, std::size_t n) {
  if (base.empty()) throw InvalidArgument("synthetic_assets: empty base");
  std::vector<FuzzyNumber> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double copy = static_cast<double>(i / base.size());
    out.push_back(scale_shift(base[i % base.size()], 1.0, copy));
  }
  return out;
}

}  // namespace fuzzyskew
