// Serial reference vs the OpenMP mesh kernel, per coefficient.
//   ./bench_optimize --benchmark_filter=vb13

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "fuzzyskew/asset_io.hpp"
#include "fuzzyskew/portfolio.hpp"

namespace {

using namespace fuzzyskew;

PortfolioProblem problem(Coefficient c, std::size_t mesh) {
  PortfolioProblem p;
  for (auto& a : load_assets(FUZZYSKEW_BENCH_ASSETS)) p.assets.push_back(std::move(a.number));
  p.mode = Mode::max_skew;
  p.rho = 6.0;
  p.beta = 3.6;
  p.gamma = -1.0;
  p.mesh = mesh;
  p.metrics.coefficient = c;
  return p;
}

template <class Run>
void run(benchmark::State& state, Coefficient c, Run&& solve) {
  const PortfolioProblem p = problem(c, static_cast<std::size_t>(state.range(0)));
  std::uint64_t points = 0;
  for (auto _ : state) {
    const Solution s = solve(p);
    benchmark::DoNotOptimize(s.panel);
    points += s.evaluated_points;
  }
  state.counters["points/s"] = benchmark::Counter(static_cast<double>(points), benchmark::Counter::kIsRate);
}

void serial(benchmark::State& state, Coefficient c) { run(state, c, [](const auto& p) { return optimize_serial(p); }); }

void parallel(benchmark::State& state, Coefficient c) { run(state, c, [](const auto& p) { return optimize(p); }); }

void one_worker(benchmark::State& state, Coefficient c) {
  run(state, c, [](const auto& p) { return optimize(p, 1); });
}

void register_all() {
  for (const Coefficient c : {Coefficient::jkpt1, Coefficient::jkpt2, Coefficient::vb13, Coefficient::lgy15}) {
    const std::string name(to_string(c));
    benchmark::RegisterBenchmark(("serial/" + name).c_str(), serial, c)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
    benchmark::RegisterBenchmark(("kernel_1/" + name).c_str(), one_worker, c)
        ->Arg(50)
        ->Arg(100)
        ->Unit(benchmark::kMillisecond);
    benchmark::RegisterBenchmark(("kernel_omp/" + name).c_str(), parallel, c)
        ->Arg(50)
        ->Arg(100)
        ->Unit(benchmark::kMillisecond)
        ->UseRealTime();
  }
}

}  // namespace

int main(int argc, char** argv) {
  register_all();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
