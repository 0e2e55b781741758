#include "fuzzyskew/portfolio.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <optional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "detail.hpp"
#include "fuzzyskew/error.hpp"
#include "fuzzyskew/moments.hpp"
#include "fuzzyskew/simplex_mesh.hpp"

namespace fuzzyskew {

std::string_view to_string(Mode m) noexcept {
  switch (m) {
    case Mode::max_skew: return "skew";
    case Mode::max_mean: return "mean";
    case Mode::min_variance: return "var";
  }
  return "?";
}

Mode parse_mode(std::string_view name) {
  if (name == "skew" || name == "max_skew" || name == "S") return Mode::max_skew;
  if (name == "mean" || name == "max_mean" || name == "M") return Mode::max_mean;
  if (name == "var" || name == "min_variance" || name == "V") return Mode::min_variance;
  throw InvalidArgument("unknown mode '" + std::string(name) + "' (expected skew|mean|var)");
}

void PortfolioProblem::validate() const {
  if (assets.empty()) throw InvalidArgument("portfolio: empty asset list");
  if (mesh == 0) throw InvalidArgument("portfolio: mesh resolution must be at least 1");
  if (!std::isfinite(rho) || !std::isfinite(beta) || !std::isfinite(gamma))
    throw InvalidArgument("portfolio: thresholds must be finite");
  metrics.validate();
}

Panel evaluate(std::span<const double> weights, std::span<const FuzzyNumber> assets, const MetricSpec& metrics) {
  return evaluate_panel(weighted_sum(weights, assets), metrics);
}

bool is_feasible(const Panel& p, const PortfolioProblem& problem) noexcept {
  switch (problem.mode) {
    case Mode::max_skew: return p.mean >= problem.rho && p.dispersion <= problem.beta;
    case Mode::max_mean: return p.dispersion <= problem.beta && p.skewness >= problem.gamma;
    case Mode::min_variance: return p.mean >= problem.rho && p.skewness >= problem.gamma;
  }
  return false;
}

double objective(const Panel& p, Mode mode) noexcept {
  switch (mode) {
    case Mode::max_skew: return p.skewness;
    case Mode::max_mean: return p.mean;
    case Mode::min_variance: return -p.dispersion;
  }
  return 0.0;
}

namespace {

// out[j] = sum_i w[i] * t[i * m + j], summed in asset order like weighted_sum().
// Rows are short (a handful of functionals or breakpoints), so the columns are
// walked in blocks of four with the asset loop inside. N > 0 fixes the asset
// count at compile time; the loop control otherwise dominates for 2-4 assets.
template <std::size_t N>
void weighted_rows(const double* __restrict w, std::size_t n, const double* __restrict t, std::size_t m,
                   double* __restrict out) noexcept {
  if constexpr (N > 0) n = N;
  std::size_t j = 0;
  for (; j + 4 <= m; j += 4) {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double wi = w[i];
      const double* r = t + i * m + j;
      s0 += wi * r[0];
      s1 += wi * r[1];
      s2 += wi * r[2];
      s3 += wi * r[3];
    }
    out[j] = s0;
    out[j + 1] = s1;
    out[j + 2] = s2;
    out[j + 3] = s3;
  }
  for (; j < m; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += w[i] * t[i * m + j];
    out[j] = s;
  }
}

using RowsFn = void (*)(const double*, std::size_t, const double*, std::size_t, double*) noexcept;

RowsFn rows_for(std::size_t n) noexcept {
  switch (n) {
    case 2: return weighted_rows<2>;
    case 3: return weighted_rows<3>;
    case 4: return weighted_rows<4>;
    default: return weighted_rows<0>;
  }
}

double tie_floor(double best) noexcept { return best - kTieTolerance * std::max(1.0, std::fabs(best)); }

struct Candidate {
  std::uint64_t rank;
  double objective;
  Panel panel;
};

// Running maximum plus every candidate that could still end up within the tie
// band of the global maximum. tie_floor is nondecreasing, so anything pruned
// against a partial maximum is also outside the band of the final one; the
// surviving set, and hence pick(), does not depend on visiting order.
class ArgmaxAccumulator {
 public:
  void offer(std::uint64_t rank, double obj, const Panel& panel) {
    if (std::isnan(obj)) return;
    if (obj > best_) {
      best_ = obj;
      if (near_.size() > 64) prune();
    }
    if (obj >= tie_floor(best_)) near_.push_back({rank, obj, panel});
  }

  void merge(const ArgmaxAccumulator& other) {
    best_ = std::max(best_, other.best_);
    near_.insert(near_.end(), other.near_.begin(), other.near_.end());
    prune();
  }

  std::optional<Candidate> pick() const {
    const double floor = tie_floor(best_);
    std::optional<Candidate> out;
    for (const auto& c : near_)
      if (c.objective >= floor && (!out || c.rank < out->rank)) out = c;
    return out;
  }

 private:
  void prune() {
    const double floor = tie_floor(best_);
    std::erase_if(near_, [floor](const Candidate& c) { return c.objective < floor; });
  }

  double best_ = -std::numeric_limits<double>::infinity();
  std::vector<Candidate> near_;
};

// Cut endpoints of a weighted sum are the weighted sums of the assets'
// endpoints at every alpha, so every linear functional of the portfolio curves
// (a point value, an integral) is the same weighted sum of the assets'
// functionals. Those are tabulated once per asset. The curves themselves are
// only assembled when a nonlinear integral is needed (mu_3, LGY15 moments).
class MeshKernel {
 public:
  MeshKernel(std::span<const FuzzyNumber> assets, const MetricSpec& spec)
      : spec_(spec), family_(spec.moment_family()), count_(assets.size()) {
    const Coefficient c = spec.coefficient;
    const bool curves = family_ == MomentFamily::lgy15 || c == Coefficient::vb13 || c == Coefficient::lgy15;
    if (curves) {
      std::vector<std::span<const double>> lo, hi;
      for (const auto& a : assets) {
        lo.emplace_back(a.lower().alphas());
        hi.emplace_back(a.upper().alphas());
      }
      lower_grid_ = union_grid(lo);
      upper_grid_ = union_grid(hi);
    }

    // One row per asset: [functionals | lower curve | upper curve].
    for (const auto& a : assets) {
      const FuzzyView f = a.view();
      if (family_ == MomentFamily::vb13) {
        const double lo = f.lower.area(), hi = f.upper.area();
        push(0.5 * (lo + hi), hi - lo);
      }
      if (c == Coefficient::jkpt1)
        push(detail::point_terms(detail::sample(f.lower, spec.jkpt.alpha), detail::sample(f.upper, spec.jkpt.alpha)));
      if (c == Coefficient::jkpt2) push(detail::integral_terms(detail::halves(f.lower), detail::halves(f.upper)));
      if (&a == assets.data()) functionals_ = table_.size();
      for (const double g : lower_grid_) table_.push_back(f.lower(g));
      for (const double g : upper_grid_) table_.push_back(f.upper(g));
    }
    width_ = table_.size() / count_;
    linear_ = family_ == MomentFamily::vb13 && (c == Coefficient::jkpt1 || c == Coefficient::jkpt2);
  }

  std::vector<double> scratch() const { return std::vector<double>(width_); }

  Panel evaluate(std::span<const double> w, std::vector<double>& row) const {
    accumulate(w, row);
    const double* f = row.data();
    if (linear_) return {f[0], f[1], detail::mix_one_division({f[2], f[3], f[4], f[5], f[6], f[7]}, spec_.jkpt.v)};
    const std::span<const double> all(row);
    const FuzzyView curves{{lower_grid_, all.subspan(functionals_, lower_grid_.size())},
                           {upper_grid_, all.subspan(functionals_ + lower_grid_.size(), upper_grid_.size())}};

    Panel p;
    if (family_ == MomentFamily::vb13) {
      p.mean = f[0];
      p.dispersion = f[1];
      f += 2;
    } else if (spec_.coefficient == Coefficient::lgy15) {
      const MomentPanel m = lgy15_panel(curves);
      return {m.mean, m.dispersion, m.skewness};
    } else {
      p.mean = lgy15_mean(curves);
      p.dispersion = lgy15_variance(curves);
    }

    switch (spec_.coefficient) {
      case Coefficient::jkpt1:
      case Coefficient::jkpt2:
        p.skewness = detail::mix({f[0], f[1], f[2], f[3], f[4], f[5]}, spec_.jkpt.v);
        break;
      case Coefficient::vb13:
        p.skewness = family_ == MomentFamily::vb13 ? detail::vb13_skewness_from(curves, p.mean, p.dispersion)
                                                   : vb13_skewness(curves);
        break;
      case Coefficient::lgy15: p.skewness = lgy15_skewness(curves); break;
    }
    return p;
  }

 private:
  template <class... T>
  void push(T... v) {
    (table_.push_back(v), ...);
  }

  void push(const detail::RatioTerms& t) {
    push(t.lower_num, t.lower_den, t.upper_num, t.upper_den, t.outer_num, t.outer_den);
  }

  void accumulate(std::span<const double> w, std::vector<double>& row) const noexcept {
    rows_(w.data(), count_, table_.data(), width_, row.data());
  }

  MetricSpec spec_;
  MomentFamily family_;
  std::size_t count_;
  RowsFn rows_ = rows_for(count_);
  std::size_t functionals_ = 0;
  std::size_t width_ = 0;
  bool linear_ = false;  // mean, omega and skewness all read off the row
  std::vector<double> lower_grid_, upper_grid_;
  std::vector<double> table_;
};

Solution finish(const SimplexMesh& mesh, const std::optional<Candidate>& best,
                std::chrono::steady_clock::time_point start) {
  if (!best) throw NoFeasiblePoint(mesh.size());
  Solution sol;
  sol.weights.resize(mesh.assets());
  mesh.weights(mesh.unrank(best->rank), sol.weights);
  sol.panel = best->panel;
  sol.evaluated_points = mesh.size();
  sol.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return sol;
}

}  // namespace

Solution optimize(const PortfolioProblem& problem, int workers) {
  problem.validate();
  const auto start = std::chrono::steady_clock::now();
  const MeshKernel kernel(problem.assets, problem.metrics);
  const SimplexMesh mesh(problem.assets.size(), problem.mesh);
  const std::uint64_t total = mesh.size();

#ifdef _OPENMP
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#else
  const int threads = 1;
  (void)workers;
#endif
  std::vector<ArgmaxAccumulator> partial(static_cast<std::size_t>(threads));
  std::exception_ptr failure;

#pragma omp parallel num_threads(threads)
  {
#ifdef _OPENMP
    const auto tid = static_cast<unsigned __int128>(omp_get_thread_num());
    const auto team = static_cast<unsigned __int128>(omp_get_num_threads());
#else
    const unsigned __int128 tid = 0, team = 1;
#endif
    const auto begin = static_cast<std::uint64_t>(total * tid / team);
    const auto end = static_cast<std::uint64_t>(total * (tid + 1) / team);
    if (begin < end) {
      try {
        auto& acc = partial[static_cast<std::size_t>(tid)];
        auto scratch = kernel.scratch();
        std::vector<unsigned> k = mesh.unrank(begin);
        std::vector<double> w(k.size());
        for (std::uint64_t rank = begin; rank < end; ++rank) {
          mesh.weights(k, w);
          const Panel p = kernel.evaluate(w, scratch);
          if (is_feasible(p, problem)) acc.offer(rank, objective(p, problem.mode), p);
          SimplexMesh::advance(k);
        }
      } catch (...) {
#pragma omp critical(fuzzyskew_optimize_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);

  ArgmaxAccumulator all;
  for (const auto& p : partial) all.merge(p);
  return finish(mesh, all.pick(), start);
}

Solution optimize_serial(const PortfolioProblem& problem) {
  problem.validate();
  const auto start = std::chrono::steady_clock::now();
  const SimplexMesh mesh(problem.assets.size(), problem.mesh);

  std::vector<Candidate> feasible;
  std::vector<unsigned> k = mesh.unrank(0);
  std::vector<double> w(k.size());
  std::uint64_t rank = 0;
  do {
    mesh.weights(k, w);
    const Panel p = evaluate(w, problem.assets, problem.metrics);
    if (is_feasible(p, problem)) feasible.push_back({rank, objective(p, problem.mode), p});
    ++rank;
  } while (SimplexMesh::advance(k));

  std::optional<Candidate> best;
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& c : feasible)
    if (c.objective > top) top = c.objective;
  for (const auto& c : feasible)
    if (c.objective >= tie_floor(top)) {
      best = c;
      break;
    }
  return finish(mesh, best, start);
}

}  // namespace fuzzyskew
