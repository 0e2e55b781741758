#include "fuzzyskew/fuzzy_number.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "fuzzyskew/error.hpp"

namespace fuzzyskew {

namespace {

double lerp_segment(double a0, double a1, double x0, double x1, double alpha) noexcept {
  const double t = (alpha - a0) / (a1 - a0);
  return x0 + t * (x1 - x0);
}

const char* name(Monotonicity d) {
  return d == Monotonicity::nondecreasing ? "nondecreasing" : "nonincreasing";
}

}  // namespace

double CurveView::operator()(double alpha) const noexcept {
  if (alpha <= alphas.front()) return xs.front();
  if (alpha >= alphas.back()) return xs.back();
  const auto it = std::upper_bound(alphas.begin(), alphas.end(), alpha);
  const auto j = static_cast<std::size_t>(it - alphas.begin());
  return lerp_segment(alphas[j - 1], alphas[j], xs[j - 1], xs[j], alpha);
}

double CurveView::integral(double a, double b) const noexcept {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < alphas.size(); ++i) {
    const double a0 = alphas[i];
    const double a1 = alphas[i + 1];
    if (a1 <= a || a0 >= b) continue;
    const double lo = std::max(a, a0);
    const double hi = std::min(b, a1);
    const double x_lo = lo == a0 ? xs[i] : lerp_segment(a0, a1, xs[i], xs[i + 1], lo);
    const double x_hi = hi == a1 ? xs[i + 1] : lerp_segment(a0, a1, xs[i], xs[i + 1], hi);
    sum += 0.5 * (x_lo + x_hi) * (hi - lo);
  }
  return sum;
}

double CurveView::area() const noexcept {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < alphas.size(); ++i) sum += 0.5 * (xs[i] + xs[i + 1]) * (alphas[i + 1] - alphas[i]);
  return sum;
}

AlphaCurve::AlphaCurve(std::vector<double> alphas, std::vector<double> xs, Monotonicity direction)
    : alphas_(std::move(alphas)), xs_(std::move(xs)), direction_(direction) {
  if (alphas_.size() != xs_.size()) throw InvalidArgument("alpha curve: alpha/x length mismatch");
  if (alphas_.size() < 2) throw InvalidArgument("alpha curve: need at least 2 breakpoints");
  if (alphas_.front() != 0.0 || alphas_.back() != 1.0)
    throw InvalidArgument("alpha curve: alpha grid must start at 0 and end at 1");
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (!std::isfinite(xs_[i])) throw InvalidArgument("alpha curve: non-finite x at breakpoint " + std::to_string(i));
    if (i == 0) continue;
    if (!(alphas_[i] > alphas_[i - 1]))
      throw InvalidArgument("alpha curve: alpha not strictly increasing at breakpoint " + std::to_string(i));
    const bool ok = direction_ == Monotonicity::nondecreasing ? xs_[i] >= xs_[i - 1] : xs_[i] <= xs_[i - 1];
    if (!ok)
      throw InvalidArgument(std::string("alpha curve: x not ") + name(direction_) + " at breakpoint " +
                            std::to_string(i));
  }
}

AlphaCurve AlphaCurve::constant(double x, Monotonicity direction) {
  return AlphaCurve({0.0, 1.0}, {x, x}, direction);
}

FuzzyNumber::FuzzyNumber(AlphaCurve lower, AlphaCurve upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.direction() != Monotonicity::nondecreasing)
    throw InvalidArgument("fuzzy number: lower curve must be nondecreasing");
  if (upper_.direction() != Monotonicity::nonincreasing)
    throw InvalidArgument("fuzzy number: upper curve must be nonincreasing");
  const std::array<std::span<const double>, 2> grids{lower_.alphas(), upper_.alphas()};
  for (const double a : union_grid(grids)) {
    if (lower_(a) > upper_(a))
      throw InvalidArgument("fuzzy number: lower > upper at alpha " + std::to_string(a) +
                            (a == 1.0 ? " (core inversion)" : ""));
  }
}

FuzzyNumber FuzzyNumber::crisp(double value) {
  return {AlphaCurve::constant(value, Monotonicity::nondecreasing),
          AlphaCurve::constant(value, Monotonicity::nonincreasing)};
}

bool FuzzyNumber::is_crisp() const noexcept {
  return lower_.xs().front() == upper_.xs().front() && lower_.xs().back() == upper_.xs().back() &&
         lower_.xs().front() == lower_.xs().back();
}

std::vector<double> union_grid(std::span<const std::span<const double>> grids) {
  std::vector<double> out;
  for (const auto g : grids) out.insert(out.end(), g.begin(), g.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FuzzyNumber make_piecewise_linear(std::span<const BreakPoint> left, std::span<const BreakPoint> right) {
  if (left.size() < 2 || right.size() < 2)
    throw InvalidArgument("piecewise fuzzy number: need at least 2 points per side");

  std::vector<double> la, lx;
  for (const auto& p : left) {
    la.push_back(p.alpha);
    lx.push_back(p.x);
  }
  std::vector<double> ra, rx;
  for (const auto& p : right) {
    ra.push_back(p.alpha);
    rx.push_back(p.x);
  }
  // Right components are commonly tabulated from the apex outwards.
  if (ra.front() > ra.back()) {
    std::reverse(ra.begin(), ra.end());
    std::reverse(rx.begin(), rx.end());
  }

  try {
    return {AlphaCurve(std::move(la), std::move(lx), Monotonicity::nondecreasing),
            AlphaCurve(std::move(ra), std::move(rx), Monotonicity::nonincreasing)};
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(std::string("piecewise fuzzy number: ") + e.what());
  }
}

Interval alpha_cut(const FuzzyNumber& f, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw InvalidArgument("alpha_cut: alpha must lie in [0, 1]");
  return {f.lower()(alpha), f.upper()(alpha)};
}

double membership(const FuzzyNumber& f, double x) noexcept {
  const Interval supp = f.support();
  if (x < supp.lo || x > supp.hi) return 0.0;
  const Interval core = f.core();
  if (core.contains(x)) return 1.0;

  if (x < core.lo) {
    // sup{alpha : lower(alpha) <= x}
    const auto& xs = f.lower().xs();
    const auto& as = f.lower().alphas();
    const auto j = static_cast<std::size_t>(std::upper_bound(xs.begin(), xs.end(), x) - xs.begin());
    return lerp_segment(xs[j - 1], xs[j], as[j - 1], as[j], x);
  }
  // sup{alpha : upper(alpha) >= x}; upper xs are nonincreasing.
  const auto& xs = f.upper().xs();
  const auto& as = f.upper().alphas();
  const auto j = static_cast<std::size_t>(
      std::upper_bound(xs.begin(), xs.end(), x, [](double v, double e) { return v > e; }) - xs.begin());
  return lerp_segment(xs[j - 1], xs[j], as[j - 1], as[j], x);
}

FuzzyNumber scale_shift(const FuzzyNumber& f, double k, double c) {
  if (k == 0.0) return FuzzyNumber::crisp(c);
  auto map = [&](const AlphaCurve& curve, Monotonicity dir) {
    std::vector<double> xs(curve.xs());
    for (auto& x : xs) x = k * x + c;
    return AlphaCurve(curve.alphas(), std::move(xs), dir);
  };
  if (k > 0.0)
    return {map(f.lower(), Monotonicity::nondecreasing), map(f.upper(), Monotonicity::nonincreasing)};
  return {map(f.upper(), Monotonicity::nondecreasing), map(f.lower(), Monotonicity::nonincreasing)};
}

FuzzyNumber combine(const FuzzyNumber& f, const FuzzyNumber& g, BinaryOp op, CombineOptions options) {
  if (op == BinaryOp::div) {
    const Interval s = g.support();
    if (s.contains(0.0)) throw InvalidArgument("combine: divisor support contains 0");
  }

  const std::array<std::span<const double>, 4> grids{f.lower().alphas(), f.upper().alphas(),
                                                     g.lower().alphas(), g.upper().alphas()};
  std::vector<double> grid = union_grid(grids);
  if ((op == BinaryOp::mul || op == BinaryOp::div) && options.min_grid >= 2) {
    std::vector<double> uniform(options.min_grid);
    for (std::size_t i = 0; i < uniform.size(); ++i)
      uniform[i] = static_cast<double>(i) / static_cast<double>(options.min_grid - 1);
    const std::array<std::span<const double>, 2> both{grid, uniform};
    grid = union_grid(both);
  }

  auto apply = [op](double a, double b) {
    switch (op) {
      case BinaryOp::add: return a + b;
      case BinaryOp::sub: return a - b;
      case BinaryOp::mul: return a * b;
      case BinaryOp::div: return a / b;
    }
    return a;
  };

  std::vector<double> lo(grid.size()), hi(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double fd = f.lower()(grid[j]), fu = f.upper()(grid[j]);
    const double gd = g.lower()(grid[j]), gu = g.upper()(grid[j]);
    const std::array<double, 4> v{apply(fd, gd), apply(fd, gu), apply(fu, gd), apply(fu, gu)};
    const auto [mn, mx] = std::minmax_element(v.begin(), v.end());
    lo[j] = *mn;
    hi[j] = *mx;
  }
  return {AlphaCurve(grid, std::move(lo), Monotonicity::nondecreasing),
          AlphaCurve(grid, std::move(hi), Monotonicity::nonincreasing)};
}

FuzzyNumber weighted_sum(std::span<const double> weights, std::span<const FuzzyNumber> assets) {
  if (assets.empty()) throw InvalidArgument("weighted_sum: empty asset list");
  if (weights.size() != assets.size()) throw InvalidArgument("weighted_sum: weight/asset count mismatch");
  for (const double w : weights)
    if (!(w >= 0.0)) throw InvalidArgument("weighted_sum: weights must be nonnegative");

  auto side = [&](auto curve_of, Monotonicity dir) {
    std::vector<std::span<const double>> grids;
    grids.reserve(assets.size());
    for (const auto& a : assets) grids.emplace_back(curve_of(a).alphas());
    std::vector<double> grid = union_grid(grids);
    std::vector<double> xs(grid.size(), 0.0);
    for (std::size_t j = 0; j < grid.size(); ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < assets.size(); ++i) s += weights[i] * curve_of(assets[i])(grid[j]);
      xs[j] = s;
    }
    return AlphaCurve(std::move(grid), std::move(xs), dir);
  };
  return {side([](const FuzzyNumber& a) -> const AlphaCurve& { return a.lower(); }, Monotonicity::nondecreasing),
          side([](const FuzzyNumber& a) -> const AlphaCurve& { return a.upper(); }, Monotonicity::nonincreasing)};
}

}  // namespace fuzzyskew
