#pragma once

// Level-set representation of fuzzy numbers.
//
// A fuzzy number is stored as the pair of its alpha-cut endpoint functions
// (lower: alpha -> xi_d(alpha), upper: alpha -> xi_u(alpha)), each piecewise
// linear in alpha through a set of breakpoints with alpha running from 0 to 1.
// Membership, alpha-cuts and arithmetic are all defined on that pair.

#include <cstddef>
#include <span>
#include <vector>

namespace fuzzyskew {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const noexcept { return hi - lo; }
  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
  bool contains(const Interval& other) const noexcept { return lo <= other.lo && other.hi <= hi; }
};

enum class Monotonicity { nondecreasing, nonincreasing };

/// Non-owning view of a piecewise-linear map alpha -> x. The alpha grid is
/// strictly increasing from 0 to 1; nothing is validated here.
struct CurveView {
  std::span<const double> alphas;
  std::span<const double> xs;

  double operator()(double alpha) const noexcept;

  /// Exact integral over [a, b] (0 <= a <= b <= 1).
  double integral(double a, double b) const noexcept;

  /// integral(0, 1) without the clipping.
  double area() const noexcept;

  double front() const noexcept { return xs.front(); }
  double back() const noexcept { return xs.back(); }
};

/// Owning, validated piecewise-linear alpha curve.
class AlphaCurve {
 public:
  /// Throws InvalidArgument unless alphas run strictly increasing from 0 to 1
  /// and xs are weakly monotone in `direction`.
  AlphaCurve(std::vector<double> alphas, std::vector<double> xs, Monotonicity direction);

  static AlphaCurve constant(double x, Monotonicity direction);

  double operator()(double alpha) const noexcept { return view()(alpha); }

  CurveView view() const noexcept { return {alphas_, xs_}; }
  const std::vector<double>& alphas() const noexcept { return alphas_; }
  const std::vector<double>& xs() const noexcept { return xs_; }
  Monotonicity direction() const noexcept { return direction_; }
  std::size_t size() const noexcept { return xs_.size(); }

 private:
  std::vector<double> alphas_;
  std::vector<double> xs_;
  Monotonicity direction_;
};

/// Lower (nondecreasing) and upper (nonincreasing) curves as views. Every
/// coefficient in the library is computed on this type, so temporaries built
/// in a hot loop never need to be wrapped in a FuzzyNumber.
struct FuzzyView {
  CurveView lower;
  CurveView upper;
};

class FuzzyNumber {
 public:
  /// Throws InvalidArgument if directions are wrong or lower(alpha) > upper(alpha)
  /// anywhere on the union of both grids.
  FuzzyNumber(AlphaCurve lower, AlphaCurve upper);

  static FuzzyNumber crisp(double value);

  const AlphaCurve& lower() const noexcept { return lower_; }
  const AlphaCurve& upper() const noexcept { return upper_; }

  FuzzyView view() const noexcept { return {lower_.view(), upper_.view()}; }
  operator FuzzyView() const noexcept { return view(); }  // NOLINT(google-explicit-constructor)

  Interval support() const noexcept { return {lower_.xs().front(), upper_.xs().front()}; }
  Interval core() const noexcept { return {lower_.xs().back(), upper_.xs().back()}; }
  bool is_crisp() const noexcept;

 private:
  AlphaCurve lower_;
  AlphaCurve upper_;
};

/// A membership-function transition point, written (x, alpha) as in the usual
/// tabulations of piecewise-linear fuzzy numbers.
struct BreakPoint {
  double x = 0.0;
  double alpha = 0.0;
};

/// Builds a fuzzy number from its left and right component transition points.
/// The left side must be listed with alpha increasing 0 -> 1; the right side
/// may be listed in either alpha order.
FuzzyNumber make_piecewise_linear(std::span<const BreakPoint> left, std::span<const BreakPoint> right);

Interval alpha_cut(const FuzzyNumber& f, double alpha);

/// Upper-semicontinuous membership value. On flat stretches of a side the
/// supremum of the alphas reaching x is returned.
double membership(const FuzzyNumber& f, double x) noexcept;

/// x -> k*x + c applied to every cut. k < 0 swaps the sides; k == 0 gives crisp(c).
FuzzyNumber scale_shift(const FuzzyNumber& f, double k, double c);

enum class BinaryOp { add, sub, mul, div };

struct CombineOptions {
  /// Uniform nodes added to the working grid for mul/div, whose cut endpoints
  /// are not linear between operand breakpoints.
  std::size_t min_grid = 257;
};

FuzzyNumber combine(const FuzzyNumber& f, const FuzzyNumber& g, BinaryOp op, CombineOptions options = {});

/// Exact on the union grid: cut endpoints are the weighted sums of the
/// operands' endpoints. Weights must be nonnegative.
FuzzyNumber weighted_sum(std::span<const double> weights, std::span<const FuzzyNumber> assets);

/// Sorted union of alpha grids with exact duplicates removed.
std::vector<double> union_grid(std::span<const std::span<const double>> grids);

}  // namespace fuzzyskew
