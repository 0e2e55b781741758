#include "fuzzyskew/moments.hpp"

#include "detail.hpp"
#include "fuzzyskew/error.hpp"
#include "fuzzyskew/quadrature.hpp"

namespace fuzzyskew {

double possibilistic_mean(FuzzyView f) noexcept { return 0.5 * (f.lower.area() + f.upper.area()); }

double vb13_omega(FuzzyView f) noexcept { return f.upper.area() - f.lower.area(); }

namespace detail {

double third_moment_about(FuzzyView f, double e) noexcept {
  auto cube = [e](double, double x) {
    const double d = x - e;
    return d * d * d;
  };
  return 0.5 * integrate_segments(f.lower, cube) + 0.5 * integrate_segments(f.upper, cube);
}

double vb13_skewness_from(FuzzyView f, double mean, double omega) {
  if (!(omega > 0.0)) throw DegenerateInput("VB13 skewness is undefined for zero downside risk (crisp input)");
  return third_moment_about(f, mean) / (omega * omega * omega);
}

}  // namespace detail

using detail::third_moment_about;

double vb13_third_moment(FuzzyView f) noexcept { return third_moment_about(f, possibilistic_mean(f)); }

double vb13_skewness(FuzzyView f) { return vb13_panel(f).skewness; }

MomentPanel vb13_panel(FuzzyView f) {
  const double lo = f.lower.area();
  const double hi = f.upper.area();
  const double mean = 0.5 * (lo + hi);
  const double omega = hi - lo;
  return {mean, omega, detail::vb13_skewness_from(f, mean, omega), MomentFamily::vb13};
}

double lgy15_mean(FuzzyView f) noexcept {
  auto g = [](double a, double x) { return a * x; };
  return integrate_segments(f.lower, g) + integrate_segments(f.upper, g);
}

namespace {

double lgy15_variance_about(FuzzyView f, double e) noexcept {
  auto g = [e](double a, double x) { return a * (x - e) * (x - e); };
  return integrate_segments(f.lower, g) + integrate_segments(f.upper, g);
}

double lgy15_skewness_about(FuzzyView f, double e) noexcept {
  auto g = [e](double a, double x) {
    const double d = x - e;
    return a * d * d * d;
  };
  return integrate_segments(f.lower, g) + integrate_segments(f.upper, g);
}

}  // namespace

double lgy15_variance(FuzzyView f) noexcept { return lgy15_variance_about(f, lgy15_mean(f)); }

double lgy15_skewness(FuzzyView f) noexcept { return lgy15_skewness_about(f, lgy15_mean(f)); }

MomentPanel lgy15_panel(FuzzyView f) noexcept {
  const double e = lgy15_mean(f);
  return {e, lgy15_variance_about(f, e), lgy15_skewness_about(f, e), MomentFamily::lgy15};
}

}  // namespace fuzzyskew
