#include "fuzzyskew/jkpt.hpp"

#include <algorithm>

#include "detail.hpp"
#include "fuzzyskew/error.hpp"

namespace fuzzyskew {

using detail::ratio_or_zero;

namespace {

void check_point_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 0.5)) throw InvalidArgument("quantile level alpha must lie in (0, 0.5]");
}

void check_v(double v) {
  if (!(v >= 0.0 && v <= 1.0)) throw InvalidArgument("mixing weight v must lie in [0, 1]");
}

}  // namespace

namespace detail {

// Each search starts where the previous one ended; the segment choice matches
// CurveView::operator(), so the values are identical.
CurveSamples sample(CurveView c, double a) noexcept {
  const double at[3] = {a, 0.5, 1.0 - a};
  double out[3];
  auto it = c.alphas.begin();
  for (int k = 0; k < 3; ++k) {
    it = std::upper_bound(it, c.alphas.end(), at[k]);
    if (it == c.alphas.end()) {
      out[k] = c.xs.back();
      continue;
    }
    const auto j = static_cast<std::size_t>(it - c.alphas.begin());
    const double t = (at[k] - c.alphas[j - 1]) / (c.alphas[j] - c.alphas[j - 1]);
    out[k] = c.xs[j - 1] + t * (c.xs[j] - c.xs[j - 1]);
  }
  return {out[0], out[1], out[2], c.xs.back()};
}

RatioTerms point_terms(const CurveSamples& d, const CurveSamples& u) noexcept {
  return {d.at_1ma + d.at_a - 2.0 * d.at_half, d.at_1ma - d.at_a,
          u.at_a + u.at_1ma - 2.0 * u.at_half, u.at_a - u.at_1ma,
          (d.at_a - d.at_one) + (u.at_a - u.at_one), u.at_a - d.at_a};
}

// Integrating x - xi(1) instead of x keeps the half-range differences below
// accurate when the support sits far from zero.
CurveHalves halves(CurveView c) noexcept {
  const double ref = c.back();
  double first = 0.0, second = 0.0;
  for (std::size_t i = 0; i + 1 < c.alphas.size(); ++i) {
    const double a0 = c.alphas[i], a1 = c.alphas[i + 1];
    const double x0 = c.xs[i] - ref, x1 = c.xs[i + 1] - ref;
    if (a1 <= 0.5) {
      first += 0.5 * (x0 + x1) * (a1 - a0);
    } else if (a0 >= 0.5) {
      second += 0.5 * (x0 + x1) * (a1 - a0);
    } else {
      const double xm = x0 + (0.5 - a0) / (a1 - a0) * (x1 - x0);
      first += 0.5 * (x0 + xm) * (0.5 - a0);
      second += 0.5 * (xm + x1) * (a1 - 0.5);
    }
  }
  return {first, second, c(0.5) - ref, ref};
}

// The reflected integrand xi(1 - alpha) over [0, 1/2] is the integral of xi
// over [1/2, 1], so every integral form reduces to half-range integrals.
// The xi(1) offsets cancel everywhere except in the outer denominator.
RatioTerms integral_terms(const CurveHalves& d, const CurveHalves& u) noexcept {
  return {d.first + d.second - d.at_half, d.second - d.first,
          u.first + u.second - u.at_half, u.first - u.second,
          d.first + u.first, u.first - d.first + 0.5 * (u.at_one - d.at_one)};
}

}  // namespace detail

void JkptConfig::validate() const {
  check_point_alpha(alpha);
  check_v(v);
}

double gm1_lower(FuzzyView f, double alpha) {
  check_point_alpha(alpha);
  const double lo = f.lower(alpha);
  const double hi = f.lower(1.0 - alpha);
  return ratio_or_zero(hi + lo - 2.0 * f.lower(0.5), hi - lo);
}

double gm1_upper(FuzzyView f, double alpha) {
  check_point_alpha(alpha);
  const double hi = f.upper(alpha);
  const double lo = f.upper(1.0 - alpha);
  return ratio_or_zero(hi + lo - 2.0 * f.upper(0.5), hi - lo);
}

double inner_point(FuzzyView f, double alpha) { return 0.5 * (gm1_lower(f, alpha) + gm1_upper(f, alpha)); }

double outer_point(FuzzyView f, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("outer_point: alpha must lie in (0, 1)");
  const double d = f.lower(alpha);
  const double u = f.upper(alpha);
  return ratio_or_zero((d - f.lower.back()) + (u - f.upper.back()), u - d);
}

double jkpt1(FuzzyView f, const JkptConfig& cfg) {
  cfg.validate();
  return detail::mix(detail::point_terms(detail::sample(f.lower, cfg.alpha), detail::sample(f.upper, cfg.alpha)),
                     cfg.v);
}

double gm2_lower(FuzzyView f) noexcept {
  const auto h = detail::halves(f.lower);
  return ratio_or_zero(h.first + h.second - h.at_half, h.second - h.first);
}

double gm2_upper(FuzzyView f) noexcept {
  const auto h = detail::halves(f.upper);
  return ratio_or_zero(h.first + h.second - h.at_half, h.first - h.second);
}

double inner_integral(FuzzyView f) noexcept { return 0.5 * (gm2_lower(f) + gm2_upper(f)); }

double outer_integral(FuzzyView f) noexcept {
  const auto t = detail::integral_terms(detail::halves(f.lower), detail::halves(f.upper));
  return ratio_or_zero(t.outer_num, t.outer_den);
}

double jkpt2(FuzzyView f, double v) {
  check_v(v);
  return detail::mix(detail::integral_terms(detail::halves(f.lower), detail::halves(f.upper)), v);
}

}  // namespace fuzzyskew
