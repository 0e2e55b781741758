#include "fuzzyskew/distributions.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "fuzzyskew/error.hpp"

namespace fuzzyskew {

namespace {

constexpr double kProbabilityTolerance = 1e-12;

double log_beta(double a, double b) { return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b); }

// Continued fraction for I_x(a,b), modified Lentz. Converges fast for
// x < (a + 1) / (a + b + 2).
double beta_continued_fraction(double x, double a, double b) {
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-16;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 10000; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < eps) break;
  }
  return h;
}

}  // namespace

void QuantileSpec::validate() const {
  if (family == Family::beta && !(shape1 > 0.0 && shape2 > 0.0))
    throw InvalidArgument("quantile spec: beta shape parameters must be positive");
  if (!(support.lo < support.hi)) throw InvalidArgument("quantile spec: support must satisfy lo < hi");
  if (!std::isfinite(support.lo) || !std::isfinite(support.hi))
    throw InvalidArgument("quantile spec: support must be finite");
}

double beta_cdf(double x, double a, double b) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front = a * std::log(x) + b * std::log1p(-x) - log_beta(a, b);
  if (x < (a + 1.0) / (a + b + 2.0)) return std::exp(log_front) * beta_continued_fraction(x, a, b) / a;
  return 1.0 - std::exp(log_front) * beta_continued_fraction(1.0 - x, b, a) / b;
}

double beta_pdf(double x, double a, double b) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return std::exp((a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) - log_beta(a, b));
}

double beta_quantile(double p, double a, double b) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("beta_quantile: p must lie in [0, 1]");
  if (p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;

  // Leading-order tail approximations I_x ~ x^a / (a B) and 1 - I_x ~ (1-x)^b / (b B).
  const double lb = log_beta(a, b);
  double x = p < 0.5 ? std::exp((std::log(p * a) + lb) / a) : 1.0 - std::exp((std::log((1.0 - p) * b) + lb) / b);
  if (!(x > 0.0 && x < 1.0)) x = 0.5;

  // Iterate to machine resolution in x rather than stopping at the p-space
  // tolerance: where the density vanishes, |F - p| <= 1e-12 alone would leave
  // x loose by ~1e-6.
  double lo = 0.0;
  double hi = 1.0;
  for (int iter = 0; iter < 400; ++iter) {
    const double f = beta_cdf(x, a, b) - p;
    if (f == 0.0) return x;
    if (f < 0.0)
      lo = x;
    else
      hi = x;
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) return x;

    const double slope = beta_pdf(x, a, b);
    double next = slope > 0.0 ? x - f / slope : lo;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::fabs(next - x) <= 2.0 * std::numeric_limits<double>::epsilon() * x && std::fabs(f) <= kProbabilityTolerance)
      return next;
    x = next;
  }
  return x;
}

double cdf(const QuantileSpec& spec, double x) {
  const double t = (x - spec.support.lo) / spec.support.width();
  if (spec.family == Family::uniform) return t <= 0.0 ? 0.0 : (t >= 1.0 ? 1.0 : t);
  return beta_cdf(t, spec.shape1, spec.shape2);
}

double quantile(const QuantileSpec& spec, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("quantile: p must lie in [0, 1]");
  // Endpoints are pinned so steep tails never go through the inversion.
  if (p == 0.0) return spec.support.lo;
  if (p == 1.0) return spec.support.hi;
  const double unit = spec.family == Family::uniform ? p : beta_quantile(p, spec.shape1, spec.shape2);
  return spec.support.lo + spec.support.width() * unit;
}

FuzzyNumber fuzzy_from_quantiles(const QuantileSpec& left, const QuantileSpec& right, std::size_t grid_size) {
  left.validate();
  right.validate();
  if (grid_size < 2) throw InvalidArgument("fuzzy_from_quantiles: grid_size must be at least 2");
  if (left.support.hi > right.support.lo)
    throw InvalidArgument("fuzzy_from_quantiles: left support must end before right support begins");

  std::vector<double> alphas(grid_size), lower(grid_size), upper(grid_size);
  const double last = static_cast<double>(grid_size - 1);
  for (std::size_t i = 0; i < grid_size; ++i) {
    const double a = i + 1 == grid_size ? 1.0 : static_cast<double>(i) / last;
    alphas[i] = a;
    lower[i] = quantile(left, a);
    upper[i] = quantile(right, 1.0 - a);
  }
  return {AlphaCurve(alphas, std::move(lower), Monotonicity::nondecreasing),
          AlphaCurve(std::move(alphas), std::move(upper), Monotonicity::nonincreasing)};
}

}  // namespace fuzzyskew
