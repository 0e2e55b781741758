#include "fuzzyskew/metrics.hpp"

#include <sstream>

#include "fuzzyskew/error.hpp"

namespace fuzzyskew {

std::string_view to_string(Coefficient c) noexcept {
  switch (c) {
    case Coefficient::jkpt1: return "jkpt1";
    case Coefficient::jkpt2: return "jkpt2";
    case Coefficient::vb13: return "vb13";
    case Coefficient::lgy15: return "lgy15";
  }
  return "?";
}

Coefficient parse_coefficient(std::string_view name) {
  for (const auto c : {Coefficient::jkpt1, Coefficient::jkpt2, Coefficient::vb13, Coefficient::lgy15})
    if (to_string(c) == name) return c;
  throw InvalidArgument("unknown coefficient '" + std::string(name) + "'");
}

void MetricSpec::validate() const {
  if (coefficient == Coefficient::jkpt1) jkpt.validate();
  if (coefficient == Coefficient::jkpt2 && !(jkpt.v >= 0.0 && jkpt.v <= 1.0))
    throw InvalidArgument("mixing weight v must lie in [0, 1]");
}

std::string MetricSpec::label() const {
  std::ostringstream os;
  os << to_string(coefficient);
  if (coefficient == Coefficient::jkpt1) os << '(' << jkpt.alpha << ',' << jkpt.v << ')';
  if (coefficient == Coefficient::jkpt2) os << '(' << jkpt.v << ')';
  return os.str();
}

double skewness(FuzzyView f, const MetricSpec& spec) {
  switch (spec.coefficient) {
    case Coefficient::jkpt1: return jkpt1(f, spec.jkpt);
    case Coefficient::jkpt2: return jkpt2(f, spec.jkpt.v);
    case Coefficient::vb13: return vb13_skewness(f);
    case Coefficient::lgy15: return lgy15_skewness(f);
  }
  return 0.0;
}

Panel evaluate_panel(FuzzyView f, const MetricSpec& spec) {
  const MomentFamily family = spec.moment_family();

  // The native pairings share their mean with the skewness computation.
  if (spec.coefficient == Coefficient::vb13 && family == MomentFamily::vb13) {
    const MomentPanel p = vb13_panel(f);
    return {p.mean, p.dispersion, p.skewness};
  }
  if (spec.coefficient == Coefficient::lgy15 && family == MomentFamily::lgy15) {
    const MomentPanel p = lgy15_panel(f);
    return {p.mean, p.dispersion, p.skewness};
  }

  Panel out;
  if (family == MomentFamily::vb13) {
    const double lo = f.lower.area();
    const double hi = f.upper.area();
    out.mean = 0.5 * (lo + hi);
    out.dispersion = hi - lo;
  } else {
    out.mean = lgy15_mean(f);
    out.dispersion = lgy15_variance(f);
  }
  out.skewness = skewness(f, spec);
  return out;
}

}  // namespace fuzzyskew
