#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "fuzzyskew/fuzzy_number.hpp"
#include "fuzzyskew/jkpt.hpp"
#include "fuzzyskew/moments.hpp"

namespace fuzzyskew {

enum class Coefficient { jkpt1, jkpt2, vb13, lgy15 };

std::string_view to_string(Coefficient c) noexcept;
/// Accepts "jkpt1", "jkpt2", "vb13", "lgy15". Throws InvalidArgument otherwise.
Coefficient parse_coefficient(std::string_view name);

/// Which skewness coefficient to use, and which (mean, dispersion) pair
/// accompanies it. By default JKPT and VB13 use the possibilistic mean with
/// omega; LGY15 uses its own mean and variance.
struct MetricSpec {
  Coefficient coefficient = Coefficient::jkpt1;
  JkptConfig jkpt{};
  std::optional<MomentFamily> moments{};

  MomentFamily moment_family() const noexcept {
    if (moments) return *moments;
    return coefficient == Coefficient::lgy15 ? MomentFamily::lgy15 : MomentFamily::vb13;
  }

  void validate() const;
  /// e.g. "jkpt1(0.25,0.5)", "vb13".
  std::string label() const;
};

struct Panel {
  double mean = 0.0;
  double dispersion = 0.0;
  double skewness = 0.0;
};

double skewness(FuzzyView f, const MetricSpec& spec);

/// (mean, dispersion, skewness) for one fuzzy number.
Panel evaluate_panel(FuzzyView f, const MetricSpec& spec);

}  // namespace fuzzyskew
