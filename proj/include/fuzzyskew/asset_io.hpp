#pragma once

// JSON asset documents.
//
//   {"assets": [
//     {"name": "a", "type": "piecewise", "left": [[x, alpha], ...], "right": [[x, alpha], ...]},
//     {"type": "quantile", "grid": 1001,
//      "left":  {"family": "beta", "shape1": 0.5, "shape2": 2, "support": [100, 102]},
//      "right": {"family": "uniform", "support": [102, 110]}},
//     {"type": "compact", "x": [2, 2.5, 4, 4.25, 10], "alpha": [0, 0.25, 1, 0.75, 0]}
//   ]}
//
// A bare top-level array of entries is accepted too. Errors carry a JSON
// pointer to the offending field, or line:column for syntax errors.

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzyskew/fuzzy_number.hpp"

namespace fuzzyskew {

struct NamedFuzzyNumber {
  std::string name;
  FuzzyNumber number;
};

std::vector<NamedFuzzyNumber> parse_assets(std::string_view text);
std::vector<NamedFuzzyNumber> load_assets(const std::filesystem::path& path);

/// Zips the compact (x, alpha) notation, e.g. alpha = (0, .25, 1, .75, 0),
/// into left/right components split at the alpha = 1 apex.
FuzzyNumber from_compact(std::span<const double> x, std::span<const double> alpha);

/// Serializes as explicit piecewise entries; doubles are written with
/// round-trip precision, so re-reading reproduces every breakpoint exactly.
std::string write_assets(std::span<const NamedFuzzyNumber> assets);

}  // namespace fuzzyskew
