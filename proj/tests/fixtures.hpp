#pragma once

// Worked-example inputs shared by the unit and acceptance tests.

#include <vector>

#include "fuzzyskew/asset_io.hpp"
#include "fuzzyskew/distributions.hpp"
#include "fuzzyskew/fuzzy_number.hpp"

namespace fixtures {

using fuzzyskew::BreakPoint;
using fuzzyskew::Family;
using fuzzyskew::FuzzyNumber;
using fuzzyskew::QuantileSpec;

inline const std::vector<BreakPoint> kExample1Left{{0.1, 0.0}, {0.3, 0.1},  {0.4, 0.2}, {0.6, 0.25}, {0.8, 0.4},
                                                   {1.4, 0.5}, {1.6, 0.7}, {2.5, 0.85}, {2.8, 0.9}, {3.0, 1.0}};
inline const std::vector<BreakPoint> kExample1Right{{7.6, 0.0}, {7.2, 0.1}, {7.1, 0.2},  {6.3, 0.25}, {6.0, 0.4},
                                                    {5.1, 0.5}, {4.8, 0.6}, {3.7, 0.75}, {3.4, 0.9}, {3.0, 1.0}};

inline FuzzyNumber example1() { return fuzzyskew::make_piecewise_linear(kExample1Left, kExample1Right); }

inline const QuantileSpec kExample2Left{Family::beta, 0.5, 2.0, {100.0, 102.0}};
inline const QuantileSpec kExample2Right{Family::beta, 0.5, 2.0, {102.0, 110.0}};
inline const QuantileSpec kExample3Left{Family::beta, 0.5, 2.0, {100000.0, 100001.0}};
inline const QuantileSpec kExample3Right{Family::beta, 0.1, 2.0, {100001.0, 110000.0}};

inline FuzzyNumber example2() { return fuzzyskew::fuzzy_from_quantiles(kExample2Left, kExample2Right, 1001); }
inline FuzzyNumber example3() { return fuzzyskew::fuzzy_from_quantiles(kExample3Left, kExample3Right, 1001); }

/// Support [l, r], single-point core m.
inline FuzzyNumber triangular(double l, double m, double r) {
  const std::vector<BreakPoint> left{{l, 0.0}, {m, 1.0}};
  const std::vector<BreakPoint> right{{r, 0.0}, {m, 1.0}};
  return fuzzyskew::make_piecewise_linear(left, right);
}

// Portfolio assets: alpha pattern (0, 0.25, 1, 0.75, 0) against five x values.
inline const std::vector<double> kCompactAlpha{0.0, 0.25, 1.0, 0.75, 0.0};

inline std::vector<FuzzyNumber> portfolio(const std::vector<std::vector<double>>& xs) {
  std::vector<FuzzyNumber> out;
  for (const auto& x : xs) out.push_back(fuzzyskew::from_compact(x, kCompactAlpha));
  return out;
}

inline std::vector<FuzzyNumber> portfolio1() {
  return portfolio({{2, 2.5, 4, 4.25, 10}, {102, 102.5, 104, 104.25, 110}, {200, 225, 400, 425, 1000}});
}

inline std::vector<FuzzyNumber> portfolio2() {
  return portfolio({{2, 2.5, 5, 5.25, 10}, {102, 102.5, 105, 105.25, 110}, {200, 225, 500, 525, 1000}});
}

}  // namespace fixtures
