#pragma once

#include <array>
#include <cstddef>

#include "fuzzyskew/fuzzy_number.hpp"

namespace fuzzyskew {

/// Integrates g(alpha, x(alpha)) over [0, 1] with 3-node Gauss-Legendre on
/// every linear segment of `curve`. Exact when g is a polynomial of total
/// degree <= 5 in (alpha, x), which covers every moment integrand used here.
template <class Integrand>
double integrate_segments(CurveView curve, Integrand&& g) {
  // Nodes on [0, 1] and matching weights (sum to 1).
  static constexpr std::array<double, 3> node{0.11270166537925831148, 0.5, 0.88729833462074168852};
  static constexpr std::array<double, 3> weight{5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < curve.alphas.size(); ++i) {
    const double a0 = curve.alphas[i];
    const double da = curve.alphas[i + 1] - a0;
    const double x0 = curve.xs[i];
    const double dx = curve.xs[i + 1] - x0;
    double seg = 0.0;
    for (std::size_t k = 0; k < 3; ++k) seg += weight[k] * g(a0 + node[k] * da, x0 + node[k] * dx);
    total += seg * da;
  }
  return total;
}

}  // namespace fuzzyskew
