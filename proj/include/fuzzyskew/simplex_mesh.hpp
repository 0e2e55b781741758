#pragma once

// Enumeration of the weight lattice {(k_1/r, ..., k_n/r) : k_i >= 0, sum k_i = r}
// in lexicographic order of (k_1, ..., k_n), with O(n) random access by rank so
// the lattice can be split into contiguous chunks across threads.

#include <cstdint>
#include <span>
#include <vector>

namespace fuzzyskew {

/// C(r + n - 1, n - 1). Throws InvalidArgument on overflow.
std::uint64_t composition_count(std::size_t parts, std::size_t total);

class SimplexMesh {
 public:
  SimplexMesh(std::size_t assets, std::size_t resolution);

  std::size_t assets() const noexcept { return assets_; }
  std::size_t resolution() const noexcept { return resolution_; }
  std::uint64_t size() const noexcept { return size_; }

  /// Composition at position `rank` (0-based) of the lexicographic order.
  std::vector<unsigned> unrank(std::uint64_t rank) const;

  /// Steps `k` to its lexicographic successor; false when `k` was the last.
  static bool advance(std::span<unsigned> k) noexcept {
    const std::size_t n = k.size();
    if (n < 2) return false;
    // Rightmost position i (excluding the last) with something to its right.
    // Everything right of i + 1 is zero already, or the scan would have
    // stopped earlier, so only k[i + 1] needs clearing.
    unsigned tail = k[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
      if (tail > 0) {
        ++k[i];
        k[i + 1] = 0;
        k[n - 1] = tail - 1;
        return true;
      }
      tail += k[i];
    }
    return false;
  }

  /// out[i] = k[i] / r.
  void weights(std::span<const unsigned> k, std::span<double> out) const noexcept {
    for (std::size_t i = 0; i < k.size(); ++i) out[i] = levels_[k[i]];
  }

  /// Every weight vector, in order. Only sensible for small meshes.
  std::vector<std::vector<double>> points() const;

 private:
  std::size_t assets_;
  std::size_t resolution_;
  std::uint64_t size_;
  std::vector<double> levels_;  // k / r for k = 0..r
};

}  // namespace fuzzyskew
