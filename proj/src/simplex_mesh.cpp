#include "fuzzyskew/simplex_mesh.hpp"

#include <limits>

#include "fuzzyskew/error.hpp"

namespace fuzzyskew {

std::uint64_t composition_count(std::size_t parts, std::size_t total) {
  if (parts == 0) return total == 0 ? 1 : 0;
  // C(total + parts - 1, parts - 1), built as a running product that stays integral.
  unsigned __int128 c = 1;
  for (std::size_t i = 1; i < parts; ++i) {
    c = c * (total + i) / i;
    if (c > std::numeric_limits<std::uint64_t>::max()) throw InvalidArgument("simplex mesh: point count overflows");
  }
  return static_cast<std::uint64_t>(c);
}

SimplexMesh::SimplexMesh(std::size_t assets, std::size_t resolution)
    : assets_(assets), resolution_(resolution), size_(0) {
  if (assets == 0) throw InvalidArgument("simplex mesh: need at least one asset");
  if (resolution == 0) throw InvalidArgument("simplex mesh: resolution must be at least 1");
  size_ = composition_count(assets, resolution);
  levels_.resize(resolution + 1);
  for (std::size_t k = 0; k <= resolution; ++k) levels_[k] = static_cast<double>(k) / static_cast<double>(resolution);
}

std::vector<unsigned> SimplexMesh::unrank(std::uint64_t rank) const {
  if (rank >= size_) throw InvalidArgument("simplex mesh: rank out of range");
  std::vector<unsigned> k(assets_, 0);
  std::size_t remaining = resolution_;
  for (std::size_t i = 0; i + 1 < assets_; ++i) {
    // Compositions with k_i = v: the remaining parts share (remaining - v).
    unsigned v = 0;
    for (;; ++v) {
      const std::uint64_t block = composition_count(assets_ - i - 1, remaining - v);
      if (rank < block) break;
      rank -= block;
    }
    k[i] = v;
    remaining -= v;
  }
  k[assets_ - 1] = static_cast<unsigned>(remaining);
  return k;
}

std::vector<std::vector<double>> SimplexMesh::points() const {
  std::vector<std::vector<double>> out;
  out.reserve(size_);
  std::vector<unsigned> k = unrank(0);
  std::vector<double> w(assets_);
  do {
    weights(k, w);
    out.push_back(w);
  } while (advance(k));
  return out;
}

}  // namespace fuzzyskew
