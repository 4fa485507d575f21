#include "rnatc/permutation.hpp"

#include <numeric>

#include "rnatc/error.hpp"

namespace rnatc {

bool is_permutation_of_range(std::span<const std::size_t> values) {
  std::vector<bool> seen(values.size(), false);
  for (std::size_t v : values) {
    if (v >= values.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

BlockPermutation::BlockPermutation(std::vector<std::size_t> mapping) : mapping_(std::move(mapping)) {
  if (!is_permutation_of_range(mapping_)) {
    throw DimensionError("block mapping is not a permutation");
  }
}

BlockPermutation BlockPermutation::identity(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  return BlockPermutation(std::move(m));
}

BlockPermutation invert_permutation(const BlockPermutation& perm) {
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
  return BlockPermutation(std::move(inv));
}

}  // namespace rnatc
