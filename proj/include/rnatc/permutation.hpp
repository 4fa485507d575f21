#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rnatc {

/// Bijection over 0..size()-1. mapping[i] is the destination of element i.
class BlockPermutation {
 public:
  /// Throws DimensionError if mapping is not a permutation.
  explicit BlockPermutation(std::vector<std::size_t> mapping);

  static BlockPermutation identity(std::size_t n);

  std::size_t size() const { return mapping_.size(); }
  std::size_t operator[](std::size_t i) const { return mapping_[i]; }
  std::span<const std::size_t> mapping() const { return mapping_; }

  bool operator==(const BlockPermutation&) const = default;

 private:
  std::vector<std::size_t> mapping_;
};

bool is_permutation_of_range(std::span<const std::size_t> values);

/// inverse[perm[i]] == i.
BlockPermutation invert_permutation(const BlockPermutation& perm);

}  // namespace rnatc
