#pragma once

// Two-base RNA view of an image and the block permutation that scrambles it.
//
// Each pixel maps to two bases from its high nibble (digit map 0->A, 1->U,
// 2->C, 3->G). A block is four bases, i.e. two row-major adjacent pixels.
// The shuffle is carried out on pixel pairs; the RNA string is a derived view.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rnatc/image.hpp"
#include "rnatc/permutation.hpp"

namespace rnatc {

enum class Base : std::uint8_t { A = 0, U = 1, C = 2, G = 3 };

char to_char(Base b);

std::pair<Base, Base> encode_pixel(std::uint8_t p);

struct RnaSequence {
  std::vector<Base> bases;
  std::size_t width = 0;
  std::size_t height = 0;

  /// "GGGC..." style ASCII rendering.
  std::string to_string() const;
  bool operator==(const RnaSequence&) const = default;
};

RnaSequence encode_image(const GrayImage& img);

/// Number of two-pixel blocks; an odd trailing pixel is not part of any block.
std::size_t block_count(const GrayImage& img);

/// Output block perm[i] receives input block i. Throws DimensionError if
/// perm.size() != block_count(img).
GrayImage permute_blocks(const GrayImage& img, const BlockPermutation& perm);

/// Same shuffle applied directly to the base sequence (4 bases per block).
RnaSequence permute_sequence_blocks(const RnaSequence& seq, const BlockPermutation& perm);

}  // namespace rnatc
