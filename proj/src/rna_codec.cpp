#include "rnatc/rna_codec.hpp"

#include <string>

#include "rnatc/error.hpp"

namespace rnatc {

char to_char(Base b) {
  static constexpr char kSymbols[] = {'A', 'U', 'C', 'G'};
  return kSymbols[static_cast<std::uint8_t>(b)];
}

std::pair<Base, Base> encode_pixel(std::uint8_t p) {
  const std::uint8_t index = p >> 4;
  return {static_cast<Base>(index >> 2), static_cast<Base>(index & 3)};
}

std::string RnaSequence::to_string() const {
  std::string s;
  s.reserve(bases.size());
  for (Base b : bases) s.push_back(to_char(b));
  return s;
}

RnaSequence encode_image(const GrayImage& img) {
  RnaSequence seq{{}, img.width(), img.height()};
  seq.bases.reserve(2 * img.pixel_count());
  for (std::uint8_t p : img.pixels()) {
    const auto [first, second] = encode_pixel(p);
    seq.bases.push_back(first);
    seq.bases.push_back(second);
  }
  return seq;
}

std::size_t block_count(const GrayImage& img) { return img.pixel_count() / 2; }

GrayImage permute_blocks(const GrayImage& img, const BlockPermutation& perm) {
  const std::size_t blocks = block_count(img);
  if (perm.size() != blocks) {
    throw DimensionError("permutation covers " + std::to_string(perm.size()) + " blocks, image has " +
                         std::to_string(blocks));
  }
  GrayImage out = img;  // keeps an odd trailing pixel in place
  const auto src = img.pixels();
  auto dst = out.pixels();
  for (std::size_t i = 0; i < blocks; ++i) {
    const std::size_t to = perm[i];
    dst[2 * to] = src[2 * i];
    dst[2 * to + 1] = src[2 * i + 1];
  }
  return out;
}

RnaSequence permute_sequence_blocks(const RnaSequence& seq, const BlockPermutation& perm) {
  constexpr std::size_t kBasesPerBlock = 4;
  const std::size_t blocks = seq.bases.size() / kBasesPerBlock;
  if (perm.size() != blocks) throw DimensionError("permutation does not match sequence block count");
  RnaSequence out = seq;
  for (std::size_t i = 0; i < blocks; ++i) {
    for (std::size_t k = 0; k < kBasesPerBlock; ++k) {
      out.bases[perm[i] * kBasesPerBlock + k] = seq.bases[i * kBasesPerBlock + k];
    }
  }
  return out;
}

}  // namespace rnatc
