#pragma once

// Transformative substitution: each pixel is replaced by an s-box value that
// has first been combined with the pixel through one of three operations,
// chosen per position by the k1 trit.

#include <cstddef>
#include <cstdint>

#include "rnatc/chaos_keys.hpp"
#include "rnatc/image.hpp"
#include "rnatc/sbox.hpp"

namespace rnatc {

enum class OpId : std::uint8_t { O1 = 0, O2 = 1, O3 = 2 };

enum class SubstitutionMode {
  // Printed operations verbatim; s is the s-box image of the pixel itself.
  // Not decryptable (O2 and O3 are not injective in p).
  PaperExact,
  // O1 with a position mask, O2/O3 replaced by XOR against a transformed
  // mask byte. Decryptable.
  Invertible,
};

struct SubstitutionConfig {
  int shift = 3;  // n in O2, 1..7
  SubstitutionMode mode = SubstitutionMode::PaperExact;

  void validate() const;
};

/// (p + s + k2) mod 256
constexpr std::uint8_t op1(std::uint8_t p, std::uint8_t s, std::uint8_t k2) {
  return static_cast<std::uint8_t>(p + s + k2);
}

/// (s >> n) xor (p << (8 - n)), truncated to 8 bits.
constexpr std::uint8_t op2(std::uint8_t p, std::uint8_t s, int n) {
  return static_cast<std::uint8_t>((s >> n) ^ (p << (8 - n)));
}

/// (hi(p) || lo(s)) xor (lo(p) || hi(s)). The low nibble of the result
/// depends on s only.
constexpr std::uint8_t op3(std::uint8_t p, std::uint8_t s) {
  const std::uint8_t term1 = static_cast<std::uint8_t>((p & 0xF0) | (s & 0x0F));
  const std::uint8_t term2 = static_cast<std::uint8_t>(((p & 0x0F) << 4) | (s >> 4));
  return term1 ^ term2;
}

constexpr std::uint8_t rotate_right(std::uint8_t v, int n) {
  n &= 7;
  return static_cast<std::uint8_t>((v >> n) | (v << ((8 - n) & 7)));
}

constexpr std::uint8_t nibble_swap(std::uint8_t v) {
  return static_cast<std::uint8_t>((v << 4) | (v >> 4));
}

/// Throws std::out_of_range for indices outside k1.
OpId select_operation(const TritMatrix& k1, std::size_t row, std::size_t col);

/// m_ij = (row * width + col + k2) mod 256, the s-box index used in invertible mode.
std::uint8_t position_mask(std::size_t row, std::size_t col, std::size_t width, std::uint8_t k2);

/// Throws DimensionError if k1 does not match the image.
GrayImage substitute_image(const GrayImage& img, const KeySet& keys, const SBox& sbox,
                           const SubstitutionConfig& cfg);

/// Inverse of substitute_image in invertible mode; UnsupportedModeError otherwise.
GrayImage desubstitute_image(const GrayImage& img, const KeySet& keys, const SBox& sbox,
                             const SubstitutionConfig& cfg);

}  // namespace rnatc
