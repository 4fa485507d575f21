#include "rnatc/substitution.hpp"

#include <stdexcept>
#include <string>

#include "rnatc/error.hpp"

namespace rnatc {
namespace {

void check_keys(const GrayImage& img, const KeySet& keys) {
  if (keys.k1.rows() != img.height() || keys.k1.cols() != img.width()) {
    throw DimensionError("k1 is " + std::to_string(keys.k1.rows()) + "x" + std::to_string(keys.k1.cols()) +
                         " but image is " + std::to_string(img.height()) + "x" + std::to_string(img.width()));
  }
}

}  // namespace

void SubstitutionConfig::validate() const {
  if (shift < 1 || shift > 7) throw std::invalid_argument("O2 shift must be in 1..7");
}

OpId select_operation(const TritMatrix& k1, std::size_t row, std::size_t col) {
  if (row >= k1.rows() || col >= k1.cols()) throw std::out_of_range("k1 index out of range");
  return static_cast<OpId>(k1.at(row, col));
}

std::uint8_t position_mask(std::size_t row, std::size_t col, std::size_t width, std::uint8_t k2) {
  return static_cast<std::uint8_t>((row * width + col + k2) & 0xFF);
}

GrayImage substitute_image(const GrayImage& img, const KeySet& keys, const SBox& sbox,
                           const SubstitutionConfig& cfg) {
  cfg.validate();
  check_keys(img, keys);
  GrayImage out(img.width(), img.height());
  const int n = cfg.shift;
  const bool exact = cfg.mode == SubstitutionMode::PaperExact;

  for (std::size_t r = 0; r < img.height(); ++r) {
    for (std::size_t c = 0; c < img.width(); ++c) {
      const std::uint8_t p = img.at(r, c);
      const std::uint8_t s = exact ? sbox_lookup(sbox, p) : sbox_lookup(sbox, position_mask(r, c, img.width(), keys.k2));
      std::uint8_t v = 0;
      switch (select_operation(keys.k1, r, c)) {
        case OpId::O1:
          v = op1(p, s, keys.k2);
          break;
        case OpId::O2:
          v = exact ? op2(p, s, n) : static_cast<std::uint8_t>(p ^ rotate_right(s, n));
          break;
        case OpId::O3:
          v = exact ? op3(p, s) : static_cast<std::uint8_t>(p ^ nibble_swap(s));
          break;
      }
      out.at(r, c) = v;
    }
  }
  return out;
}

GrayImage desubstitute_image(const GrayImage& img, const KeySet& keys, const SBox& sbox,
                             const SubstitutionConfig& cfg) {
  cfg.validate();
  if (cfg.mode != SubstitutionMode::Invertible) {
    throw UnsupportedModeError("paper-exact substitution cannot be inverted (O2 and O3 are not injective)");
  }
  check_keys(img, keys);
  GrayImage out(img.width(), img.height());
  for (std::size_t r = 0; r < img.height(); ++r) {
    for (std::size_t c = 0; c < img.width(); ++c) {
      const std::uint8_t v = img.at(r, c);
      const std::uint8_t s = sbox_lookup(sbox, position_mask(r, c, img.width(), keys.k2));
      std::uint8_t p = 0;
      switch (select_operation(keys.k1, r, c)) {
        case OpId::O1:
          p = static_cast<std::uint8_t>(v - s - keys.k2);
          break;
        case OpId::O2:
          p = static_cast<std::uint8_t>(v ^ rotate_right(s, cfg.shift));
          break;
        case OpId::O3:
          p = static_cast<std::uint8_t>(v ^ nibble_swap(s));
          break;
      }
      out.at(r, c) = p;
    }
  }
  return out;
}

}  // namespace rnatc
