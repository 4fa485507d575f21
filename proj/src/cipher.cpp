#include "rnatc/cipher.hpp"

#include <stdexcept>
#include <string>

#include "rnatc/error.hpp"
#include "rnatc/rna_codec.hpp"

namespace rnatc {

void CipherConfig::validate() const {
  substitution.validate();
  if (rounds < 1) throw std::invalid_argument("rounds must be at least 1");
}

namespace {

BlockPermutation permutation_for(const KeySet& keys) {
  const std::size_t blocks = keys.k1.rows() * keys.k1.cols() / 2;
  return blocks == 0 ? BlockPermutation::identity(0) : block_permutation(keys.k3, blocks);
}

}  // namespace

Cipher::Cipher(KeySet keys, SBox sbox, CipherConfig cfg, StageObserver observer)
    : keys_(std::move(keys)),
      sbox_(sbox),
      cfg_(cfg),
      perm_(permutation_for(keys_)),
      inverse_(invert_permutation(perm_)),
      observer_(std::move(observer)) {
  cfg_.validate();
}

void Cipher::check_dims(const GrayImage& img) const {
  if (keys_.k1.rows() != img.height() || keys_.k1.cols() != img.width()) {
    throw DimensionError("key set was generated for " + std::to_string(keys_.k1.cols()) + "x" +
                         std::to_string(keys_.k1.rows()) + ", image is " + std::to_string(img.width()) + "x" +
                         std::to_string(img.height()));
  }
}

void Cipher::notify(Stage s) const {
  if (observer_) observer_(s);
}

GrayImage Cipher::encrypt(const GrayImage& img) const {
  check_dims(img);
  GrayImage state = img;
  for (int round = 0; round < cfg_.rounds; ++round) {
    notify(Stage::Permute);
    state = permute_blocks(state, perm_);
    notify(Stage::Substitute);
    state = substitute_image(state, keys_, sbox_, cfg_.substitution);
  }
  return state;
}

GrayImage Cipher::decrypt(const GrayImage& img) const {
  if (cfg_.substitution.mode != SubstitutionMode::Invertible) {
    throw UnsupportedModeError("decryption requires invertible mode");
  }
  check_dims(img);
  GrayImage state = img;
  for (int round = 0; round < cfg_.rounds; ++round) {
    notify(Stage::Desubstitute);
    state = desubstitute_image(state, keys_, sbox_, cfg_.substitution);
    notify(Stage::InversePermute);
    state = permute_blocks(state, inverse_);
  }
  return state;
}

GrayImage encrypt(const GrayImage& img, const KeySet& keys, const CipherConfig& cfg) {
  return Cipher(keys, SBox::aes(), cfg).encrypt(img);
}

GrayImage decrypt(const GrayImage& img, const KeySet& keys, const CipherConfig& cfg) {
  return Cipher(keys, SBox::aes(), cfg).decrypt(img);
}

}  // namespace rnatc
