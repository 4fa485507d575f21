#pragma once

#include <functional>

#include "rnatc/chaos_keys.hpp"
#include "rnatc/image.hpp"
#include "rnatc/permutation.hpp"
#include "rnatc/sbox.hpp"
#include "rnatc/substitution.hpp"

namespace rnatc {

struct CipherConfig {
  SubstitutionConfig substitution;
  int rounds = 1;

  void validate() const;
};

enum class Stage { Permute, Substitute, Desubstitute, InversePermute };

using StageObserver = std::function<void(Stage)>;

/// Keyed pipeline: block permutation then transformative substitution,
/// repeated cfg.rounds times. Immutable after construction.
class Cipher {
 public:
  Cipher(KeySet keys, SBox sbox, CipherConfig cfg, StageObserver observer = {});

  GrayImage encrypt(const GrayImage& img) const;
  /// Throws UnsupportedModeError in paper-exact mode.
  GrayImage decrypt(const GrayImage& img) const;

  const KeySet& keys() const { return keys_; }
  const BlockPermutation& permutation() const { return perm_; }

 private:
  void check_dims(const GrayImage& img) const;
  void notify(Stage s) const;

  KeySet keys_;
  SBox sbox_;
  CipherConfig cfg_;
  BlockPermutation perm_;
  BlockPermutation inverse_;
  StageObserver observer_;
};

/// Convenience wrappers using the AES s-box.
GrayImage encrypt(const GrayImage& img, const KeySet& keys, const CipherConfig& cfg = {});
GrayImage decrypt(const GrayImage& img, const KeySet& keys, const CipherConfig& cfg = {});

}  // namespace rnatc
