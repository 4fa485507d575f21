#pragma once

// Key generation from two chaotic systems:
//   * the De Jong map drives k1 (operation-selection trits) and k2 (a byte),
//   * the forward-Euler Van der Pol oscillator drives k3 (a permutation of 0..64).

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rnatc/image.hpp"
#include "rnatc/permutation.hpp"

namespace rnatc {

struct DeJongParams {
  double alpha = 1.4;
  double beta = 1.56;
  double gamma = 1.4;
  double delta = -6.56;
  double epsilon = -1.6;
  double zeta = -0.2;
  double eta = 2.0;
  double lambda = 1.0;
  double x0 = 0.0;
  double y0 = 0.0;

  /// Throws std::invalid_argument if any field is non-finite.
  void validate() const;
  bool operator==(const DeJongParams&) const = default;
};

struct VdpParams {
  double h = 0.3;
  double mu = 0.05;
  double x0 = 0.1;
  double v0 = 0.0;
  std::size_t steps = 10000;

  /// Throws std::invalid_argument unless h > 0, steps >= 65 and all reals finite.
  void validate() const;
  bool operator==(const VdpParams&) const = default;
};

struct Point2 {
  double x;
  double y;
};

struct VdpState {
  double x;
  double v;
};

/// Matrix of values in {0, 1, 2}.
class TritMatrix {
 public:
  TritMatrix() = default;
  /// Throws std::invalid_argument if any entry is > 2.
  explicit TritMatrix(ByteMatrix entries);

  std::size_t rows() const { return entries_.rows(); }
  std::size_t cols() const { return entries_.cols(); }
  std::uint8_t at(std::size_t r, std::size_t c) const { return entries_.at(r, c); }
  std::span<const std::uint8_t> data() const { return entries_.data(); }

  bool operator==(const TritMatrix&) const = default;

 private:
  ByteMatrix entries_;
};

/// Permutation of {0..64}. The 64-entry key used for block shuffling is head().
class PermKey65 {
 public:
  static constexpr std::size_t kSize = 65;

  /// Throws std::invalid_argument if values is not a permutation of 0..64.
  explicit PermKey65(const std::array<std::uint8_t, kSize>& values);
  static PermKey65 identity();

  std::span<const std::uint8_t> values() const { return values_; }
  std::span<const std::uint8_t, 64> head() const {
    return std::span<const std::uint8_t, 64>(values_.data(), 64);
  }
  std::uint8_t operator[](std::size_t i) const { return values_[i]; }

  bool operator==(const PermKey65&) const = default;

 private:
  std::array<std::uint8_t, kSize> values_;
};

struct KeySet {
  TritMatrix k1;
  std::uint8_t k2 = 0;
  PermKey65 k3 = PermKey65::identity();
  DeJongParams dejong;
  VdpParams vanderpol;
};

/// Points 0..count-1 of the De Jong orbit, starting at (x0, y0).
/// Throws GenerationError naming the first iteration that is non-finite.
std::vector<Point2> dejong_trajectory(const DeJongParams& params, std::size_t count);

/// Min-max quantizes series to 0..255 (round half up) and reshapes it row-major.
/// Throws GenerationError when the series is constant.
ByteMatrix quantize_series(std::span<const double> series, std::size_t rows, std::size_t cols);

/// x-coordinates of a rows*cols De Jong orbit, quantized to bytes.
ByteMatrix dejong_matrix(const DeJongParams& params, std::size_t rows, std::size_t cols);

TritMatrix derive_k1(const ByteMatrix& matrix);

/// Low byte of the sum of all entries.
std::uint8_t derive_k2(const ByteMatrix& matrix);

/// steps + 1 states of the explicit discretization, initial state included.
std::vector<VdpState> vdp_trajectory(const VdpParams& params);

/// Swap-shuffle of 0..64 driven by a real series (at least 65 samples).
PermKey65 permutation_from_series(std::span<const double> series);

PermKey65 derive_k3(const VdpParams& params);

/// Extends the 64-entry head of k3 to num_blocks positions: chunks of 64
/// are shuffled by the rank-compressed head, a short tail chunk of m by the
/// rank-compressed first m entries.
BlockPermutation block_permutation(const PermKey65& k3, std::size_t num_blocks);

/// Full key bundle for a rows x cols image.
KeySet generate_keyset(const DeJongParams& dejong, const VdpParams& vanderpol,
                       std::size_t rows, std::size_t cols);

/// FNV-1a 64 over rows, cols (u32 LE), k1, k2, k3. Stable across platforms.
std::uint64_t keyset_fingerprint(const KeySet& keys);

}  // namespace rnatc
