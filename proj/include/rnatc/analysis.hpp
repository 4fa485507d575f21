#pragma once

// Statistical security metrics for 8-bit images.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rnatc/image.hpp"

namespace rnatc {

using Histogram = std::array<std::uint64_t, 256>;

Histogram histogram(const GrayImage& img);

/// Bits per pixel over the 256-bin empirical distribution.
double shannon_entropy(const GrayImage& img);

/// Pearson chi-square statistic of h against the uniform distribution.
double chi_square_uniform(const Histogram& h);

/// Pixel pair displacement: the partner of (r, c) is (r + dy, c + dx).
struct Offset {
  int dy = 0;
  int dx = 1;
};

/// Co-occurrence counts. Pixels are quantized to `levels` gray levels as
/// floor(p * levels / 256) before counting; levels == 256 keeps raw values.
class Glcm {
 public:
  Glcm(int levels, Offset offset);

  int levels() const { return levels_; }
  Offset offset() const { return offset_; }
  std::uint64_t at(int a, int b) const { return counts_[static_cast<std::size_t>(a * levels_ + b)]; }
  std::uint64_t& at(int a, int b) { return counts_[static_cast<std::size_t>(a * levels_ + b)]; }
  std::uint64_t total() const;

 private:
  int levels_;
  Offset offset_;
  std::vector<std::uint64_t> counts_;
};

/// Throws DimensionError if the offset does not fit inside the image,
/// std::invalid_argument unless 1 <= levels <= 256.
Glcm glcm(const GrayImage& img, Offset offset, int levels = 256);

struct GlcmStats {
  double contrast = 0;
  std::optional<double> correlation;  // empty when a marginal has zero variance
  double energy = 0;
  double homogeneity = 0;
};

/// Throws std::invalid_argument on an empty GLCM.
GlcmStats glcm_stats(const Glcm& g);

enum class Direction { Horizontal, Vertical, Diagonal };

const char* direction_name(Direction d);

/// Pearson correlation of (pixel, neighbor) pairs. With `samples`, that many
/// pairs are drawn without replacement using `seed`; otherwise all pairs.
/// Empty result when either side has zero variance.
std::optional<double> adjacency_correlation(const GrayImage& img, Direction direction,
                                            std::optional<std::size_t> samples = std::nullopt,
                                            std::uint64_t seed = 0);

struct AnalysisOptions {
  Offset glcm_offset{0, 1};
  // 8 levels is the MATLAB graycomatrix default under which the usual
  // published GLCM texture figures are computed.
  int glcm_levels = 8;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 0;
};

struct AnalysisReport {
  double entropy = 0;
  Histogram histogram{};
  double chi_square = 0;
  GlcmStats glcm;
  std::optional<double> horizontal;
  std::optional<double> vertical;
  std::optional<double> diagonal;
};

AnalysisReport analyze(const GrayImage& img, const AnalysisOptions& options = {});

}  // namespace rnatc
