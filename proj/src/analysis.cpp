#include "rnatc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>

#include "rnatc/error.hpp"

namespace rnatc {

Histogram histogram(const GrayImage& img) {
  Histogram h{};
  for (std::uint8_t p : img.pixels()) ++h[p];
  return h;
}

double shannon_entropy(const GrayImage& img) {
  const Histogram h = histogram(img);
  const double n = static_cast<double>(img.pixel_count());
  double entropy = 0.0;
  for (std::uint64_t count : h) {
    if (count == 0) continue;
    const double q = static_cast<double>(count) / n;
    entropy -= q * std::log2(q);
  }
  return entropy;
}

double chi_square_uniform(const Histogram& h) {
  const double total = static_cast<double>(std::accumulate(h.begin(), h.end(), std::uint64_t{0}));
  const double expected = total / 256.0;
  double chi = 0.0;
  for (std::uint64_t count : h) {
    const double d = static_cast<double>(count) - expected;
    chi += d * d / expected;
  }
  return chi;
}

Glcm::Glcm(int levels, Offset offset)
    : levels_(levels), offset_(offset), counts_(static_cast<std::size_t>(levels * levels), 0) {}

std::uint64_t Glcm::total() const { return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0}); }

Glcm glcm(const GrayImage& img, Offset offset, int levels) {
  if (levels < 1 || levels > 256) throw std::invalid_argument("GLCM levels must be in 1..256");
  const auto h = static_cast<long>(img.height());
  const auto w = static_cast<long>(img.width());
  if (std::labs(offset.dy) >= h || std::labs(offset.dx) >= w) {
    throw DimensionError("GLCM offset does not fit inside the image");
  }
  std::array<int, 256> level{};
  for (int p = 0; p < 256; ++p) level[static_cast<std::size_t>(p)] = p * levels / 256;

  Glcm g(levels, offset);
  const long r0 = std::max(0L, -static_cast<long>(offset.dy));
  const long r1 = std::min(h, h - offset.dy);
  const long c0 = std::max(0L, -static_cast<long>(offset.dx));
  const long c1 = std::min(w, w - offset.dx);
  for (long r = r0; r < r1; ++r) {
    for (long c = c0; c < c1; ++c) {
      const int a = level[img.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c))];
      const int b = level[img.at(static_cast<std::size_t>(r + offset.dy), static_cast<std::size_t>(c + offset.dx))];
      ++g.at(a, b);
    }
  }
  return g;
}

GlcmStats glcm_stats(const Glcm& g) {
  const double total = static_cast<double>(g.total());
  if (total == 0) throw std::invalid_argument("GLCM is empty");
  const int n = g.levels();

  double mean_a = 0, mean_b = 0;
  GlcmStats s;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const double p = static_cast<double>(g.at(a, b)) / total;
      if (p == 0) continue;
      const double d = a - b;
      s.contrast += p * d * d;
      s.energy += p * p;
      s.homogeneity += p / (1.0 + std::abs(d));
      mean_a += p * a;
      mean_b += p * b;
    }
  }
  double var_a = 0, var_b = 0, cov = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const double p = static_cast<double>(g.at(a, b)) / total;
      if (p == 0) continue;
      var_a += p * (a - mean_a) * (a - mean_a);
      var_b += p * (b - mean_b) * (b - mean_b);
      cov += p * (a - mean_a) * (b - mean_b);
    }
  }
  if (var_a > 0 && var_b > 0) s.correlation = cov / std::sqrt(var_a * var_b);
  return s;
}

const char* direction_name(Direction d) {
  switch (d) {
    case Direction::Horizontal:
      return "horizontal";
    case Direction::Vertical:
      return "vertical";
    case Direction::Diagonal:
      return "diagonal";
  }
  return "?";
}

std::optional<double> adjacency_correlation(const GrayImage& img, Direction direction,
                                            std::optional<std::size_t> samples, std::uint64_t seed) {
  const std::size_t dy = direction == Direction::Horizontal ? 0 : 1;
  const std::size_t dx = direction == Direction::Vertical ? 0 : 1;
  if (img.height() <= dy || img.width() <= dx) {
    throw DimensionError(std::string("image too small for ") + direction_name(direction) + " pairs");
  }
  const std::size_t rows = img.height() - dy;
  const std::size_t cols = img.width() - dx;
  const std::size_t pairs = rows * cols;

  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  std::size_t n = 0;
  auto accumulate = [&](std::size_t k) {
    const std::size_t r = k / cols;
    const std::size_t c = k % cols;
    const double x = img.at(r, c);
    const double y = img.at(r + dy, c + dx);
    sx += x;
    sy += y;
    sxx += x * x;
    syy += y * y;
    sxy += x * y;
    ++n;
  };

  if (samples && *samples < pairs) {
    std::vector<std::size_t> all(pairs);
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::vector<std::size_t> picked;
    picked.reserve(*samples);
    std::mt19937_64 rng(seed);
    std::sample(all.begin(), all.end(), std::back_inserter(picked), *samples, rng);
    for (std::size_t k : picked) accumulate(k);
  } else {
    for (std::size_t k = 0; k < pairs; ++k) accumulate(k);
  }
  if (n < 2) return std::nullopt;

  const double dn = static_cast<double>(n);
  const double cov = sxy - sx * sy / dn;
  const double vx = sxx - sx * sx / dn;
  const double vy = syy - sy * sy / dn;
  if (!(vx > 0) || !(vy > 0)) return std::nullopt;
  return std::clamp(cov / std::sqrt(vx * vy), -1.0, 1.0);
}

AnalysisReport analyze(const GrayImage& img, const AnalysisOptions& options) {
  AnalysisReport r;
  r.histogram = histogram(img);
  r.entropy = shannon_entropy(img);
  r.chi_square = chi_square_uniform(r.histogram);
  r.glcm = glcm_stats(glcm(img, options.glcm_offset, options.glcm_levels));
  if (img.width() >= 2) r.horizontal = adjacency_correlation(img, Direction::Horizontal, options.samples, options.seed);
  if (img.height() >= 2) r.vertical = adjacency_correlation(img, Direction::Vertical, options.samples, options.seed);
  if (img.width() >= 2 && img.height() >= 2) {
    r.diagonal = adjacency_correlation(img, Direction::Diagonal, options.samples, options.seed);
  }
  return r;
}

}  // namespace rnatc
