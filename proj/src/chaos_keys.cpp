#include "rnatc/chaos_keys.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rnatc/error.hpp"

namespace rnatc {
namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(name) + " must be finite");
}

}  // namespace

void DeJongParams::validate() const {
  require_finite(alpha, "alpha");
  require_finite(beta, "beta");
  require_finite(gamma, "gamma");
  require_finite(delta, "delta");
  require_finite(epsilon, "epsilon");
  require_finite(zeta, "zeta");
  require_finite(eta, "eta");
  require_finite(lambda, "lambda");
  require_finite(x0, "x0");
  require_finite(y0, "y0");
}

void VdpParams::validate() const {
  require_finite(h, "h");
  require_finite(mu, "mu");
  require_finite(x0, "x0");
  require_finite(v0, "v0");
  if (!(h > 0)) throw std::invalid_argument("h must be positive");
  if (steps < PermKey65::kSize) throw std::invalid_argument("steps must be at least 65");
}

TritMatrix::TritMatrix(ByteMatrix entries) : entries_(std::move(entries)) {
  for (std::uint8_t v : entries_.data()) {
    if (v > 2) throw std::invalid_argument("trit matrix entry out of range");
  }
}

PermKey65::PermKey65(const std::array<std::uint8_t, kSize>& values) : values_(values) {
  std::array<bool, kSize> seen{};
  for (std::uint8_t v : values_) {
    if (v >= kSize || seen[v]) throw std::invalid_argument("k3 must be a permutation of 0..64");
    seen[v] = true;
  }
}

PermKey65 PermKey65::identity() {
  std::array<std::uint8_t, kSize> v;
  std::iota(v.begin(), v.end(), std::uint8_t{0});
  return PermKey65(v);
}

std::vector<Point2> dejong_trajectory(const DeJongParams& params, std::size_t count) {
  params.validate();
  if (count == 0) throw std::invalid_argument("trajectory length must be positive");
  std::vector<Point2> out;
  out.reserve(count);
  out.push_back({params.x0, params.y0});
  for (std::size_t i = 1; i < count; ++i) {
    const auto [xp, yp] = out.back();
    const double x = params.alpha * std::sin(yp * params.beta) - params.gamma * std::cos(xp * params.delta);
    const double y = params.epsilon * std::sin(xp * params.zeta) - params.eta * std::cos(yp * params.lambda);
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw GenerationError("De Jong orbit is non-finite at iteration " + std::to_string(i));
    }
    out.push_back({x, y});
  }
  return out;
}

ByteMatrix quantize_series(std::span<const double> series, std::size_t rows, std::size_t cols) {
  if (series.size() != rows * cols) throw DimensionError("series length does not match matrix shape");
  const auto [lo_it, hi_it] = std::minmax_element(series.begin(), series.end());
  const double lo = *lo_it;
  const double range = *hi_it - lo;
  if (!(range > 0)) throw GenerationError("cannot normalize a constant series");

  ByteMatrix m(rows, cols);
  auto dst = m.data();
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double scaled = (series[i] - lo) / range * 255.0;
    dst[i] = static_cast<std::uint8_t>(std::floor(scaled + 0.5));
  }
  return m;
}

ByteMatrix dejong_matrix(const DeJongParams& params, std::size_t rows, std::size_t cols) {
  if (rows * cols < 2) throw DimensionError("De Jong matrix needs at least two entries");
  const auto orbit = dejong_trajectory(params, rows * cols);
  std::vector<double> xs(orbit.size());
  std::transform(orbit.begin(), orbit.end(), xs.begin(), [](const Point2& p) { return p.x; });
  return quantize_series(xs, rows, cols);
}

TritMatrix derive_k1(const ByteMatrix& matrix) {
  ByteMatrix trits(matrix.rows(), matrix.cols());
  std::transform(matrix.data().begin(), matrix.data().end(), trits.data().begin(),
                 [](std::uint8_t v) { return static_cast<std::uint8_t>(v % 3); });
  return TritMatrix(std::move(trits));
}

std::uint8_t derive_k2(const ByteMatrix& matrix) {
  // Only the low 8 bits of the sum survive, so wrap-around accumulation is exact.
  std::uint8_t sum = 0;
  for (std::uint8_t v : matrix.data()) sum = static_cast<std::uint8_t>(sum + v);
  return sum;
}

std::vector<VdpState> vdp_trajectory(const VdpParams& params) {
  require_finite(params.h, "h");
  require_finite(params.mu, "mu");
  require_finite(params.x0, "x0");
  require_finite(params.v0, "v0");
  if (!(params.h > 0)) throw std::invalid_argument("h must be positive");
  if (params.steps == 0) throw std::invalid_argument("steps must be positive");

  std::vector<VdpState> out;
  out.reserve(params.steps + 1);
  out.push_back({params.x0, params.v0});
  for (std::size_t n = 1; n <= params.steps; ++n) {
    const auto [x, v] = out.back();
    const double x_next = x + params.h * v;
    const double v_next = v + params.h * (params.mu * (1.0 - x * x) * v - x);
    if (!std::isfinite(x_next) || !std::isfinite(v_next)) {
      throw GenerationError("Van der Pol state is non-finite at step " + std::to_string(n));
    }
    out.push_back({x_next, v_next});
  }
  return out;
}

PermKey65 permutation_from_series(std::span<const double> series) {
  constexpr std::size_t n = PermKey65::kSize;
  if (series.size() < n) throw GenerationError("k3 needs at least 65 samples");
  const auto [lo_it, hi_it] = std::minmax_element(series.begin(), series.end());
  const double lo = *lo_it;
  const double range = *hi_it - lo;
  if (!(range > 0)) throw GenerationError("cannot normalize a constant series");

  std::array<std::uint8_t, n> numbers;
  std::iota(numbers.begin(), numbers.end(), std::uint8_t{0});
  // 1-based positions as in the reference procedure. Only i <= 65 can swap,
  // and idx always lands in 1..65, so later samples never have an effect.
  for (std::size_t i = 1; i <= n; ++i) {
    const double normalized = (series[i - 1] - lo) / range;
    const auto index = static_cast<std::size_t>(std::round(normalized * 64.0)) + 1;
    const std::size_t idx = (i + index - 1) % n + 1;
    std::swap(numbers[i - 1], numbers[idx - 1]);
  }
  return PermKey65(numbers);
}

PermKey65 derive_k3(const VdpParams& params) {
  params.validate();
  const auto states = vdp_trajectory(params);
  std::vector<double> xs(states.size());
  std::transform(states.begin(), states.end(), xs.begin(), [](const VdpState& s) { return s.x; });
  return permutation_from_series(xs);
}

BlockPermutation block_permutation(const PermKey65& k3, std::size_t num_blocks) {
  if (num_blocks == 0) throw std::invalid_argument("num_blocks must be positive");
  constexpr std::size_t chunk = 64;
  const auto head = k3.head();

  // ranks[m][j]: rank of head[j] among head[0..m). Only two chunk sizes occur.
  auto ranks_of = [&](std::size_t m) {
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return head[a] < head[b]; });
    std::vector<std::size_t> rank(m);
    for (std::size_t r = 0; r < m; ++r) rank[order[r]] = r;
    return rank;
  };

  std::vector<std::size_t> mapping(num_blocks);
  const auto full = ranks_of(chunk);
  const std::size_t tail = num_blocks % chunk;
  const auto partial = ranks_of(tail);
  for (std::size_t start = 0; start < num_blocks; start += chunk) {
    const auto& rank = (num_blocks - start >= chunk) ? full : partial;
    for (std::size_t j = 0; j < rank.size(); ++j) mapping[start + j] = start + rank[j];
  }
  return BlockPermutation(std::move(mapping));
}

KeySet generate_keyset(const DeJongParams& dejong, const VdpParams& vanderpol,
                       std::size_t rows, std::size_t cols) {
  const ByteMatrix m = dejong_matrix(dejong, rows, cols);
  return KeySet{derive_k1(m), derive_k2(m), derive_k3(vanderpol), dejong, vanderpol};
}

std::uint64_t keyset_fingerprint(const KeySet& keys) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint8_t b) {
    h ^= b;
    h *= 0x100000001b3ULL;
  };
  auto mix_u32 = [&](std::uint32_t v) {
    for (int i = 0; i < 4; ++i) mix(static_cast<std::uint8_t>(v >> (8 * i)));
  };
  mix_u32(static_cast<std::uint32_t>(keys.k1.rows()));
  mix_u32(static_cast<std::uint32_t>(keys.k1.cols()));
  for (std::uint8_t t : keys.k1.data()) mix(t);
  mix(keys.k2);
  for (std::uint8_t v : keys.k3.values()) mix(v);
  return h;
}

}  // namespace rnatc
