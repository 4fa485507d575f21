#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rnatc {

// Row-major 2-D grid. Used for byte matrices produced during key generation.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  T& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> data() { return data_; }
  std::span<const T> data() const { return data_; }

  bool operator==(const Grid&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ByteMatrix = Grid<std::uint8_t>;

/// 8-bit grayscale image, row-major. Width and height are always positive.
class GrayImage {
 public:
  GrayImage(std::size_t width, std::size_t height, std::uint8_t fill = 0);
  /// Throws DimensionError unless pixels.size() == width * height.
  GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t pixel_count() const { return pixels_.size(); }

  std::uint8_t at(std::size_t row, std::size_t col) const { return pixels_[row * width_ + col]; }
  std::uint8_t& at(std::size_t row, std::size_t col) { return pixels_[row * width_ + col]; }

  std::span<const std::uint8_t> pixels() const { return pixels_; }
  std::span<std::uint8_t> pixels() { return pixels_; }

  bool operator==(const GrayImage&) const = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> pixels_;
};

}  // namespace rnatc
