#include "rnatc/image.hpp"

#include <string>

#include "rnatc/error.hpp"

namespace rnatc {

GrayImage::GrayImage(std::size_t width, std::size_t height, std::uint8_t fill)
    : GrayImage(width, height, std::vector<std::uint8_t>(width * height, fill)) {}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width == 0 || height == 0) {
    throw DimensionError("image dimensions must be positive");
  }
  if (pixels_.size() != width * height) {
    throw DimensionError("pixel count " + std::to_string(pixels_.size()) + " does not match " +
                         std::to_string(width) + "x" + std::to_string(height));
  }
}

}  // namespace rnatc
