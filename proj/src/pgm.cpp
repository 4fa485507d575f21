#include "rnatc/pgm.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include "rnatc/error.hpp"

namespace rnatc {
namespace {

void skip_space_and_comments(std::istream& in) {
  while (true) {
    int c = in.peek();
    if (c == '#') {
      in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
    } else if (c != EOF && std::isspace(c)) {
      in.get();
    } else {
      return;
    }
  }
}

std::size_t read_header_number(std::istream& in, const char* what) {
  skip_space_and_comments(in);
  std::string digits;
  while (std::isdigit(in.peek())) {
    digits.push_back(static_cast<char>(in.get()));
    if (digits.size() > 9) throw FormatError(std::string("PGM ") + what + " is too large");
  }
  if (digits.empty()) throw FormatError(std::string("PGM header: missing ") + what);
  return std::stoul(digits);
}

}  // namespace

GrayImage read_pgm(std::istream& in) {
  char magic[2] = {};
  if (!in.read(magic, 2) || magic[0] != 'P' || magic[1] != '5') {
    throw FormatError("not a binary PGM (expected P5 magic)");
  }
  const std::size_t width = read_header_number(in, "width");
  const std::size_t height = read_header_number(in, "height");
  const std::size_t maxval = read_header_number(in, "maxval");
  if (width == 0 || height == 0) throw FormatError("PGM dimensions must be positive");
  if (maxval != 255) throw FormatError("only maxval 255 is supported, got " + std::to_string(maxval));
  // exactly one whitespace byte separates the header from the raster
  if (!std::isspace(in.get())) throw FormatError("PGM header not terminated by whitespace");

  std::vector<std::uint8_t> pixels(width * height);
  in.read(reinterpret_cast<char*>(pixels.data()), static_cast<std::streamsize>(pixels.size()));
  if (static_cast<std::size_t>(in.gcount()) != pixels.size()) {
    throw FormatError("PGM raster truncated: expected " + std::to_string(pixels.size()) + " bytes");
  }
  return GrayImage(width, height, std::move(pixels));
}

GrayImage read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_pgm(in);
}

void write_pgm(std::ostream& out, const GrayImage& img) {
  out << "P5\n" << img.width() << ' ' << img.height() << "\n255\n";
  const auto px = img.pixels();
  out.write(reinterpret_cast<const char*>(px.data()), static_cast<std::streamsize>(px.size()));
}

void write_pgm(const std::filesystem::path& path, const GrayImage& img) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_pgm(out, img);
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace rnatc
