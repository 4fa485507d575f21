#pragma once

#include <filesystem>
#include <iosfwd>

#include "rnatc/image.hpp"

namespace rnatc {

// Binary PGM (P5) with maxval 255. Header comments are accepted on read;
// the writer emits the canonical "P5\n<w> <h>\n255\n" header.
GrayImage read_pgm(std::istream& in);
GrayImage read_pgm(const std::filesystem::path& path);
void write_pgm(std::ostream& out, const GrayImage& img);
void write_pgm(const std::filesystem::path& path, const GrayImage& img);

}  // namespace rnatc
