#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rnatc/image.hpp"
#include "rnatc/permutation.hpp"

namespace rnatc::cli {

enum ExitCode : int {
  kOk = 0,
  kGenerationError = 1,
  kUsageError = 2,
  kIoError = 3,
  kFormatError = 4,
  kUnsupportedMode = 5,
};

/// Runs the rnatc command line. Diagnostics go to `err`, normal output to `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// The 4x4 worked example: sixteen multiples of 17 in descending order,
/// the base pair expected for each cell, and the published shuffled block order.
struct WorkedExample {
  GrayImage plaintext;
  std::array<std::string, 16> reference_pairs;
  std::array<std::string, 8> reference_permuted_blocks;
};

WorkedExample worked_example();

/// Permutation (in row-major block indices) that rearranges the image's blocks
/// into `target` order, matching blocks by their 4-base strings.
/// Throws FormatError if a target block does not occur exactly once.
BlockPermutation permutation_to_order(const GrayImage& img, const std::array<std::string, 8>& target);

void print_demo(std::ostream& out);

}  // namespace rnatc::cli
