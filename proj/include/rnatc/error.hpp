#pragma once

#include <stdexcept>
#include <string>

namespace rnatc {

// Base for everything the library throws on bad input or failed generation.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A chaotic recurrence produced a non-finite value or a degenerate series.
class GenerationError : public Error {
 public:
  using Error::Error;
};

// Image, key or permutation shapes disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Malformed PGM, key file, s-box file.
class FormatError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// The requested operation is not defined for the configured mode
// (e.g. decrypting in paper-exact mode).
class UnsupportedModeError : public Error {
 public:
  using Error::Error;
};

}  // namespace rnatc
