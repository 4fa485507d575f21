#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>

namespace rnatc {

/// 256-entry byte substitution table.
class SBox {
 public:
  explicit SBox(const std::array<std::uint8_t, 256>& table) : table_(table) {}

  /// The AES forward substitution table.
  static SBox aes();
  static SBox identity();

  std::uint8_t operator[](std::uint8_t i) const { return table_[i]; }
  const std::array<std::uint8_t, 256>& table() const { return table_; }
  bool is_bijective() const;

  bool operator==(const SBox&) const = default;

 private:
  std::array<std::uint8_t, 256> table_;
};

inline std::uint8_t sbox_lookup(const SBox& sbox, std::uint8_t p) { return sbox[p]; }

// Text format: 256 lines, one two-digit hex byte per line.
SBox read_sbox_hex(std::istream& in);
SBox read_sbox_hex(const std::filesystem::path& path);
void write_sbox_hex(std::ostream& out, const SBox& sbox);

}  // namespace rnatc
