#pragma once

#include <filesystem>
#include <iosfwd>

#include "json.hpp"
#include "rnatc/chaos_keys.hpp"

namespace rnatc {

// Key file: {"dejong": {alpha..lambda, x0, y0}, "vanderpol": {h, mu, x0, v0, steps}}.
// Missing fields keep their defaults; unknown fields are rejected.
struct KeyParams {
  DeJongParams dejong;
  VdpParams vanderpol;
};

nlohmann::json key_params_to_json(const KeyParams& params);
KeyParams key_params_from_json(const nlohmann::json& doc);
KeyParams read_key_file(const std::filesystem::path& path);
void write_key_file(const std::filesystem::path& path, const KeyParams& params);

/// {"rows", "cols", "k1": [row-major trits], "k2", "k3": [65], "params": {...}}
nlohmann::json keyset_to_json(const KeySet& keys);
KeySet keyset_from_json(const nlohmann::json& doc);

}  // namespace rnatc
