#include "rnatc/keyfile.hpp"

#include <fstream>
#include <set>
#include <string>

#include "rnatc/error.hpp"

namespace rnatc {
namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& known, const char* section) {
  for (const auto& [key, _] : obj.items()) {
    if (!known.contains(key)) {
      throw FormatError(std::string("unknown field '") + key + "' in " + section);
    }
  }
}

double get_real(const json& obj, const char* name, double fallback) {
  if (!obj.contains(name)) return fallback;
  const auto& v = obj.at(name);
  if (!v.is_number()) throw FormatError(std::string("field '") + name + "' must be a number");
  return v.get<double>();
}

}  // namespace

json key_params_to_json(const KeyParams& p) {
  const auto& d = p.dejong;
  const auto& v = p.vanderpol;
  return json{
      {"dejong",
       {{"alpha", d.alpha},
        {"beta", d.beta},
        {"gamma", d.gamma},
        {"delta", d.delta},
        {"epsilon", d.epsilon},
        {"zeta", d.zeta},
        {"eta", d.eta},
        {"lambda", d.lambda},
        {"x0", d.x0},
        {"y0", d.y0}}},
      {"vanderpol", {{"h", v.h}, {"mu", v.mu}, {"x0", v.x0}, {"v0", v.v0}, {"steps", v.steps}}},
  };
}

KeyParams key_params_from_json(const json& doc) {
  if (!doc.is_object()) throw FormatError("key file must be a JSON object");
  reject_unknown(doc, {"dejong", "vanderpol"}, "key file");
  KeyParams p;
  if (doc.contains("dejong")) {
    const auto& d = doc.at("dejong");
    if (!d.is_object()) throw FormatError("'dejong' must be an object");
    reject_unknown(d, {"alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "lambda", "x0", "y0"},
                   "dejong");
    auto& o = p.dejong;
    o.alpha = get_real(d, "alpha", o.alpha);
    o.beta = get_real(d, "beta", o.beta);
    o.gamma = get_real(d, "gamma", o.gamma);
    o.delta = get_real(d, "delta", o.delta);
    o.epsilon = get_real(d, "epsilon", o.epsilon);
    o.zeta = get_real(d, "zeta", o.zeta);
    o.eta = get_real(d, "eta", o.eta);
    o.lambda = get_real(d, "lambda", o.lambda);
    o.x0 = get_real(d, "x0", o.x0);
    o.y0 = get_real(d, "y0", o.y0);
  }
  if (doc.contains("vanderpol")) {
    const auto& v = doc.at("vanderpol");
    if (!v.is_object()) throw FormatError("'vanderpol' must be an object");
    reject_unknown(v, {"h", "mu", "x0", "v0", "steps"}, "vanderpol");
    auto& o = p.vanderpol;
    o.h = get_real(v, "h", o.h);
    o.mu = get_real(v, "mu", o.mu);
    o.x0 = get_real(v, "x0", o.x0);
    o.v0 = get_real(v, "v0", o.v0);
    if (v.contains("steps")) {
      if (!v.at("steps").is_number_unsigned()) throw FormatError("'steps' must be a positive integer");
      o.steps = v.at("steps").get<std::size_t>();
    }
  }
  try {
    p.dejong.validate();
    p.vanderpol.validate();
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("invalid key parameters: ") + e.what());
  }
  return p;
}

KeyParams read_key_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open key file " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw FormatError("key file " + path.string() + " is not valid JSON: " + e.what());
  }
  return key_params_from_json(doc);
}

void write_key_file(const std::filesystem::path& path, const KeyParams& params) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << key_params_to_json(params).dump(2) << '\n';
}

json keyset_to_json(const KeySet& keys) {
  const auto k1 = keys.k1.data();
  const auto k3 = keys.k3.values();
  return json{
      {"rows", keys.k1.rows()},
      {"cols", keys.k1.cols()},
      {"k1", std::vector<int>(k1.begin(), k1.end())},
      {"k2", keys.k2},
      {"k3", std::vector<int>(k3.begin(), k3.end())},
      {"params", key_params_to_json({keys.dejong, keys.vanderpol})},
  };
}

KeySet keyset_from_json(const json& doc) {
  try {
    const auto rows = doc.at("rows").get<std::size_t>();
    const auto cols = doc.at("cols").get<std::size_t>();
    const auto k1 = doc.at("k1").get<std::vector<int>>();
    if (k1.size() != rows * cols) throw FormatError("k1 length does not match rows*cols");
    ByteMatrix trits(rows, cols);
    for (std::size_t i = 0; i < k1.size(); ++i) {
      if (k1[i] < 0 || k1[i] > 2) throw FormatError("k1 entries must be 0, 1 or 2");
      trits.data()[i] = static_cast<std::uint8_t>(k1[i]);
    }
    const int k2 = doc.at("k2").get<int>();
    if (k2 < 0 || k2 > 255) throw FormatError("k2 must be in 0..255");
    const auto k3 = doc.at("k3").get<std::vector<int>>();
    if (k3.size() != PermKey65::kSize) throw FormatError("k3 must have 65 entries");
    std::array<std::uint8_t, PermKey65::kSize> k3_values;
    for (std::size_t i = 0; i < k3.size(); ++i) {
      if (k3[i] < 0 || k3[i] > 64) throw FormatError("k3 entries must be in 0..64");
      k3_values[i] = static_cast<std::uint8_t>(k3[i]);
    }
    const KeyParams params = doc.contains("params") ? key_params_from_json(doc.at("params")) : KeyParams{};
    return KeySet{TritMatrix(std::move(trits)), static_cast<std::uint8_t>(k2), PermKey65(k3_values),
                  params.dejong, params.vanderpol};
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed key set: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("malformed key set: ") + e.what());
  }
}

}  // namespace rnatc
