// Acceptance suite: one PASS/FAIL line per criterion, measured values alongside.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../tools/cli.hpp"
#include "oracles.hpp"
#include "rnatc/analysis.hpp"
#include "rnatc/chaos_keys.hpp"
#include "rnatc/cipher.hpp"
#include "rnatc/error.hpp"
#include "rnatc/pgm.hpp"
#include "rnatc/substitution.hpp"

using namespace rnatc;

namespace {

using Clock = std::chrono::steady_clock;

// chi-square 0.99 quantile, 255 degrees of freedom
constexpr double kChiSquareCritical = 310.45738821990585;
constexpr std::uint64_t kGoldenFingerprint = 0xa517036bc06de196ULL;

struct Sample {
  std::string name;
  GrayImage ciphertext;
  double seconds;
};

int failures = 0;

void report(bool ok, const std::string& name, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS  " : "FAIL  ") << name << ": " << detail << '\n';
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Sample> encrypt_natural_images() {
  const std::filesystem::path dir = RNATC_TEST_DATA;
  std::vector<Sample> out;
  for (const char* name : {"camera256", "astronaut256", "chelsea256", "coffee256"}) {
    const GrayImage plain = read_pgm(dir / (std::string(name) + ".pgm"));
    const auto t0 = Clock::now();
    const KeySet keys = generate_keyset({}, {}, plain.height(), plain.width());
    GrayImage c = encrypt(plain, keys);
    out.push_back({name, std::move(c), seconds_since(t0)});
  }
  return out;
}

// Applies `measure` to every ciphertext; the criterion holds when it holds on all.
void per_image(const std::string& name, const std::vector<Sample>& samples,
               const std::function<bool(const Sample&, std::string&)>& measure) {
  bool ok = true;
  std::string detail;
  for (const Sample& s : samples) {
    std::string d;
    ok = measure(s, d) && ok;
    detail += (detail.empty() ? "" : "; ") + s.name + " " + d;
  }
  report(ok, name, detail);
}

void round_trip() {
  std::mt19937_64 rng(2024);
  CipherConfig cfg;
  cfg.substitution.mode = SubstitutionMode::Invertible;
  const auto t0 = Clock::now();
  int bad = 0, total = 0;
  for (std::size_t side : {4u, 64u, 256u}) {
    const KeySet keys = generate_keyset({}, {}, side, side);
    const Cipher cipher(keys, SBox::aes(), cfg);
    for (int i = 0; i < 100; ++i, ++total) {
      const GrayImage img = oracle::random_image(side, side, rng);
      if (!(cipher.decrypt(cipher.encrypt(img)) == img)) ++bad;
    }
  }
  const double t = seconds_since(t0);
  report(bad == 0 && t < 10.0, "round trip (invertible, 300 images)",
         std::to_string(total - bad) + "/" + std::to_string(total) + " identical in " + fmt("%.3f s", t));
}

void statistics(const std::vector<Sample>& samples) {
  per_image("entropy >= 7.98, < 2 s", samples, [](const Sample& s, std::string& d) {
    const double h = shannon_entropy(s.ciphertext);
    d = fmt("%.4f", h) + fmt(" (%.3f s)", s.seconds);
    return h >= 7.98 && s.seconds < 2.0;
  });

  std::vector<GlcmStats> stats;
  for (const Sample& s : samples) stats.push_back(glcm_stats(glcm(s.ciphertext, {0, 1}, 8)));
  auto stat_of = [&](const Sample& s) {
    return stats[static_cast<std::size_t>(&s - samples.data())];
  };

  per_image("GLCM correlation |r| <= 0.01 at (0,1)", samples, [&](const Sample& s, std::string& d) {
    const auto r = stat_of(s).correlation;
    d = r ? fmt("%+.5f", *r) : "undefined";
    return r && std::fabs(*r) <= 0.01;
  });
  per_image("GLCM homogeneity in [0.35, 0.43], energy <= 0.02", samples, [&](const Sample& s, std::string& d) {
    const GlcmStats g = stat_of(s);
    d = fmt("hom %.4f", g.homogeneity) + fmt(" en %.5f", g.energy);
    return g.homogeneity >= 0.35 && g.homogeneity <= 0.43 && g.energy <= 0.02;
  });
  per_image("GLCM contrast >= 9.0", samples, [&](const Sample& s, std::string& d) {
    const double c = stat_of(s).contrast;
    d = fmt("%.3f", c);
    return c >= 9.0;
  });
  per_image("histogram chi-square < 310.457", samples, [](const Sample& s, std::string& d) {
    const double x = chi_square_uniform(histogram(s.ciphertext));
    d = fmt("%.1f", x);
    return x < kChiSquareCritical;
  });
  per_image("adjacency |r| <= 0.01 (H, V, D, all pairs)", samples, [](const Sample& s, std::string& d) {
    bool ok = true;
    for (Direction dir : {Direction::Horizontal, Direction::Vertical, Direction::Diagonal}) {
      const auto r = adjacency_correlation(s.ciphertext, dir);
      d += std::string(d.empty() ? "" : " ") + direction_name(dir)[0] + (r ? fmt("%+.4f", *r) : "=undef");
      ok = ok && r && std::fabs(*r) <= 0.01;
    }
    return ok;
  });
}

void worked_example() {
  std::ostringstream out, err;
  const char* argv[] = {"rnatc", "demo"};
  const int code = cli::run(2, argv, out, err);
  const std::string text = out.str();
  const bool pairs = text.find("base pairs matching reference: 16/16") != std::string::npos;
  const bool blocks = text.find("permuted blocks matching reference: 8/8") != std::string::npos;
  const bool sequence = text.find("permuted RNA sequence: UGUCCGCCAUAAGGGCAGACCUCAGUGAUUUA") != std::string::npos;
  const bool block_pairs =
      text.find("(119,102) (187,170) (17,0) (255,238) (51,34) (153,136) (221,204) (85,68)") != std::string::npos;
  report(code == 0 && pairs && blocks && sequence && block_pairs, "worked example (demo)",
         std::string("cells ") + (pairs ? "16/16" : "mismatch") + ", blocks " + (blocks ? "8/8" : "mismatch") +
             ", sequence " + (sequence ? "match" : "mismatch") + ", block pairs " + (block_pairs ? "match" : "mismatch"));
}

void key_material() {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> h(0.01, 0.3), mu(0.0, 0.3), x(-2.0, 2.0);
  std::uniform_int_distribution<std::size_t> steps(65, 4000);
  int perms = 0, errors = 0;
  for (int i = 0; i < 1000; ++i) {
    VdpParams p;
    p.h = h(rng);
    p.mu = mu(rng);
    p.x0 = x(rng);
    p.v0 = x(rng);
    p.steps = steps(rng);
    try {
      const PermKey65 k = derive_k3(p);
      std::array<bool, 65> seen{};
      bool ok = true;
      for (std::uint8_t v : k.values()) {
        if (v > 64 || seen[v]) ok = false;
        else seen[v] = true;
      }
      perms += ok;
    } catch (const Error&) {
      ++errors;
    }
  }

  ByteMatrix all(16, 16);
  for (int v = 0; v < 256; ++v) all.at(static_cast<std::size_t>(v / 16), static_cast<std::size_t>(v % 16)) = static_cast<std::uint8_t>(v);
  const TritMatrix trits = derive_k1(all);
  bool trits_ok = true;
  for (std::size_t i = 0; i < 256; ++i) trits_ok = trits_ok && trits.data()[i] <= 2 && trits.data()[i] == i % 3;
  const KeySet defaults = generate_keyset({}, {}, 256, 256);
  for (std::uint8_t t : defaults.k1.data()) trits_ok = trits_ok && t <= 2;

  const std::uint64_t fp = keyset_fingerprint(defaults);
  char hex[32];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fp));
  report(perms == 1000 && trits_ok && fp == kGoldenFingerprint, "key material",
         "k3 permutations " + std::to_string(perms) + "/1000 (" + std::to_string(errors) + " errors), k1 trits " +
             (trits_ok ? "ok" : "bad") + ", fingerprint 0x" + hex);
}

void oracle_equivalence() {
  long mismatches = 0;
  for (int p = 0; p < 256; ++p) {
    for (int s = 0; s < 256; ++s) {
      const auto pb = static_cast<std::uint8_t>(p), sb = static_cast<std::uint8_t>(s);
      for (int k2 : {0, 1, 79, 250, 255}) mismatches += op1(pb, sb, static_cast<std::uint8_t>(k2)) != oracle::op1(p, s, k2);
      for (int n = 1; n <= 7; ++n) mismatches += op2(pb, sb, n) != oracle::op2(pb, sb, n);
      mismatches += op3(pb, sb) != oracle::op3(pb, sb);
    }
  }
  // op3 witness: two plaintexts under the same s with equal output.
  bool witness = false;
  std::string w;
  for (int s = 0; s < 256 && !witness; ++s) {
    std::array<int, 256> first;
    first.fill(-1);
    for (int p = 0; p < 256; ++p) {
      const std::uint8_t c = op3(static_cast<std::uint8_t>(p), static_cast<std::uint8_t>(s));
      if (first[c] >= 0) {
        witness = true;
        w = "op3(" + std::to_string(first[c]) + "," + std::to_string(s) + ") = op3(" + std::to_string(p) + "," +
            std::to_string(s) + ") = " + std::to_string(c);
        break;
      }
      first[c] = p;
    }
  }
  report(mismatches == 0 && witness, "op oracles (65536 pairs) + op3 witness",
         std::to_string(mismatches) + " mismatches; " + (witness ? w : "no witness"));
}

}  // namespace

int main() {
  round_trip();
  statistics(encrypt_natural_images());
  worked_example();
  key_material();
  oracle_equivalence();
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
