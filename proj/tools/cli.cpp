#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "rnatc/analysis.hpp"
#include "rnatc/cipher.hpp"
#include "rnatc/error.hpp"
#include "rnatc/keyfile.hpp"
#include "rnatc/pgm.hpp"
#include "rnatc/report.hpp"
#include "rnatc/rna_codec.hpp"

namespace rnatc::cli {
namespace fs = std::filesystem;

namespace {

struct CipherArgs {
  std::string input;
  std::string output;
  std::string key;
  std::string sbox;
  std::string mode = "paper-exact";
  int shift = 3;
  int rounds = 1;
};

struct KeygenArgs {
  std::string key;
  std::string output;
  std::string like;
  std::string emit_params;
  std::size_t width = 0;
  std::size_t height = 0;
};

struct AnalyzeArgs {
  std::string input;
  std::string output;
  std::string report = "csv";
  std::string histogram;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  int glcm_levels = 8;
};

void require_file(const std::string& path, const char* what) {
  if (!fs::is_regular_file(path)) throw IoError(std::string(what) + " not found: " + path);
}

// Writes to `path`, or to `out` when path is empty or "-".
template <typename Fn>
void emit(const std::string& path, std::ostream& out, Fn&& write) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path + " for writing");
  write(file);
  if (!file) throw IoError("write failed: " + path);
}

KeyParams load_params(const std::string& path) {
  if (path.empty()) return {};
  require_file(path, "key file");
  return read_key_file(path);
}

Cipher make_cipher(const CipherArgs& a, const GrayImage& img) {
  const KeyParams params = load_params(a.key);
  CipherConfig cfg;
  cfg.substitution.mode = a.mode == "invertible" ? SubstitutionMode::Invertible : SubstitutionMode::PaperExact;
  cfg.substitution.shift = a.shift;
  cfg.rounds = a.rounds;
  SBox sbox = a.sbox.empty() ? SBox::aes() : read_sbox_hex(fs::path(a.sbox));
  KeySet keys = generate_keyset(params.dejong, params.vanderpol, img.height(), img.width());
  return Cipher(std::move(keys), sbox, cfg);
}

void run_cipher(const CipherArgs& a, bool decrypting) {
  require_file(a.input, "input image");
  require_file(a.key, "key file");
  if (!a.sbox.empty()) require_file(a.sbox, "s-box file");
  if (decrypting && a.mode != "invertible") {
    throw UnsupportedModeError("decrypt requires --mode invertible");
  }
  const GrayImage img = read_pgm(fs::path(a.input));
  const Cipher cipher = make_cipher(a, img);
  const GrayImage result = decrypting ? cipher.decrypt(img) : cipher.encrypt(img);
  write_pgm(fs::path(a.output), result);
}

void run_keygen(const KeygenArgs& a, std::ostream& out) {
  const KeyParams params = load_params(a.key);
  if (!a.emit_params.empty()) write_key_file(a.emit_params, params);
  std::size_t width = a.width;
  std::size_t height = a.height;
  if (!a.like.empty()) {
    require_file(a.like, "reference image");
    const GrayImage ref = read_pgm(fs::path(a.like));
    width = ref.width();
    height = ref.height();
  }
  if (width == 0 || height == 0) {
    if (!a.emit_params.empty()) return;
    throw std::invalid_argument("keygen needs --width and --height, or --like");
  }
  const KeySet keys = generate_keyset(params.dejong, params.vanderpol, height, width);
  emit(a.output, out, [&](std::ostream& o) { o << keyset_to_json(keys).dump() << '\n'; });
}

void run_analyze(const AnalyzeArgs& a, std::ostream& out) {
  require_file(a.input, "input image");
  const GrayImage img = read_pgm(fs::path(a.input));
  AnalysisOptions opts;
  opts.glcm_levels = a.glcm_levels;
  opts.seed = a.seed;
  if (a.samples > 0) opts.samples = a.samples;
  const AnalysisReport report = analyze(img, opts);
  emit(a.output, out, [&](std::ostream& o) {
    if (a.report == "json") {
      o << report_to_json(report).dump(2) << '\n';
    } else {
      write_report_csv(o, report);
    }
  });
  if (!a.histogram.empty()) {
    emit(a.histogram, out, [&](std::ostream& o) { write_histogram_csv(o, report.histogram); });
  }
}

void print_matrix(std::ostream& out, const GrayImage& img) {
  for (std::size_t r = 0; r < img.height(); ++r) {
    out << ' ';
    for (std::size_t c = 0; c < img.width(); ++c) out << ' ' << std::setw(3) << int(img.at(r, c));
    out << '\n';
  }
}

std::string block_string(const RnaSequence& seq, std::size_t block) {
  std::string s;
  for (std::size_t k = 0; k < 4; ++k) s.push_back(to_char(seq.bases[4 * block + k]));
  return s;
}

}  // namespace

WorkedExample worked_example() {
  std::vector<std::uint8_t> px;
  // 255 238 187 170 / 221 204 153 136 / 119 102 51 34 / 85 68 17 0
  for (int v : {255, 238, 187, 170, 221, 204, 153, 136, 119, 102, 51, 34, 85, 68, 17, 0}) {
    px.push_back(static_cast<std::uint8_t>(v));
  }
  return WorkedExample{
      GrayImage(4, 4, std::move(px)),
      {"GG", "GC", "CG", "CC", "GU", "GA", "CU", "CA", "UG", "UC", "AG", "AC", "UU", "UA", "AU", "AA"},
      {"UGUC", "CGCC", "AUAA", "GGGC", "AGAC", "CUCA", "GUGA", "UUUA"},
  };
}

BlockPermutation permutation_to_order(const GrayImage& img, const std::array<std::string, 8>& target) {
  const RnaSequence seq = encode_image(img);
  const std::size_t blocks = block_count(img);
  if (blocks != target.size()) throw FormatError("reference order does not match the image block count");
  std::vector<std::size_t> mapping(blocks);
  for (std::size_t i = 0; i < blocks; ++i) {
    const std::string b = block_string(seq, i);
    std::size_t hits = 0;
    for (std::size_t pos = 0; pos < target.size(); ++pos) {
      if (target[pos] == b) {
        mapping[i] = pos;
        ++hits;
      }
    }
    if (hits != 1) throw FormatError("block " + b + " does not occur exactly once in the reference order");
  }
  return BlockPermutation(std::move(mapping));
}

void print_demo(std::ostream& out) {
  const WorkedExample ex = worked_example();
  const GrayImage& img = ex.plaintext;
  const RnaSequence seq = encode_image(img);

  out << "plaintext (4x4):\n";
  print_matrix(out, img);

  out << "base pairs:\n";
  std::size_t matched = 0;
  for (std::size_t r = 0; r < 4; ++r) {
    out << "  ";
    for (std::size_t c = 0; c < 4; ++c) {
      const std::size_t i = r * 4 + c;
      const auto [b1, b2] = encode_pixel(img.at(r, c));
      const std::string pair{to_char(b1), to_char(b2)};
      if (pair == ex.reference_pairs[i]) ++matched;
      out << ' ' << std::setw(3) << int(img.at(r, c)) << "->" << pair;
    }
    out << '\n';
  }
  out << "base pairs matching reference: " << matched << "/16\n";

  out << "RNA sequence (row-major): " << seq.to_string() << '\n';
  out << "blocks:";
  for (std::size_t b = 0; b < block_count(img); ++b) out << ' ' << block_string(seq, b);
  out << '\n';

  const BlockPermutation perm = permutation_to_order(img, ex.reference_permuted_blocks);
  out << "injected permutation:";
  for (std::size_t v : perm.mapping()) out << ' ' << v;
  out << '\n';

  const GrayImage shuffled = permute_blocks(img, perm);
  const RnaSequence shuffled_seq = encode_image(shuffled);
  out << "permuted RNA sequence: " << shuffled_seq.to_string() << '\n';
  out << "permuted block pairs:";
  std::size_t order_matched = 0;
  for (std::size_t b = 0; b < block_count(shuffled); ++b) {
    out << " (" << int(shuffled.pixels()[2 * b]) << ',' << int(shuffled.pixels()[2 * b + 1]) << ')';
    if (block_string(shuffled_seq, b) == ex.reference_permuted_blocks[b]) ++order_matched;
  }
  out << '\n';
  out << "permuted blocks matching reference: " << order_matched << "/8\n";
  out << "RNA-permuted image (row-major):\n";
  print_matrix(out, shuffled);

  const KeySet keys = generate_keyset({}, {}, img.height(), img.width());
  const GrayImage cipher = encrypt(img, keys);
  out << "encrypted with default parameters (paper-exact, AES s-box, k2=" << int(keys.k2) << "):\n";
  print_matrix(out, cipher);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"RNA-encoding chaotic image cipher and statistical analysis", "rnatc"};
  app.require_subcommand(1);

  CipherArgs enc;
  CipherArgs dec;
  for (auto [name, args, desc] : {std::tuple{"encrypt", &enc, "Encrypt a binary PGM image"},
                                  std::tuple{"decrypt", &dec, "Decrypt a binary PGM image (invertible mode)"}}) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("-i,--input", args->input, "Input PGM (P5)")->required();
    sub->add_option("-o,--output", args->output, "Output PGM")->required();
    sub->add_option("--key", args->key, "Key parameter file (JSON)")->required();
    sub->add_option("--mode", args->mode, "paper-exact or invertible")
        ->check(CLI::IsMember({"paper-exact", "invertible"}))
        ->capture_default_str();
    sub->add_option("--shift", args->shift, "Shift amount n for O2")->check(CLI::Range(1, 7))->capture_default_str();
    sub->add_option("--rounds", args->rounds, "Pipeline rounds")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--sbox", args->sbox, "S-box hex file (256 lines); AES table by default");
  }

  KeygenArgs kg;
  auto* keygen = app.add_subcommand("keygen", "Derive the key set for an image size");
  keygen->add_option("--key", kg.key, "Key parameter file (JSON); paper defaults if omitted");
  keygen->add_option("--width", kg.width, "Image width");
  keygen->add_option("--height", kg.height, "Image height");
  keygen->add_option("--like", kg.like, "Take the size from this PGM");
  keygen->add_option("-o,--output", kg.output, "Key set JSON output (stdout by default)");
  keygen->add_option("--emit-params", kg.emit_params, "Also write the parameter file in use");

  AnalyzeArgs an;
  auto* analyze_cmd = app.add_subcommand("analyze", "Statistical security report for a PGM image");
  analyze_cmd->add_option("-i,--input", an.input, "Input PGM (P5)")->required();
  analyze_cmd->add_option("-o,--output", an.output, "Report output (stdout by default)");
  analyze_cmd->add_option("--report", an.report, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  analyze_cmd->add_option("--histogram", an.histogram, "Write the 256-row histogram CSV here");
  analyze_cmd->add_option("--seed", an.seed, "Seed for sampled adjacency correlation")->capture_default_str();
  analyze_cmd->add_option("--samples", an.samples, "Pairs per direction (0 = all pairs)")->capture_default_str();
  analyze_cmd->add_option("--glcm-levels", an.glcm_levels, "Gray levels for GLCM statistics")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();

  auto* demo = app.add_subcommand("demo", "Walk through the 4x4 worked example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (app.got_subcommand("encrypt")) {
      run_cipher(enc, false);
    } else if (app.got_subcommand("decrypt")) {
      run_cipher(dec, true);
    } else if (app.got_subcommand(keygen)) {
      run_keygen(kg, out);
    } else if (app.got_subcommand(analyze_cmd)) {
      run_analyze(an, out);
    } else if (app.got_subcommand(demo)) {
      print_demo(out);
    }
  } catch (const UnsupportedModeError& e) {
    err << "rnatc: " << e.what() << '\n';
    return kUnsupportedMode;
  } catch (const IoError& e) {
    err << "rnatc: " << e.what() << '\n';
    return kIoError;
  } catch (const FormatError& e) {
    err << "rnatc: " << e.what() << '\n';
    return kFormatError;
  } catch (const DimensionError& e) {
    err << "rnatc: " << e.what() << '\n';
    return kFormatError;
  } catch (const GenerationError& e) {
    err << "rnatc: " << e.what() << '\n';
    return kGenerationError;
  } catch (const std::invalid_argument& e) {
    err << "rnatc: " << e.what() << '\n';
    return kUsageError;
  }
  return kOk;
}

}  // namespace rnatc::cli
