#include <filesystem>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "rnatc/error.hpp"
#include "rnatc/keyfile.hpp"
#include "rnatc/pgm.hpp"
#include "rnatc/report.hpp"

using namespace rnatc;

TEST_SUITE("io") {
  TEST_CASE("PGM round trip is byte-preserving") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::size_t> dim(1, 50);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t w = dim(rng), h = dim(rng);
      const GrayImage img = oracle::random_image(w, h, rng);
      std::string file = "P5\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
      file.append(reinterpret_cast<const char*>(img.pixels().data()), img.pixel_count());

      std::istringstream in(file);
      const GrayImage read = read_pgm(in);
      REQUIRE(read == img);
      std::ostringstream out;
      write_pgm(out, read);
      REQUIRE(out.str() == file);
    }
  }

  TEST_CASE("PGM header with comments") {
    std::string file = "P5\n# made by hand\n3 # width\n1\n255\n";
    file += std::string("\x01\x02\xff", 3);
    std::istringstream in(file);
    CHECK(read_pgm(in) == GrayImage(3, 1, {1, 2, 255}));
  }

  TEST_CASE("PGM errors") {
    auto parse = [](const std::string& s) {
      std::istringstream in(s);
      return read_pgm(in);
    };
    CHECK_THROWS_AS(parse("P2\n1 1\n255\n0"), FormatError);
    CHECK_THROWS_AS(parse("P5\n2 2\n255\n\x01"), FormatError);
    CHECK_THROWS_AS(parse("P5\n2 2\n65535\n"), FormatError);
    CHECK_THROWS_AS(parse("P5\n0 2\n255\n"), FormatError);
    CHECK_THROWS_AS(parse("P5\nx 2\n255\n"), FormatError);
    CHECK_THROWS_AS(read_pgm(std::filesystem::path("/nonexistent/x.pgm")), IoError);
  }

  TEST_CASE("key file JSON") {
    KeyParams p;
    p.dejong.alpha = 1.25;
    p.vanderpol.steps = 500;
    const KeyParams back = key_params_from_json(key_params_to_json(p));
    CHECK(back.dejong == p.dejong);
    CHECK(back.vanderpol == p.vanderpol);

    const auto partial = key_params_from_json(nlohmann::json::parse(R"({"dejong": {"x0": 0.5}})"));
    CHECK(partial.dejong.x0 == 0.5);
    CHECK(partial.dejong.alpha == 1.4);

    CHECK_THROWS_AS(key_params_from_json(nlohmann::json::parse(R"({"dejong": {"alpah": 1}})")), FormatError);
    CHECK_THROWS_AS(key_params_from_json(nlohmann::json::parse(R"({"vanderpol": {"h": -1}})")), FormatError);
    CHECK_THROWS_AS(key_params_from_json(nlohmann::json::parse(R"({"vanderpol": {"steps": 10}})")), FormatError);
    CHECK_THROWS_AS(key_params_from_json(nlohmann::json::parse(R"({"dejong": {"beta": "x"}})")), FormatError);
    CHECK_THROWS_AS(key_params_from_json(nlohmann::json::parse("[1]")), FormatError);
  }

  TEST_CASE("key set JSON") {
    const KeySet keys = generate_keyset({}, {}, 5, 7);
    const auto doc = keyset_to_json(keys);
    CHECK(doc["rows"] == 5);
    CHECK(doc["cols"] == 7);
    CHECK(doc["k1"].size() == 35);
    CHECK(doc["k3"].size() == 65);
    const KeySet back = keyset_from_json(doc);
    CHECK(back.k1 == keys.k1);
    CHECK(back.k2 == keys.k2);
    CHECK(back.k3 == keys.k3);
    CHECK(keyset_fingerprint(back) == keyset_fingerprint(keys));

    auto bad = doc;
    bad["k1"][0] = 3;
    CHECK_THROWS_AS(keyset_from_json(bad), FormatError);
    bad = doc;
    bad["k3"][0] = bad["k3"][1];
    CHECK_THROWS_AS(keyset_from_json(bad), FormatError);
    bad = doc;
    bad.erase("k2");
    CHECK_THROWS_AS(keyset_from_json(bad), FormatError);
  }

  TEST_CASE("report export") {
    AnalysisReport r;
    r.entropy = 7.5;
    r.histogram[3] = 9;
    r.glcm.contrast = 1.5;
    r.horizontal = 0.25;

    std::ostringstream csv;
    write_report_csv(csv, r);
    const std::string text = csv.str();
    CHECK(text.find("metric,value\n") == 0);
    CHECK(text.find("entropy,7.5\n") != std::string::npos);
    CHECK(text.find("glcm_correlation,nan\n") != std::string::npos);
    CHECK(text.find("correlation_horizontal,0.25\n") != std::string::npos);

    const auto doc = report_to_json(r);
    CHECK(doc["entropy"] == 7.5);
    CHECK(doc["glcm"]["correlation"].is_null());
    CHECK(doc["adjacency"]["horizontal"] == 0.25);
    CHECK(doc["histogram"][3] == 9);

    std::ostringstream hist;
    write_histogram_csv(hist, r.histogram);
    std::size_t lines = 0;
    for (char c : hist.str()) lines += c == '\n';
    CHECK(lines == 257);
    CHECK(hist.str().find("\n3,9\n") != std::string::npos);
  }
}
