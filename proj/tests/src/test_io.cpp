/*
 * Copyright 2026 The notchlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "notchlab/coeff_file.hpp"
#include "notchlab/csv.hpp"
#include "notchlab/errors.hpp"
#include "notchlab/filter_design.hpp"
#include "notchlab/quantize.hpp"
#include "notchlab/response.hpp"
#include "notchlab/wav.hpp"

namespace {

using namespace notchlab;
namespace fs = std::filesystem;

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "notchlab-io-tests";
  fs::create_directories(dir);
  return dir;
}

std::vector<char> slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::vector<char>(std::istreambuf_iterator<char>(in),
                           std::istreambuf_iterator<char>());
}

void spit(const fs::path& path, const std::vector<char>& bytes) {
  std::ofstream out(path, std::ios::binary);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

TEST_SUITE("io") {

TEST_CASE("wav files round-trip samples and sample rate") {
  std::vector<std::int16_t> samples;
  for (int i = 0; i < 1000; ++i) {
    samples.push_back(static_cast<std::int16_t>(
        12800.0 * std::sin(2.0 * 3.14159265358979 * 315.0 * i / 7400.0)));
  }
  samples.push_back(std::numeric_limits<std::int16_t>::min());
  samples.push_back(std::numeric_limits<std::int16_t>::max());

  const fs::path path = scratch_dir() / "roundtrip.wav";
  write_wav(path, 7400, samples);
  const WavData back = read_wav(path);
  CHECK(back.sample_rate_hz == 7400);
  CHECK(back.samples == samples);
  CHECK(fs::file_size(path) == 44 + samples.size() * 2);
}

TEST_CASE("wav reader rejects everything but mono 16-bit PCM") {
  const fs::path good_path = scratch_dir() / "template.wav";
  write_wav(good_path, 7400, std::vector<std::int16_t>{0, 100, -100, 50});
  const std::vector<char> good = slurp(good_path);
  const fs::path bad_path = scratch_dir() / "broken.wav";

  SUBCASE("bad RIFF magic") {
    std::vector<char> bytes = good;
    bytes[0] = 'X';
    spit(bad_path, bytes);
    CHECK_THROWS_AS(read_wav(bad_path), FormatError);
  }
  SUBCASE("bad WAVE tag") {
    std::vector<char> bytes = good;
    bytes[8] = 'X';
    spit(bad_path, bytes);
    CHECK_THROWS_AS(read_wav(bad_path), FormatError);
  }
  SUBCASE("IEEE-float format tag") {
    std::vector<char> bytes = good;
    bytes[20] = 3;  // fmt.audio_format lives at offset 20 in a canonical file
    spit(bad_path, bytes);
    CHECK_THROWS_AS(read_wav(bad_path), FormatError);
  }
  SUBCASE("stereo") {
    std::vector<char> bytes = good;
    bytes[22] = 2;  // fmt.num_channels
    spit(bad_path, bytes);
    CHECK_THROWS_AS(read_wav(bad_path), FormatError);
  }
  SUBCASE("8-bit samples") {
    std::vector<char> bytes = good;
    bytes[34] = 8;  // fmt.bits_per_sample
    spit(bad_path, bytes);
    CHECK_THROWS_AS(read_wav(bad_path), FormatError);
  }
  SUBCASE("truncated data chunk") {
    std::vector<char> bytes = good;
    bytes.resize(bytes.size() - 3);
    spit(bad_path, bytes);
    CHECK_THROWS_AS(read_wav(bad_path), FormatError);
  }
  SUBCASE("not a wav at all") {
    spit(bad_path, {'h', 'e', 'l', 'l', 'o'});
    CHECK_THROWS_AS(read_wav(bad_path), FormatError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(read_wav(scratch_dir() / "no-such-file.wav"), FormatError);
  }
}

TEST_CASE("write_wav validates the sample rate") {
  CHECK_THROWS_AS(write_wav(scratch_dir() / "zero.wav", 0, std::vector<std::int16_t>{1}),
                  FormatError);
}

TEST_CASE("16-to-8-bit conversion rounds and clamps") {
  CHECK(to_sample8(std::int16_t{0}) == 0);
  CHECK(to_sample8(std::int16_t{127}) == 0);    // rounds down: (127+128)>>8 = 0
  CHECK(to_sample8(std::int16_t{128}) == 1);    // rounds up: (128+128)>>8 = 1
  CHECK(to_sample8(std::int16_t{255}) == 1);
  CHECK(to_sample8(std::int16_t{-129}) == -1);
  CHECK(to_sample8(std::int16_t{-128}) == 0);
  CHECK(to_sample8(std::numeric_limits<std::int16_t>::max()) == 127);
  CHECK(to_sample8(std::numeric_limits<std::int16_t>::min()) == -128);
  CHECK(to_sample8(std::int16_t{32640}) == 127);   // would round to 128: clamps
  CHECK(to_sample8(std::int16_t{12800}) == 50);

  CHECK(to_sample16(std::int8_t{50}) == 12800);
  CHECK(to_sample16(std::int8_t{-128}) == -32768);
  CHECK(to_sample16(std::int8_t{127}) == 32512);

  const std::vector<std::int16_t> wide{0, 128, -32768, 32767};
  const auto narrow = to_sample8(wide);
  REQUIRE(narrow.size() == 4);
  CHECK(narrow[0] == 0);
  CHECK(narrow[1] == 1);
  CHECK(narrow[2] == -128);
  CHECK(narrow[3] == 127);
  const auto widened = to_sample16(narrow);
  CHECK(widened[2] == -32768);
  CHECK(widened[3] == 32512);
}

TEST_CASE("insulation csv round-trips and validates its header") {
  InsulationCurve curve{{50.0, 30.0}, {63.0, 32.5}, {80.0, 34.25}};
  std::ostringstream out;
  write_insulation_csv(out, curve);
  CHECK(out.str().rfind("freq_hz,r_db\n", 0) == 0);

  std::istringstream in(out.str());
  const InsulationCurve back = read_insulation_csv(in);
  REQUIRE(back.size() == 3);
  CHECK(back[1].freq_hz == 63.0);
  CHECK(back[1].r_db == 32.5);

  std::istringstream wrong_header("freq_hz,insulation_db\n50,30\n");
  try {
    read_insulation_csv(wrong_header);
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
}

TEST_CASE("csv parse errors carry the offending line number") {
  std::istringstream bad_number("freq_hz,r_db\n50,30\n63,thirty\n");
  try {
    read_insulation_csv(bad_number);
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }

  std::istringstream bad_count("freq_hz,r_db\n50,30,7\n");
  CHECK_THROWS_AS(read_insulation_csv(bad_count), FormatError);

  std::istringstream empty("");
  CHECK_THROWS_AS(read_insulation_csv(empty), FormatError);
}

TEST_CASE("csv readers tolerate CRLF and blank lines") {
  std::istringstream in("freq_hz,r_db\r\n50,30\r\n\r\n63,32\r\n");
  const InsulationCurve curve = read_insulation_csv(in);
  REQUIRE(curve.size() == 2);
  CHECK(curve[1].freq_hz == 63.0);
}

TEST_CASE("response csv round-trips including silent points") {
  const Cascade c = cascade({design_notch({315.0, 7400.0, 0.99})});
  ResponseCurve curve = sweep(c, 7400.0, 64);
  ResponsePoint silent;
  silent.freq_hz = 3701.0;  // synthetic extra row; value content is what matters
  silent.magnitude = 0.0;
  silent.magnitude_db = -std::numeric_limits<double>::infinity();
  silent.phase_rad = 0.0;
  curve.points.push_back(silent);

  std::ostringstream out;
  write_response_csv(out, curve);
  CHECK(out.str().rfind("freq_hz,magnitude,magnitude_db,phase_rad\n", 0) == 0);
  CHECK(out.str().find("-inf") != std::string::npos);

  std::istringstream in(out.str());
  const ResponseCurve back = read_response_csv(in);
  REQUIRE(back.points.size() == curve.points.size());
  for (std::size_t i = 0; i + 1 < back.points.size(); ++i) {
    CHECK(back.points[i].freq_hz == curve.points[i].freq_hz);
    CHECK(back.points[i].magnitude == curve.points[i].magnitude);
    CHECK(back.points[i].magnitude_db == curve.points[i].magnitude_db);
    CHECK(back.points[i].phase_rad == curve.points[i].phase_rad);
  }
  CHECK(back.points.back().magnitude_db ==
        -std::numeric_limits<double>::infinity());
}

TEST_CASE("spectrum csv keeps dB values and recovers linear power") {
  Spectrum s;
  SpectrumPoint p0{0.0, 1.0, 0.0};
  SpectrumPoint p1{7.2265625, 0.25, 10.0 * std::log10(0.25)};
  SpectrumPoint p2{14.453125, 0.0, -std::numeric_limits<double>::infinity()};
  s = {p0, p1, p2};

  std::ostringstream out;
  write_spectrum_csv(out, s);
  CHECK(out.str().rfind("freq_hz,magnitude_db\n", 0) == 0);

  std::istringstream in(out.str());
  const Spectrum back = read_spectrum_csv(in);
  REQUIRE(back.size() == 3);
  CHECK(back[0].power == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(back[1].power == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(back[1].power_db == doctest::Approx(10.0 * std::log10(0.25)).epsilon(1e-12));
  CHECK(back[2].power == 0.0);
  CHECK(back[2].power_db == -std::numeric_limits<double>::infinity());
}

TEST_CASE("coefficient files round-trip losslessly") {
  CoefficientFile file;
  file.sample_rate_hz = 7400.0;
  const Biquad d1 = design_notch({315.0, 7400.0, 0.99});
  const Biquad d2 = design_notch({2500.0, 7400.0, 0.99});
  file.sections.push_back({d1, quantize(d1)});
  file.sections.push_back({d2, std::nullopt});  // quantized block is optional

  const fs::path path = scratch_dir() / "cascade.nlc";
  write_coefficient_file(path, file);
  const CoefficientFile back = read_coefficient_file(path);

  CHECK(back.sample_rate_hz == 7400.0);
  REQUIRE(back.sections.size() == 2);
  CHECK(back.sections[0].design.a1 == d1.a1);
  CHECK(back.sections[0].design.b1 == d1.b1);
  CHECK(back.sections[0].design.b2 == d1.b2);
  REQUIRE(back.sections[0].quantized.has_value());
  CHECK(back.sections[0].quantized->a1_word == -63206);
  CHECK(back.sections[0].quantized->b1_word == -62574);
  CHECK(back.sections[0].quantized->b2_word == 32115);
  CHECK(back.sections[0].quantized->format.fraction_bits == 15);
  CHECK(back.sections[1].design.a1 == d2.a1);
  CHECK_FALSE(back.sections[1].quantized.has_value());

  const Cascade c = design_cascade(back);
  REQUIRE(c.sections.size() == 2);
  CHECK(c.sections[1].b2 == d2.b2);

  // A second write of the parsed file is byte-identical: the format is
  // deterministic and floats are rendered losslessly.
  std::ostringstream first, second;
  write_coefficient_file(first, file);
  write_coefficient_file(second, back);
  CHECK(first.str() == second.str());
}

TEST_CASE("coefficient reader accepts comments and any key order") {
  std::istringstream in(
      "# cascade for the studio wall\n"
      "notchlab-coefficients 1\n"
      "sample_rate_hz 7400\n"
      "sections 1\n"
      "\n"
      "section 1\n"
      "b2 0.9801\n"
      "a2 1\n"
      "b1 -1.9096017078459816\n"
      "a1 -1.9288906139858453\n"
      "# a0 stays at unity for the fixed-point engine\n"
      "a0 1\n"
      "\n");
  const CoefficientFile file = read_coefficient_file(in);
  REQUIRE(file.sections.size() == 1);
  CHECK(file.sections[0].design.a1 == -1.9288906139858453);
  CHECK(file.sections[0].design.b2 == 0.9801);
  CHECK_FALSE(file.sections[0].quantized.has_value());
}

TEST_CASE("coefficient reader rejects structural problems") {
  auto expect_format_error = [](const std::string& text, const std::string& needle) {
    std::istringstream in(text);
    try {
      read_coefficient_file(in);
      FAIL_CHECK("expected FormatError for: " << needle);
    } catch (const FormatError& e) {
      CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos,
                    "message was: " << e.what());
    }
  };

  const std::string header = "notchlab-coefficients 1\nsample_rate_hz 7400\n";
  const std::string body =
      "section 1\na0 1\na1 -1.9\na2 1\nb1 -1.88\nb2 0.98\n";

  expect_format_error("bogus 1\n" + header + "sections 1\n" + body,
                      "not a coefficient file");
  expect_format_error(header + "sections 2\n" + body, "section");
  expect_format_error(header + "sections 1\nsection 1\na0 1\na1 -1.9\na2 1\nb1 -1.88\n",
                      "b2");
  expect_format_error(header + "sections 1\n" + body + "b2 0.98\n", "duplicate");
  expect_format_error(header + "sections 1\n" + body + "frobnicate 3\n", "frobnicate");
  expect_format_error(header + "sections 1\nsection 2\n", "section");
  expect_format_error(header + "sections 0\n", "sections");
  expect_format_error("notchlab-coefficients 2\n", "version");
  // An incomplete quantized block: words without fraction_bits.
  expect_format_error(header + "sections 1\n" + body +
                          "a1_word -63206\nb1_word -62574\nb2_word 32115\n",
                      "fraction_bits");
  expect_format_error(header + "sections 1\n" + body + "fraction_bits 63\n",
                      "fraction_bits");
}

TEST_CASE("coefficient file io reports filesystem failures as FormatError") {
  CHECK_THROWS_AS(read_coefficient_file(scratch_dir() / "missing.nlc"), FormatError);
  CoefficientFile file;
  file.sections.push_back({Biquad{}, std::nullopt});
  CHECK_THROWS_AS(
      write_coefficient_file(scratch_dir() / "no-such-dir" / "x.nlc", file),
      FormatError);
}

}  // TEST_SUITE

}  // namespace
