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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "notchlab/filter_design.hpp"
#include "notchlab/quantize.hpp"

namespace notchlab {

// Plain-text coefficient file, one section per block:
//
//   notchlab-coefficients 1
//   sample_rate_hz 7400
//   sections 2
//
//   section 1
//   a0 1
//   a1 -1.9288906139858453
//   a2 1
//   b1 -1.9096017078459816
//   b2 0.98009999999999997
//   fraction_bits 15
//   a1_word -63206
//   b1_word -62574
//   b2_word 32115
//
// Blank lines and '#' comments are ignored; keys within a section may appear
// in any order. Floats are rendered at 17 significant digits, so a write/read
// round trip is lossless. The quantized keys (fraction_bits plus the three
// words) are optional per section — sections that cannot run on the
// fixed-point engine (a0 or a2 != 1, e.g. a unity section) are stored without
// them. Readers throw FormatError naming the line on any structural problem:
// bad magic, wrong counts, unknown or duplicate keys, missing required keys,
// an incomplete quantized block, or an unparsable number.

struct CoefficientSection {
  Biquad design;
  std::optional<QuantizedBiquad> quantized;
};

struct CoefficientFile {
  double sample_rate_hz = kDefaultSampleRateHz;
  std::vector<CoefficientSection> sections;
};

CoefficientFile read_coefficient_file(const std::filesystem::path& path);
CoefficientFile read_coefficient_file(std::istream& in);
void write_coefficient_file(std::ostream& out, const CoefficientFile& file);
void write_coefficient_file(const std::filesystem::path& path, const CoefficientFile& file);

// The floating-point cascade described by the file's design coefficients.
Cascade design_cascade(const CoefficientFile& file);

}  // namespace notchlab
