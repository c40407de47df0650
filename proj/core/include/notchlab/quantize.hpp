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

#include <complex>
#include <cstdint>
#include <vector>

#include "notchlab/filter_design.hpp"

namespace notchlab {

enum class Rounding {
  kTruncate,     // two's-complement bit truncation, i.e. floor; |error| < 1 LSB.
                 // This is what dropping fraction bits in hardware does, and it
                 // is the mode that reproduces the reference coefficient words.
  kNearestAway,  // round to nearest, ties away from zero; |error| <= 1/2 LSB
  kNearestEven,  // round to nearest, ties to even; |error| <= 1/2 LSB
};

struct FixedFormat {
  int fraction_bits = 15;  // step = 2^-fraction_bits; must be in [1, 62]
  Rounding rounding = Rounding::kTruncate;
};

// A second-order section with a0 = a2 = 1 hardwired and the remaining three
// coefficients held as signed integer words on the 2^-fraction_bits grid.
struct QuantizedBiquad {
  std::int64_t a1_word = 0;
  std::int64_t b1_word = 0;
  std::int64_t b2_word = 0;
  FixedFormat format;

  double a1() const;
  double b1() const;
  double b2() const;
};

// Round one value onto the fixed-point grid, returning the integer word.
// Throws std::invalid_argument for fraction_bits outside [1, 62] and
// std::range_error if the scaled value overflows the 64-bit word.
std::int64_t quantize_value(double value, const FixedFormat& format);

// Quantize a section's free coefficients (a1, b1, b2). The fixed-point form
// hardwires a0 = a2 = 1, so any other unity coefficients are rejected with
// std::invalid_argument.
QuantizedBiquad quantize(const Biquad& filter, const FixedFormat& format = {});

// The quantized section as floating-point coefficients again.
Biquad as_biquad(const QuantizedBiquad& q);

// How far each root moved under quantization. Roots are paired by smaller
// worst-case distance over the two possible matchings of a conjugate pair.
struct DriftReport {
  struct RootPair {
    std::complex<double> original;
    std::complex<double> quantized;
    double distance = 0.0;
  };
  std::vector<RootPair> zeros;
  std::vector<RootPair> poles;
  double max_zero_drift = 0.0;
  double max_pole_drift = 0.0;
};

DriftReport drift(const Biquad& original, const QuantizedBiquad& quantized);

// Per-section headroom guide: the L1 norm of the section's impulse response
// (truncated at n_terms samples) bounds the worst-case output amplitude for
// bounded input, so inputs scaled by 1/norm cannot overflow that section.
struct SectionScaling {
  double l1_norm = 0.0;
  double input_scale = 0.0;  // 1 / l1_norm
};

// Throws std::domain_error if a section is unstable (the norm diverges) and
// std::invalid_argument for n_terms == 0. The default truncation point leaves
// a tail below 1e-12 for pole radii up to ~0.993; pass a larger n_terms for
// poles closer to the unit circle.
std::vector<SectionScaling> scaling_factor(const Cascade& filter,
                                           std::size_t n_terms = 4096);

}  // namespace notchlab
