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

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "notchlab/filter_design.hpp"
#include "notchlab/quantize.hpp"

namespace notchlab {

// Bit-exact software model of a hardware second-order section that works on
// signed 8-bit samples with coefficient words on the 2^-15 grid:
//
//   acc  = (x + x2) << 15  +  a1w*x1  -  b1w*y1  -  b2w*y2      (a0 = a2 = 1)
//   y    = saturate_8(round_half_away(acc >> 15))
//
// The three multiplications are table lookups: one 256-entry table per
// coefficient, indexed by the 8-bit sample, holding the exact products. The
// per-sample work is therefore three lookups, a shift and a 5-input sum.
// y is requantized to 8 bits before it re-enters the recursion, exactly as a
// datapath with 8-bit state registers does; the resulting rounding error is
// real and measured, not hidden.

// Exact product table for one coefficient word: product(s) = s * word for
// every signed 8-bit sample value s.
class MultiplierLut {
 public:
  // Requires |word| < 2^16 (coefficient words are at most 17 signed bits);
  // throws std::range_error otherwise.
  explicit MultiplierLut(std::int32_t word);

  std::int32_t product(std::int8_t sample) const {
    return table_[static_cast<std::size_t>(static_cast<int>(sample) + 128)];
  }
  std::int32_t word() const { return word_; }

 private:
  std::int32_t word_;
  std::array<std::int32_t, 256> table_;
};

MultiplierLut build_lut(std::int32_t word);

// The section's registers, all holding 8-bit history, plus the last full
// accumulator value for inspection.
struct EngineState {
  std::int8_t x1 = 0;
  std::int8_t x2 = 0;
  std::int8_t y1 = 0;
  std::int8_t y2 = 0;
  std::int32_t accumulator = 0;
};

class SectionEngine {
 public:
  SectionEngine(std::int32_t a1_word, std::int32_t b1_word, std::int32_t b2_word);
  // Requires format.fraction_bits == 15 (the accumulator shift is hardwired);
  // throws std::invalid_argument otherwise.
  explicit SectionEngine(const QuantizedBiquad& q);

  std::int8_t step(std::int8_t x);

  void reset();
  const EngineState& state() const { return state_; }
  std::uint64_t saturation_count() const { return saturations_; }
  std::int32_t peak_accumulator() const { return peak_accumulator_; }

 private:
  MultiplierLut a1_, b1_, b2_;
  EngineState state_;
  std::uint64_t saturations_ = 0;
  std::int32_t peak_accumulator_ = 0;
};

struct RunReport {
  std::uint64_t samples_processed = 0;
  std::vector<std::uint64_t> saturations;        // one entry per section
  std::vector<std::int32_t> peak_accumulators;   // one entry per section
};

struct RunResult {
  std::vector<std::int8_t> samples;
  RunReport report;
};

// Feed samples through the sections in order; each sample passes the whole
// cascade before the next one enters. Engines keep their state, so
// consecutive runs continue where the previous one stopped.
RunResult run(std::span<SectionEngine> engines, std::span<const std::int8_t> samples);

// Double-precision direct-form-I cascade over the same input, the yardstick
// the fixed-point output is compared against. Throws std::domain_error if the
// cascade is unstable.
std::vector<double> run_reference(const Cascade& filter, std::span<const double> samples);

}  // namespace notchlab
