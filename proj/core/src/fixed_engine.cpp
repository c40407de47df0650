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

#include "notchlab/fixed_engine.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "notchlab/response.hpp"

namespace notchlab {

namespace {

std::int32_t checked_word(std::int64_t word) {
  if (word <= -65536 || word >= 65536) {
    throw std::range_error("coefficient word " + std::to_string(word) +
                           " does not fit 17 signed bits");
  }
  return static_cast<std::int32_t>(word);
}

}  // namespace

MultiplierLut::MultiplierLut(std::int32_t word) : word_(checked_word(word)) {
  for (int s = -128; s <= 127; ++s) {
    table_[static_cast<std::size_t>(s + 128)] = s * word_;
  }
}

MultiplierLut build_lut(std::int32_t word) { return MultiplierLut(word); }

SectionEngine::SectionEngine(std::int32_t a1_word, std::int32_t b1_word,
                             std::int32_t b2_word)
    : a1_(a1_word), b1_(b1_word), b2_(b2_word) {}

SectionEngine::SectionEngine(const QuantizedBiquad& q)
    : a1_(checked_word(q.a1_word)),
      b1_(checked_word(q.b1_word)),
      b2_(checked_word(q.b2_word)) {
  if (q.format.fraction_bits != 15) {
    throw std::invalid_argument(
        "the engine's accumulator shift is hardwired to 15 fraction bits, got " +
        std::to_string(q.format.fraction_bits));
  }
}

std::int8_t SectionEngine::step(std::int8_t x) {
  // Five adder inputs: the two unity numerator taps (pre-shifted onto the
  // coefficient grid) and the three table products.
  const std::int32_t acc =
      ((static_cast<std::int32_t>(x) + state_.x2) << 15) + a1_.product(state_.x1) -
      b1_.product(state_.y1) - b2_.product(state_.y2);
  state_.accumulator = acc;
  if (std::abs(acc) > peak_accumulator_) peak_accumulator_ = std::abs(acc);

  // Drop the 15 fraction bits with round-to-nearest, ties away from zero.
  std::int32_t y = acc >= 0 ? (acc + 16384) >> 15 : -((-acc + 16384) >> 15);
  if (y > 127) {
    y = 127;
    ++saturations_;
  } else if (y < -128) {
    y = -128;
    ++saturations_;
  }

  state_.x2 = state_.x1;
  state_.x1 = x;
  state_.y2 = state_.y1;
  state_.y1 = static_cast<std::int8_t>(y);
  return state_.y1;
}

void SectionEngine::reset() {
  state_ = EngineState{};
  saturations_ = 0;
  peak_accumulator_ = 0;
}

RunResult run(std::span<SectionEngine> engines, std::span<const std::int8_t> samples) {
  RunResult result;
  result.samples.reserve(samples.size());
  for (std::int8_t sample : samples) {
    std::int8_t v = sample;
    for (SectionEngine& engine : engines) v = engine.step(v);
    result.samples.push_back(v);
  }
  result.report.samples_processed = samples.size();
  for (const SectionEngine& engine : engines) {
    result.report.saturations.push_back(engine.saturation_count());
    result.report.peak_accumulators.push_back(engine.peak_accumulator());
  }
  return result;
}

std::vector<double> run_reference(const Cascade& filter, std::span<const double> samples) {
  if (!check_stability(filter).stable) {
    throw std::domain_error("reference run requires a stable cascade");
  }
  std::vector<double> signal(samples.begin(), samples.end());
  for (const Biquad& section : filter.sections) {
    double x1 = 0.0, x2 = 0.0, y1 = 0.0, y2 = 0.0;
    for (double& v : signal) {
      const double x = v;
      const double y = section.a0 * x + section.a1 * x1 + section.a2 * x2 -
                       section.b1 * y1 - section.b2 * y2;
      x2 = x1;
      x1 = x;
      y2 = y1;
      y1 = y;
      v = y;
    }
  }
  return signal;
}

}  // namespace notchlab
