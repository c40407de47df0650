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

#include "notchlab/quantize.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "notchlab/response.hpp"

namespace notchlab {

namespace {

double rounded(double scaled, Rounding mode) {
  switch (mode) {
    case Rounding::kTruncate:
      return std::floor(scaled);
    case Rounding::kNearestAway:
      return std::round(scaled);
    case Rounding::kNearestEven: {
      const double down = std::floor(scaled);
      const double frac = scaled - down;
      if (frac > 0.5) return down + 1.0;
      if (frac < 0.5) return down;
      return std::fmod(down, 2.0) == 0.0 ? down : down + 1.0;
    }
  }
  throw std::invalid_argument("unknown rounding mode");
}

// Pair each original root with the closer of the remaining quantized roots.
// Degree-2 sections give at most two roots, so the greedy pairing is exact.
std::vector<DriftReport::RootPair> pair_roots(std::vector<std::complex<double>> original,
                                              std::vector<std::complex<double>> moved) {
  std::vector<DriftReport::RootPair> pairs;
  pairs.reserve(original.size());
  for (const auto& root : original) {
    if (moved.empty()) break;
    std::size_t best = 0;
    double best_dist = std::abs(moved[0] - root);
    for (std::size_t i = 1; i < moved.size(); ++i) {
      const double dist = std::abs(moved[i] - root);
      if (dist < best_dist) {
        best_dist = dist;
        best = i;
      }
    }
    pairs.push_back({root, moved[best], best_dist});
    moved.erase(moved.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return pairs;
}

double max_distance(const std::vector<DriftReport::RootPair>& pairs) {
  double worst = 0.0;
  for (const auto& p : pairs) worst = std::max(worst, p.distance);
  return worst;
}

}  // namespace

double QuantizedBiquad::a1() const { return std::ldexp(static_cast<double>(a1_word), -format.fraction_bits); }
double QuantizedBiquad::b1() const { return std::ldexp(static_cast<double>(b1_word), -format.fraction_bits); }
double QuantizedBiquad::b2() const { return std::ldexp(static_cast<double>(b2_word), -format.fraction_bits); }

std::int64_t quantize_value(double value, const FixedFormat& format) {
  if (format.fraction_bits < 1 || format.fraction_bits > 62) {
    throw std::invalid_argument("fraction_bits " + std::to_string(format.fraction_bits) +
                                " outside [1, 62]");
  }
  if (!std::isfinite(value)) {
    throw std::range_error("cannot quantize a non-finite value");
  }
  const double word = rounded(std::ldexp(value, format.fraction_bits), format.rounding);
  if (word < -9223372036854775808.0 || word >= 9223372036854775808.0) {
    throw std::range_error("value " + std::to_string(value) + " overflows the 64-bit word at " +
                           std::to_string(format.fraction_bits) + " fraction bits");
  }
  return static_cast<std::int64_t>(word);
}

QuantizedBiquad quantize(const Biquad& filter, const FixedFormat& format) {
  if (filter.a0 != 1.0 || filter.a2 != 1.0) {
    throw std::invalid_argument(
        "only sections with a0 = a2 = 1 have a fixed-point form (the engine hardwires "
        "those taps)");
  }
  QuantizedBiquad q;
  q.format = format;
  q.a1_word = quantize_value(filter.a1, format);
  q.b1_word = quantize_value(filter.b1, format);
  q.b2_word = quantize_value(filter.b2, format);
  return q;
}

Biquad as_biquad(const QuantizedBiquad& q) {
  Biquad filter;
  filter.a0 = 1.0;
  filter.a1 = q.a1();
  filter.a2 = 1.0;
  filter.b1 = q.b1();
  filter.b2 = q.b2();
  return filter;
}

DriftReport drift(const Biquad& original, const QuantizedBiquad& quantized) {
  const Biquad moved = as_biquad(quantized);

  const std::vector<double> zeros_before{original.a0, original.a1, original.a2};
  const std::vector<double> zeros_after{moved.a0, moved.a1, moved.a2};
  const std::vector<double> poles_before{1.0, original.b1, original.b2};
  const std::vector<double> poles_after{1.0, moved.b1, moved.b2};

  DriftReport report;
  report.zeros = pair_roots(polynomial_roots(zeros_before), polynomial_roots(zeros_after));
  report.poles = pair_roots(polynomial_roots(poles_before), polynomial_roots(poles_after));
  report.max_zero_drift = max_distance(report.zeros);
  report.max_pole_drift = max_distance(report.poles);
  return report;
}

std::vector<SectionScaling> scaling_factor(const Cascade& filter, std::size_t n_terms) {
  if (n_terms == 0) {
    throw std::invalid_argument("n_terms must be at least 1");
  }
  std::vector<SectionScaling> scales;
  scales.reserve(filter.sections.size());
  for (const Biquad& section : filter.sections) {
    if (!check_stability(section).stable) {
      throw std::domain_error("unstable section: the impulse-response norm diverges");
    }
    // Direct-form impulse response, accumulated in magnitude.
    double y1 = 0.0;
    double y2 = 0.0;
    double norm = 0.0;
    for (std::size_t n = 0; n < n_terms; ++n) {
      const double x0 = n == 0 ? 1.0 : 0.0;
      const double x1 = n == 1 ? 1.0 : 0.0;
      const double x2 = n == 2 ? 1.0 : 0.0;
      const double y = section.a0 * x0 + section.a1 * x1 + section.a2 * x2 -
                       section.b1 * y1 - section.b2 * y2;
      norm += std::abs(y);
      y2 = y1;
      y1 = y;
    }
    scales.push_back({norm, 1.0 / norm});
  }
  return scales;
}

}  // namespace notchlab
