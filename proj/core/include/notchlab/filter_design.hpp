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
#include <vector>

namespace notchlab {

// Second-order section in direct form I:
//
//   H(z) = (a0 + a1 z^-1 + a2 z^-2) / (1 + b1 z^-1 + b2 z^-2)
//   y[n] = a0 x[n] + a1 x[n-1] + a2 x[n-2] - b1 y[n-1] - b2 y[n-2]
//
// Note the sign convention: the denominator coefficients are *subtracted* in
// the recursion. Defaults give the identity filter.
struct Biquad {
  double a0 = 1.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
};

// Ordered product of second-order sections, applied back to back.
struct Cascade {
  std::vector<Biquad> sections;
};

// Rational transfer function in z^-1 with equal-length numerator and
// denominator, denominator normalized to a leading 1.
struct TransferFunction {
  std::vector<double> numerator;    // n0 + n1 z^-1 + ...
  std::vector<double> denominator;  // 1 + d1 z^-1 + ...
};

// Roots-and-gain description of a filter. Both root sets must be closed
// under complex conjugation so the expanded polynomials are real.
struct PoleZeroSet {
  std::vector<std::complex<double>> zeros;
  std::vector<std::complex<double>> poles;
  double gain = 1.0;
};

// Everything needed to place one notch: where it sits, at which sample rate,
// and how tight it is (pole radius, < 1 for stability).
struct NotchSpec {
  double notch_freq_hz = 0.0;
  double sample_rate_hz = 7400.0;
  double pole_radius = 0.99;
};

constexpr double kDefaultSampleRateHz = 7400.0;
constexpr double kDefaultPoleRadius = 0.99;

// Angle on the unit circle for a frequency, in degrees: 360 * f / fs.
// Throws std::domain_error unless 0 < freq_hz < sample_rate_hz / 2.
double angle_for_frequency(double freq_hz, double sample_rate_hz);

// Same mapping in radians (2*pi*f/fs), shared by the design and evaluation
// paths so a designed zero lands exactly on its evaluation angle. Accepts the
// closed band [0, fs/2].
double angular_frequency(double freq_hz, double sample_rate_hz);

enum class DcGain {
  kAsDesigned,  // numerator stays {1, -2 cos(theta), 1}
  kNormalized,  // numerator scaled so |H| = 1 at DC (section no longer
                // representable by the fixed-point engine, which hardwires
                // a0 = a2 = 1)
};

// Place a conjugate zero pair on the unit circle at the notch angle and a
// conjugate pole pair at the same angle with the requested radius:
//   a = {1, -2 cos(theta), 1},  b = {-2 r cos(theta), r^2}.
// Throws std::domain_error for invalid specs (frequency outside (0, fs/2),
// radius outside [0, 1)).
Biquad design_notch(const NotchSpec& spec, DcGain dc = DcGain::kAsDesigned);

// Pole radius that yields a given -3 dB notch width: r = 1 - pi * bw / fs.
// Throws std::domain_error unless 0 <= bandwidth_hz < fs / pi.
double radius_from_bandwidth(double bandwidth_hz, double sample_rate_hz);

// Expand roots into polynomial form. Zeros/poles at the origin become
// trailing-zero padding; the shorter polynomial is padded so numerator and
// denominator have equal length. Throws std::domain_error if either root set
// is not closed under conjugation.
TransferFunction transfer_from_pole_zero(const PoleZeroSet& pz);

// Narrow a transfer function to a single second-order (or shorter) section.
// Throws std::invalid_argument if either polynomial has degree > 2 or the
// denominator is not monic.
Biquad to_biquad(const TransferFunction& tf);

// Bundle sections into a cascade. Throws std::domain_error on an empty list.
Cascade cascade(std::vector<Biquad> sections);

}  // namespace notchlab
