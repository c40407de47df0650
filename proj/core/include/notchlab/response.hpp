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
#include <cstddef>
#include <span>
#include <vector>

#include "notchlab/filter_design.hpp"

namespace notchlab {

struct ResponsePoint {
  double freq_hz = 0.0;
  double magnitude = 0.0;
  double magnitude_db = 0.0;  // 20*log10(magnitude); -inf when magnitude == 0
  double phase_rad = 0.0;     // principal value in (-pi, pi]
};

struct ResponseCurve {
  std::vector<ResponsePoint> points;
};

struct StabilityReport {
  std::vector<double> pole_magnitudes;  // all sections, in order
  bool stable = false;                  // every |p| < 1 (|p| == 1 counts unstable)
};

struct NotchMeasurement {
  double notch_freq_hz = 0.0;    // grid frequency of the located minimum
  double depth_db = 0.0;         // median passband level minus minimum level
  double bandwidth_3db_hz = 0.0; // width between the -3 dB crossings around it
};

// Evaluate H at one frequency by direct polynomial division at z = e^{jw}.
// Throws std::domain_error unless 0 <= freq_hz <= sample_rate_hz / 2.
ResponsePoint evaluate_polynomial(const Biquad& filter, double freq_hz,
                                  double sample_rate_hz);
ResponsePoint evaluate_polynomial(const Cascade& filter, double freq_hz,
                                  double sample_rate_hz);
ResponsePoint evaluate_polynomial(const TransferFunction& filter, double freq_hz,
                                  double sample_rate_hz);

// Evaluate H at one frequency from root geometry: the magnitude is the gain
// times the product of distances from e^{jw} to the zeros over the product of
// distances to the poles; the phase is the sum of zero angles minus the sum
// of pole angles (wrapped to the principal value). Matches the polynomial
// evaluation exactly when zero and pole counts are equal (pad with origin
// roots otherwise). Throws std::domain_error if e^{jw} lands exactly on a
// pole.
ResponsePoint evaluate_geometric(const PoleZeroSet& pz, double freq_hz,
                                 double sample_rate_hz);

// Evaluate on a uniform n_points grid spanning [0, fs/2], endpoints included.
// Throws std::invalid_argument for n_points < 2.
ResponseCurve sweep(const Biquad& filter, double sample_rate_hz, std::size_t n_points);
ResponseCurve sweep(const Cascade& filter, double sample_rate_hz, std::size_t n_points);

// Roots of c0 z^n + c1 z^(n-1) + ... + cn, i.e. of the coefficient list read
// as a polynomial in z^-1 scaled by z^n (trailing zeros become roots at the
// origin). Degree <= 2 uses the closed form; higher degrees use
// companion-matrix eigenvalues. Throws std::invalid_argument if the leading
// coefficient is zero.
std::vector<std::complex<double>> polynomial_roots(std::span<const double> coeffs);

StabilityReport check_stability(const Biquad& filter);
StabilityReport check_stability(const Cascade& filter);
StabilityReport check_stability(const TransferFunction& filter);

// Locate the curve's local minimum nearest notch_freq_hz and measure its
// depth below the median passband level and the width between the crossings
// of (median - 3 dB), linearly interpolated between grid points. Throws
// MeasurementError when the curve has no local minimum or a crossing is
// missing on either side.
NotchMeasurement measure_notch(const ResponseCurve& curve, double notch_freq_hz);

}  // namespace notchlab
