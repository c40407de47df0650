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

namespace notchlab {

// In-place radix-2 decimation-in-time FFT. data.size() must be a power of
// two (and nonzero); throws std::invalid_argument otherwise.
void fft(std::span<std::complex<double>> data);
void ifft(std::span<std::complex<double>> data);

// Periodic Hann window of length n.
std::vector<double> hann_window(std::size_t n);

enum class Window {
  kRectangular,
  kHann,
};

struct SpectrumOptions {
  std::size_t n_fft = 8192;      // power of two
  Window window = Window::kHann;
  double sample_rate_hz = 7400.0;
};

struct SpectrumPoint {
  double freq_hz = 0.0;
  double power = 0.0;     // mean-square per bin
  double power_db = 0.0;  // 10*log10(power), -inf sentinel for zero power
};

using Spectrum = std::vector<SpectrumPoint>;

// Welch-averaged power spectrum: split the signal into n_fft-sample frames
// advancing by n_fft/2 (50% overlap), window each, average |FFT|^2 over the
// frames, keep bins 0..n_fft/2. Window power is normalized out so a
// full-scale sine reads the same regardless of window choice. Throws
// std::invalid_argument if n_fft is not a power of two or the signal is
// shorter than one frame.
Spectrum power_spectrum(std::span<const double> samples, const SpectrumOptions& options);

// Index of the strongest bin and the bin nearest to a frequency of interest.
std::size_t peak_bin(const Spectrum& spectrum);
std::size_t bin_for_frequency(const Spectrum& spectrum, double freq_hz);

// Mean power in power_db over bins whose frequency lies in [lo_hz, hi_hz].
// Averages in the power domain, then converts to dB. Throws
// std::invalid_argument if no bin falls inside the range.
double band_power_db(const Spectrum& spectrum, double lo_hz, double hi_hz);

}  // namespace notchlab
