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

#include "notchlab/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace notchlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void fft_impl(std::span<std::complex<double>> data, bool inverse) {
  const std::size_t n = data.size();
  if (!is_power_of_two(n)) {
    throw std::invalid_argument("FFT length must be a nonzero power of two");
  }

  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }

  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double base = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> w = std::polar(1.0, base * static_cast<double>(k));
        const std::complex<double> even = data[start + k];
        const std::complex<double> odd = data[start + k + len / 2] * w;
        data[start + k] = even + odd;
        data[start + k + len / 2] = even - odd;
      }
    }
  }

  if (inverse) {
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& v : data) v *= scale;
  }
}

}  // namespace

void fft(std::span<std::complex<double>> data) { fft_impl(data, false); }

void ifft(std::span<std::complex<double>> data) { fft_impl(data, true); }

std::vector<double> hann_window(std::size_t n) {
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                 static_cast<double>(n)));
  }
  return w;
}

Spectrum power_spectrum(std::span<const double> samples, const SpectrumOptions& options) {
  const std::size_t n = options.n_fft;
  if (!is_power_of_two(n) || n < 2) {
    throw std::invalid_argument("n_fft must be a power of two and at least 2");
  }
  if (!(options.sample_rate_hz > 0.0)) {
    throw std::invalid_argument("sample rate must be positive");
  }
  if (samples.size() < n) {
    throw std::invalid_argument("signal shorter than one analysis frame");
  }

  const std::vector<double> window = options.window == Window::kHann
                                         ? hann_window(n)
                                         : std::vector<double>(n, 1.0);
  double window_sum = 0.0;
  for (double w : window) window_sum += w;

  const std::size_t hop = n / 2;  // 50% overlap
  const std::size_t n_frames = (samples.size() - n) / hop + 1;

  std::vector<double> mean_square(n / 2 + 1, 0.0);
  std::vector<std::complex<double>> frame(n);
  for (std::size_t f = 0; f < n_frames; ++f) {
    const std::size_t offset = f * hop;
    for (std::size_t i = 0; i < n; ++i) {
      frame[i] = samples[offset + i] * window[i];
    }
    fft(frame);
    for (std::size_t k = 0; k <= n / 2; ++k) {
      mean_square[k] += std::norm(frame[k]);
    }
  }

  // Coherent-gain normalization: a sine of amplitude A centred on an interior
  // bin averages to A^2/2 there (its mean square), for any window.
  const double norm = 1.0 / (window_sum * window_sum * static_cast<double>(n_frames));

  Spectrum spectrum(n / 2 + 1);
  const double bin_hz = options.sample_rate_hz / static_cast<double>(n);
  for (std::size_t k = 0; k <= n / 2; ++k) {
    const double one_sided = (k == 0 || k == n / 2) ? 1.0 : 2.0;
    const double power = one_sided * mean_square[k] * norm;
    spectrum[k].freq_hz = bin_hz * static_cast<double>(k);
    spectrum[k].power = power;
    spectrum[k].power_db = power > 0.0 ? 10.0 * std::log10(power) : -kInf;
  }
  return spectrum;
}

std::size_t peak_bin(const Spectrum& spectrum) {
  if (spectrum.empty()) {
    throw std::invalid_argument("empty spectrum");
  }
  std::size_t best = 0;
  for (std::size_t k = 1; k < spectrum.size(); ++k) {
    if (spectrum[k].power > spectrum[best].power) best = k;
  }
  return best;
}

std::size_t bin_for_frequency(const Spectrum& spectrum, double freq_hz) {
  if (spectrum.size() < 2) {
    throw std::invalid_argument("spectrum needs at least two bins");
  }
  const double bin_hz = spectrum[1].freq_hz - spectrum[0].freq_hz;
  const double idx = std::round(freq_hz / bin_hz);
  if (idx < 0.0 || idx >= static_cast<double>(spectrum.size())) {
    throw std::invalid_argument("frequency outside the spectrum's range");
  }
  return static_cast<std::size_t>(idx);
}

double band_power_db(const Spectrum& spectrum, double lo_hz, double hi_hz) {
  double total = 0.0;
  std::size_t count = 0;
  for (const auto& bin : spectrum) {
    if (bin.freq_hz < lo_hz || bin.freq_hz > hi_hz) continue;
    total += bin.power;
    ++count;
  }
  if (count == 0) {
    throw std::invalid_argument("no spectrum bins inside the requested band");
  }
  const double mean = total / static_cast<double>(count);
  return mean > 0.0 ? 10.0 * std::log10(mean) : -kInf;
}

}  // namespace notchlab
