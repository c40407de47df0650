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

#include "notchlab/filter_design.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace notchlab {

namespace {

void require_valid_rate(double sample_rate_hz) {
  if (!(sample_rate_hz > 0.0) || !std::isfinite(sample_rate_hz)) {
    throw std::domain_error("sample rate must be positive and finite, got " +
                            std::to_string(sample_rate_hz));
  }
}

// Conjugate of `root` present in `pool`? Removes the match when found. Real
// roots pair with themselves and are handled by the caller.
bool take_conjugate(std::vector<std::complex<double>>& pool, std::complex<double> root) {
  const std::complex<double> want = std::conj(root);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const double tol = 1e-12 * std::max(1.0, std::abs(want));
    if (std::abs(pool[i] - want) <= tol) {
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
      return true;
    }
  }
  return false;
}

// Expand a root list into real polynomial coefficients in z^-1. Roots at the
// origin contribute plain delay, i.e. trailing zero coefficients.
std::vector<double> expand_real_polynomial(const std::vector<std::complex<double>>& roots,
                                           const char* which) {
  std::vector<double> poly{1.0};
  std::vector<std::complex<double>> pending;
  std::size_t origin_roots = 0;

  for (const auto& root : roots) {
    if (root == std::complex<double>(0.0, 0.0)) {
      ++origin_roots;
    } else {
      pending.push_back(root);
    }
  }

  auto multiply = [&poly](std::initializer_list<double> factor) {
    std::vector<double> next(poly.size() + factor.size() - 1, 0.0);
    std::size_t j = 0;
    for (double f : factor) {
      for (std::size_t i = 0; i < poly.size(); ++i) next[i + j] += poly[i] * f;
      ++j;
    }
    poly = std::move(next);
  };

  while (!pending.empty()) {
    const std::complex<double> root = pending.front();
    pending.erase(pending.begin());
    if (root.imag() == 0.0) {
      multiply({1.0, -root.real()});  // (1 - root z^-1)
      continue;
    }
    if (!take_conjugate(pending, root)) {
      throw std::domain_error(std::string(which) +
                              " roots are not closed under conjugation");
    }
    // (1 - root z^-1)(1 - conj(root) z^-1) = 1 - 2 Re(root) z^-1 + |root|^2 z^-2
    multiply({1.0, -2.0 * root.real(), std::norm(root)});
  }

  poly.resize(poly.size() + origin_roots, 0.0);
  return poly;
}

}  // namespace

double angle_for_frequency(double freq_hz, double sample_rate_hz) {
  require_valid_rate(sample_rate_hz);
  const double nyquist = 0.5 * sample_rate_hz;
  if (!(freq_hz > 0.0) || !(freq_hz < nyquist)) {
    char msg[128];
    std::snprintf(msg, sizeof(msg),
                  "notch frequency %g Hz outside (0, %g) Hz (Nyquist bound)", freq_hz,
                  nyquist);
    throw std::domain_error(msg);
  }
  return 360.0 * freq_hz / sample_rate_hz;
}

double angular_frequency(double freq_hz, double sample_rate_hz) {
  require_valid_rate(sample_rate_hz);
  const double nyquist = 0.5 * sample_rate_hz;
  if (!(freq_hz >= 0.0) || !(freq_hz <= nyquist)) {
    char msg[128];
    std::snprintf(msg, sizeof(msg), "frequency %g Hz outside [0, %g] Hz (Nyquist bound)",
                  freq_hz, nyquist);
    throw std::domain_error(msg);
  }
  return 2.0 * std::numbers::pi * freq_hz / sample_rate_hz;
}

Biquad design_notch(const NotchSpec& spec, DcGain dc) {
  if (!(spec.pole_radius >= 0.0) || !(spec.pole_radius < 1.0)) {
    throw std::domain_error("pole radius " + std::to_string(spec.pole_radius) +
                            " outside [0, 1)");
  }
  // Reuse the degree mapping for its domain check, then work in radians.
  angle_for_frequency(spec.notch_freq_hz, spec.sample_rate_hz);
  const double theta = angular_frequency(spec.notch_freq_hz, spec.sample_rate_hz);
  const double c = std::cos(theta);
  const double r = spec.pole_radius;

  Biquad filter;
  filter.a0 = 1.0;
  filter.a1 = -2.0 * c;
  filter.a2 = 1.0;
  filter.b1 = -2.0 * r * c;
  filter.b2 = r * r;

  if (dc == DcGain::kNormalized) {
    const double gain_dc = (filter.a0 + filter.a1 + filter.a2) / (1.0 + filter.b1 + filter.b2);
    filter.a0 /= gain_dc;
    filter.a1 /= gain_dc;
    filter.a2 /= gain_dc;
  }
  return filter;
}

double radius_from_bandwidth(double bandwidth_hz, double sample_rate_hz) {
  require_valid_rate(sample_rate_hz);
  if (!(bandwidth_hz >= 0.0)) {
    throw std::domain_error("bandwidth must be non-negative");
  }
  const double r = 1.0 - std::numbers::pi * bandwidth_hz / sample_rate_hz;
  if (!(r > 0.0)) {
    throw std::domain_error("bandwidth " + std::to_string(bandwidth_hz) +
                            " Hz too wide for sample rate " +
                            std::to_string(sample_rate_hz) + " Hz (radius would be <= 0)");
  }
  return r;
}

TransferFunction transfer_from_pole_zero(const PoleZeroSet& pz) {
  TransferFunction tf;
  tf.numerator = expand_real_polynomial(pz.zeros, "zero");
  tf.denominator = expand_real_polynomial(pz.poles, "pole");
  for (double& c : tf.numerator) c *= pz.gain;

  const std::size_t n = std::max(tf.numerator.size(), tf.denominator.size());
  tf.numerator.resize(n, 0.0);
  tf.denominator.resize(n, 0.0);
  return tf;
}

Biquad to_biquad(const TransferFunction& tf) {
  if (tf.numerator.empty() || tf.denominator.empty()) {
    throw std::invalid_argument("transfer function has an empty polynomial");
  }
  if (tf.numerator.size() > 3 || tf.denominator.size() > 3) {
    throw std::invalid_argument("transfer function degree exceeds a second-order section");
  }
  if (tf.denominator[0] != 1.0) {
    throw std::invalid_argument("denominator is not monic");
  }
  Biquad filter;
  filter.a0 = tf.numerator[0];
  filter.a1 = tf.numerator.size() > 1 ? tf.numerator[1] : 0.0;
  filter.a2 = tf.numerator.size() > 2 ? tf.numerator[2] : 0.0;
  filter.b1 = tf.denominator.size() > 1 ? tf.denominator[1] : 0.0;
  filter.b2 = tf.denominator.size() > 2 ? tf.denominator[2] : 0.0;
  return filter;
}

Cascade cascade(std::vector<Biquad> sections) {
  if (sections.empty()) {
    throw std::domain_error("a cascade needs at least one section");
  }
  return Cascade{std::move(sections)};
}

}  // namespace notchlab
