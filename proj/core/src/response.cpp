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

#include "notchlab/response.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "notchlab/errors.hpp"

namespace notchlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double wrap_phase(double phase) {
  double wrapped = std::remainder(phase, 2.0 * std::numbers::pi);
  if (wrapped <= -std::numbers::pi) wrapped = std::numbers::pi;  // principal (-pi, pi]
  return wrapped;
}

ResponsePoint make_point(double freq_hz, std::complex<double> h) {
  ResponsePoint p;
  p.freq_hz = freq_hz;
  p.magnitude = std::abs(h);
  p.magnitude_db = p.magnitude > 0.0 ? 20.0 * std::log10(p.magnitude) : -kInf;
  p.phase_rad = wrap_phase(std::arg(h));
  return p;
}

// Polynomial in z^-1 evaluated at z = e^{jw}, i.e. Horner in z^-1.
std::complex<double> horner(std::span<const double> coeffs, std::complex<double> z_inv) {
  std::complex<double> acc{0.0, 0.0};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z_inv + *it;
  return acc;
}

std::complex<double> response_at(const Biquad& filter, std::complex<double> z_inv) {
  const std::complex<double> num = (filter.a2 * z_inv + filter.a1) * z_inv + filter.a0;
  const std::complex<double> den = (filter.b2 * z_inv + filter.b1) * z_inv + 1.0;
  return num / den;
}

std::vector<std::complex<double>> quadratic_roots(double c0, double c1, double c2) {
  const double disc = c1 * c1 - 4.0 * c0 * c2;
  if (disc < 0.0) {
    const double re = -c1 / (2.0 * c0);
    const double im = std::sqrt(-disc) / (2.0 * std::abs(c0));
    return {{re, im}, {re, -im}};
  }
  // One large root via the stable form, the other from the product c2/c0.
  const double q = -0.5 * (c1 + std::copysign(std::sqrt(disc), c1));
  if (q == 0.0) return {{0.0, 0.0}, {0.0, 0.0}};  // c1 == c2 == 0
  return {{q / c0, 0.0}, {c2 / q, 0.0}};
}

StabilityReport report_from_roots(const std::vector<std::complex<double>>& poles) {
  StabilityReport report;
  report.pole_magnitudes.reserve(poles.size());
  report.stable = true;
  for (const auto& p : poles) {
    const double mag = std::abs(p);
    report.pole_magnitudes.push_back(mag);
    if (!(mag < 1.0)) report.stable = false;
  }
  return report;
}

std::vector<double> denominator_of(const Biquad& filter) {
  return {1.0, filter.b1, filter.b2};
}

}  // namespace

ResponsePoint evaluate_polynomial(const Biquad& filter, double freq_hz,
                                  double sample_rate_hz) {
  const double w = angular_frequency(freq_hz, sample_rate_hz);
  const std::complex<double> z_inv = std::polar(1.0, -w);
  return make_point(freq_hz, response_at(filter, z_inv));
}

ResponsePoint evaluate_polynomial(const Cascade& filter, double freq_hz,
                                  double sample_rate_hz) {
  const double w = angular_frequency(freq_hz, sample_rate_hz);
  const std::complex<double> z_inv = std::polar(1.0, -w);
  std::complex<double> h{1.0, 0.0};
  for (const Biquad& section : filter.sections) h *= response_at(section, z_inv);
  return make_point(freq_hz, h);
}

ResponsePoint evaluate_polynomial(const TransferFunction& filter, double freq_hz,
                                  double sample_rate_hz) {
  const double w = angular_frequency(freq_hz, sample_rate_hz);
  const std::complex<double> z_inv = std::polar(1.0, -w);
  return make_point(freq_hz, horner(filter.numerator, z_inv) /
                                 horner(filter.denominator, z_inv));
}

ResponsePoint evaluate_geometric(const PoleZeroSet& pz, double freq_hz,
                                 double sample_rate_hz) {
  const double w = angular_frequency(freq_hz, sample_rate_hz);
  const std::complex<double> point = std::polar(1.0, w);

  double magnitude = std::abs(pz.gain);
  double phase = pz.gain < 0.0 ? std::numbers::pi : 0.0;
  for (const auto& zero : pz.zeros) {
    const std::complex<double> v = point - zero;
    magnitude *= std::abs(v);
    phase += std::arg(v);
  }
  for (const auto& pole : pz.poles) {
    const std::complex<double> v = point - pole;
    const double dist = std::abs(v);
    if (dist == 0.0) {
      throw std::domain_error("evaluation point coincides with a pole");
    }
    magnitude /= dist;
    phase -= std::arg(v);
  }

  ResponsePoint p;
  p.freq_hz = freq_hz;
  p.magnitude = magnitude;
  p.magnitude_db = magnitude > 0.0 ? 20.0 * std::log10(magnitude) : -kInf;
  p.phase_rad = magnitude == 0.0 ? 0.0 : wrap_phase(phase);
  return p;
}

namespace {

template <typename Filter>
ResponseCurve sweep_impl(const Filter& filter, double sample_rate_hz,
                         std::size_t n_points) {
  if (n_points < 2) {
    throw std::invalid_argument("a sweep needs at least 2 points");
  }
  ResponseCurve curve;
  curve.points.reserve(n_points);
  const double nyquist = 0.5 * sample_rate_hz;
  for (std::size_t i = 0; i < n_points; ++i) {
    const double freq = nyquist * static_cast<double>(i) / static_cast<double>(n_points - 1);
    curve.points.push_back(evaluate_polynomial(filter, freq, sample_rate_hz));
  }
  return curve;
}

}  // namespace

ResponseCurve sweep(const Biquad& filter, double sample_rate_hz, std::size_t n_points) {
  return sweep_impl(filter, sample_rate_hz, n_points);
}

ResponseCurve sweep(const Cascade& filter, double sample_rate_hz, std::size_t n_points) {
  return sweep_impl(filter, sample_rate_hz, n_points);
}

std::vector<std::complex<double>> polynomial_roots(std::span<const double> coeffs) {
  if (coeffs.empty() || coeffs[0] == 0.0) {
    throw std::invalid_argument("leading polynomial coefficient must be nonzero");
  }
  const std::size_t degree = coeffs.size() - 1;
  if (degree == 0) return {};
  if (degree == 1) return {{-coeffs[1] / coeffs[0], 0.0}};
  if (degree == 2) return quadratic_roots(coeffs[0], coeffs[1], coeffs[2]);

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(degree),
                                                    static_cast<Eigen::Index>(degree));
  for (std::size_t i = 0; i + 1 < degree; ++i) {
    companion(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i)) = 1.0;
  }
  for (std::size_t i = 0; i < degree; ++i) {
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(degree - 1)) =
        -coeffs[degree - i] / coeffs[0];
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  std::vector<std::complex<double>> roots;
  roots.reserve(degree);
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    roots.push_back(solver.eigenvalues()[i]);
  }
  return roots;
}

StabilityReport check_stability(const Biquad& filter) {
  return report_from_roots(polynomial_roots(denominator_of(filter)));
}

StabilityReport check_stability(const Cascade& filter) {
  StabilityReport report;
  report.stable = true;
  for (const Biquad& section : filter.sections) {
    const StabilityReport part = check_stability(section);
    report.pole_magnitudes.insert(report.pole_magnitudes.end(),
                                  part.pole_magnitudes.begin(),
                                  part.pole_magnitudes.end());
    if (!part.stable) report.stable = false;
  }
  return report;
}

StabilityReport check_stability(const TransferFunction& filter) {
  return report_from_roots(polynomial_roots(filter.denominator));
}

NotchMeasurement measure_notch(const ResponseCurve& curve, double notch_freq_hz) {
  const auto& pts = curve.points;
  if (pts.size() < 3) {
    throw MeasurementError("curve too short to measure a notch");
  }
  if (notch_freq_hz < pts.front().freq_hz || notch_freq_hz > pts.back().freq_hz) {
    throw MeasurementError("notch frequency outside the swept range");
  }

  // Reference level: median magnitude over the sweep, robust against the
  // notch regions themselves.
  std::vector<double> mags;
  mags.reserve(pts.size());
  for (const auto& p : pts) mags.push_back(p.magnitude);
  std::sort(mags.begin(), mags.end());
  const std::size_t mid = mags.size() / 2;
  const double reference =
      mags.size() % 2 == 1 ? mags[mid] : 0.5 * (mags[mid - 1] + mags[mid]);
  if (!(reference > 0.0)) {
    throw MeasurementError("curve has no passband level to reference against");
  }

  // The local minimum nearest the requested frequency. A flat curve has none.
  std::size_t min_index = pts.size();
  double best_dist = kInf;
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    const double m = pts[i].magnitude;
    const bool is_min = m <= pts[i - 1].magnitude && m <= pts[i + 1].magnitude &&
                        (m < pts[i - 1].magnitude || m < pts[i + 1].magnitude);
    if (!is_min) continue;
    const double dist = std::abs(pts[i].freq_hz - notch_freq_hz);
    if (dist < best_dist) {
      best_dist = dist;
      min_index = i;
    }
  }
  if (min_index == pts.size()) {
    throw MeasurementError("curve has no local minimum (no notch to measure)");
  }

  NotchMeasurement result;
  result.notch_freq_hz = pts[min_index].freq_hz;
  result.depth_db = pts[min_index].magnitude > 0.0
                        ? 20.0 * std::log10(reference / pts[min_index].magnitude)
                        : kInf;

  // -3 dB crossings around the minimum, linearly interpolated in magnitude.
  const double threshold = reference * std::pow(10.0, -3.0 / 20.0);
  if (pts[min_index].magnitude >= threshold) {
    throw MeasurementError("notch is shallower than 3 dB; no crossings to measure");
  }

  auto interpolate = [&pts, threshold](std::size_t below, std::size_t above) {
    const double m0 = pts[below].magnitude;
    const double m1 = pts[above].magnitude;
    const double t = (threshold - m0) / (m1 - m0);
    return pts[below].freq_hz + t * (pts[above].freq_hz - pts[below].freq_hz);
  };

  double left = kInf;
  for (std::size_t i = min_index; i-- > 0;) {
    if (pts[i].magnitude >= threshold) {
      left = interpolate(i + 1, i);
      break;
    }
  }
  double right = kInf;
  for (std::size_t i = min_index + 1; i < pts.size(); ++i) {
    if (pts[i].magnitude >= threshold) {
      right = interpolate(i - 1, i);
      break;
    }
  }
  if (!std::isfinite(left) || !std::isfinite(right)) {
    throw MeasurementError("no -3 dB crossing found on both sides of the notch");
  }
  result.bandwidth_3db_hz = right - left;
  return result;
}

}  // namespace notchlab
