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

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "notchlab/errors.hpp"
#include "notchlab/filter_design.hpp"

namespace {

using namespace notchlab;

constexpr double kPi = std::numbers::pi;

Biquad studio_315() { return design_notch({315.0, 7400.0, 0.99}); }
Biquad studio_2500() { return design_notch({2500.0, 7400.0, 0.99}); }

PoleZeroSet roots_of_notch(double freq_hz, double radius) {
  const double theta = 2.0 * kPi * freq_hz / 7400.0;
  PoleZeroSet pz;
  pz.zeros = {std::polar(1.0, theta), std::polar(1.0, -theta)};
  pz.poles = {std::polar(radius, theta), std::polar(radius, -theta)};
  return pz;
}

// Relative disagreement between the polynomial and geometric evaluations.
double eval_mismatch(const PoleZeroSet& pz, const Biquad& filter, double freq_hz) {
  const ResponsePoint p = evaluate_polynomial(filter, freq_hz, 7400.0);
  const ResponsePoint g = evaluate_geometric(pz, freq_hz, 7400.0);
  return std::abs(p.magnitude - g.magnitude) / std::max(g.magnitude, 1e-12);
}

TEST_SUITE("response") {

TEST_CASE("sweep spans DC to Nyquist inclusively on a uniform grid") {
  const ResponseCurve two = sweep(studio_315(), 7400.0, 2);
  REQUIRE(two.points.size() == 2);
  CHECK(two.points[0].freq_hz == 0.0);
  CHECK(two.points[1].freq_hz == 3700.0);

  const ResponseCurve c = sweep(studio_315(), 7400.0, 8192);
  REQUIRE(c.points.size() == 8192);
  CHECK(c.points.front().freq_hz == 0.0);
  CHECK(c.points.back().freq_hz == 3700.0);
  const double step = 3700.0 / 8191.0;
  CHECK(c.points[1].freq_hz == doctest::Approx(step).epsilon(1e-14));
  CHECK(c.points[4096].freq_hz == doctest::Approx(4096 * step).epsilon(1e-14));

  CHECK_THROWS_AS(sweep(studio_315(), 7400.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(sweep(studio_315(), 7400.0, 0), std::invalid_argument);
}

TEST_CASE("polynomial and geometric evaluation agree for the studio filters") {
  const PoleZeroSet pz315 = roots_of_notch(315.0, 0.99);
  const PoleZeroSet pz2500 = roots_of_notch(2500.0, 0.99);
  double worst = 0.0;
  for (int i = 0; i < 1024; ++i) {
    const double f = 3700.0 * i / 1023.0;
    worst = std::max(worst, eval_mismatch(pz315, studio_315(), f));
    worst = std::max(worst, eval_mismatch(pz2500, studio_2500(), f));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("polynomial and geometric evaluation agree for random stable biquads") {
  std::mt19937 rng(20260814u);
  std::uniform_real_distribution<double> zero_radius(0.0, 1.4);
  std::uniform_real_distribution<double> pole_radius(0.0, 0.99);
  std::uniform_real_distribution<double> angle(0.0, kPi);

  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    PoleZeroSet pz;
    const double zr = zero_radius(rng), za = angle(rng);
    const double pr = pole_radius(rng), pa = angle(rng);
    pz.zeros = {std::polar(zr, za), std::polar(zr, -za)};
    pz.poles = {std::polar(pr, pa), std::polar(pr, -pa)};
    const Biquad filter = to_biquad(transfer_from_pole_zero(pz));
    for (int i = 0; i < 128; ++i) {
      const double f = 3700.0 * i / 127.0;
      worst = std::max(worst, eval_mismatch(pz, filter, f));
    }
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("cascade evaluation multiplies section responses") {
  const Cascade c = cascade({studio_315(), studio_2500()});
  for (double f : {100.0, 315.0, 1000.0, 2500.0, 3600.0}) {
    const double m1 = evaluate_polynomial(studio_315(), f, 7400.0).magnitude;
    const double m2 = evaluate_polynomial(studio_2500(), f, 7400.0).magnitude;
    const double mc = evaluate_polynomial(c, f, 7400.0).magnitude;
    CHECK(mc == doctest::Approx(m1 * m2).epsilon(1e-12));
  }
}

TEST_CASE("transfer-function evaluation matches the biquad form") {
  const Biquad d = studio_315();
  TransferFunction tf;
  tf.numerator = {d.a0, d.a1, d.a2};
  tf.denominator = {1.0, d.b1, d.b2};
  for (double f : {0.0, 315.0, 1850.0, 3700.0}) {
    const ResponsePoint a = evaluate_polynomial(d, f, 7400.0);
    const ResponsePoint b = evaluate_polynomial(tf, f, 7400.0);
    CHECK(a.magnitude == doctest::Approx(b.magnitude).epsilon(1e-14));
    CHECK(a.phase_rad == doctest::Approx(b.phase_rad).epsilon(1e-12));
  }
}

TEST_CASE("response points carry consistent dB and phase fields") {
  const ResponsePoint p = evaluate_polynomial(studio_315(), 100.0, 7400.0);
  CHECK(p.magnitude_db == doctest::Approx(20.0 * std::log10(p.magnitude)).epsilon(1e-12));
  CHECK(p.phase_rad <= kPi);
  CHECK(p.phase_rad > -kPi);

  // Exactly at the notch the magnitude underflows to zero and dB is -inf.
  const ResponsePoint z = evaluate_polynomial(studio_2500(), 2500.0, 7400.0);
  CHECK(z.magnitude < 1e-12);
}

TEST_CASE("evaluation rejects out-of-band frequencies") {
  CHECK_THROWS_AS(evaluate_polynomial(studio_315(), -1.0, 7400.0), std::domain_error);
  CHECK_THROWS_AS(evaluate_polynomial(studio_315(), 3701.0, 7400.0), std::domain_error);
}

TEST_CASE("geometric evaluation rejects a point landing on a pole") {
  const PoleZeroSet on_circle = roots_of_notch(315.0, 1.0);  // poles on |z| = 1
  CHECK_THROWS_AS(evaluate_geometric(on_circle, 315.0, 7400.0), std::domain_error);
  CHECK_NOTHROW(evaluate_geometric(on_circle, 316.0, 7400.0));
}

TEST_CASE("polynomial_roots solves low degrees in closed form") {
  CHECK(polynomial_roots(std::vector<double>{2.0}).empty());

  const auto linear = polynomial_roots(std::vector<double>{2.0, -1.0});
  REQUIRE(linear.size() == 1);
  CHECK(linear[0].real() == doctest::Approx(0.5).epsilon(1e-15));

  auto quad = polynomial_roots(std::vector<double>{1.0, -3.0, 2.0});
  REQUIRE(quad.size() == 2);
  std::sort(quad.begin(), quad.end(),
            [](auto a, auto b) { return a.real() < b.real(); });
  CHECK(quad[0].real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(quad[1].real() == doctest::Approx(2.0).epsilon(1e-14));

  // Trailing zeros put roots at the origin.
  const auto padded = polynomial_roots(std::vector<double>{1.0, -0.5, 0.0});
  REQUIRE(padded.size() == 2);
  const bool has_origin = std::abs(padded[0]) < 1e-15 || std::abs(padded[1]) < 1e-15;
  CHECK(has_origin);

  CHECK_THROWS_AS(polynomial_roots(std::vector<double>{0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("polynomial_roots finds the conjugate zeros of a notch numerator") {
  const Biquad d = studio_315();
  const auto roots = polynomial_roots(std::vector<double>{d.a0, d.a1, d.a2});
  REQUIRE(roots.size() == 2);
  const double theta = 2.0 * kPi * 315.0 / 7400.0;
  for (const auto& r : roots) {
    CHECK(std::abs(r) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(std::abs(std::arg(r)) - theta) < 1e-12);
  }
}

TEST_CASE("polynomial_roots handles degrees above two") {
  // z^4 - 1 : roots are the fourth roots of unity.
  const auto roots = polynomial_roots(std::vector<double>{1.0, 0.0, 0.0, 0.0, -1.0});
  REQUIRE(roots.size() == 4);
  for (const auto& r : roots) {
    CHECK(std::abs(r) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(r * r * r * r - std::complex<double>(1.0, 0.0)) < 1e-9);
  }
}

TEST_CASE("check_stability classifies poles against the unit circle") {
  const StabilityReport designed = check_stability(cascade({studio_315(), studio_2500()}));
  REQUIRE(designed.pole_magnitudes.size() == 4);
  for (double m : designed.pole_magnitudes) {
    CHECK(m == doctest::Approx(0.99).epsilon(1e-12));
  }
  CHECK(designed.stable);

  Biquad outside;
  outside.b2 = 1.1;  // poles at +-j*sqrt(1.1)
  CHECK_FALSE(check_stability(outside).stable);

  Biquad marginal;
  marginal.b1 = -2.0;
  marginal.b2 = 1.0;  // double pole exactly on the unit circle
  CHECK_FALSE(check_stability(marginal).stable);

  TransferFunction tf;
  tf.numerator = {1.0, 0.0, 0.0};
  tf.denominator = {1.0, studio_315().b1, studio_315().b2};
  CHECK(check_stability(tf).stable);
}

TEST_CASE("measure_notch reports depth and bandwidth on a fine grid") {
  const Cascade c = cascade({studio_315(), studio_2500()});
  const ResponseCurve curve = sweep(c, 7400.0, 8192);

  const NotchMeasurement low = measure_notch(curve, 315.0);
  CHECK(low.notch_freq_hz == doctest::Approx(314.845562).epsilon(1e-6));
  CHECK(low.depth_db == doctest::Approx(37.689232).epsilon(1e-4));
  CHECK(low.bandwidth_3db_hz == doctest::Approx(23.727905).epsilon(1e-4));

  const NotchMeasurement high = measure_notch(curve, 2500.0);
  CHECK(high.notch_freq_hz == doctest::Approx(2499.792455).epsilon(1e-6));
  CHECK(high.depth_db == doctest::Approx(35.121241).epsilon(1e-4));
  CHECK(high.bandwidth_3db_hz == doctest::Approx(23.720845).epsilon(1e-4));
}

TEST_CASE("measured bandwidth shrinks as the poles approach the unit circle") {
  double previous = 1e9;
  for (double r : {0.9, 0.95, 0.99}) {
    const Biquad f = design_notch({315.0, 7400.0, r});
    const NotchMeasurement m = measure_notch(sweep(f, 7400.0, 8192), 315.0);
    CHECK(m.bandwidth_3db_hz < previous);
    previous = m.bandwidth_3db_hz;
  }
  CHECK(previous == doctest::Approx(23.739874).epsilon(1e-4));
}

TEST_CASE("measure_notch failure modes raise MeasurementError") {
  // A flat response has no local minimum.
  Biquad identity;
  CHECK_THROWS_AS(measure_notch(sweep(identity, 7400.0, 512), 1000.0), MeasurementError);

  // Requested frequency outside the curve's span.
  const ResponseCurve curve = sweep(studio_315(), 7400.0, 512);
  CHECK_THROWS_AS(measure_notch(curve, 5000.0), MeasurementError);
  CHECK_THROWS_AS(measure_notch(curve, -100.0), MeasurementError);

  // Dip present but shallower than 3 dB.
  ResponseCurve shallow;
  for (int i = 0; i < 32; ++i) {
    ResponsePoint p;
    p.freq_hz = i * 10.0;
    p.magnitude = (i == 16) ? 0.9 : 1.0;  // -0.9 dB dip only
    p.magnitude_db = 20.0 * std::log10(p.magnitude);
    shallow.points.push_back(p);
  }
  CHECK_THROWS_AS(measure_notch(shallow, 160.0), MeasurementError);

  // Dip deep enough but the -3 dB crossing is missing on the left.
  ResponseCurve clipped;
  for (int i = 0; i < 16; ++i) {
    ResponsePoint p;
    p.freq_hz = i * 10.0;
    p.magnitude = (i <= 1) ? 0.05 : 1.0;
    if (i == 1) p.magnitude = 0.02;  // local minimum right at the edge
    p.magnitude_db = 20.0 * std::log10(p.magnitude);
    clipped.points.push_back(p);
  }
  CHECK_THROWS_AS(measure_notch(clipped, 10.0), MeasurementError);

  ResponseCurve tiny;
  tiny.points.resize(2);
  CHECK_THROWS_AS(measure_notch(tiny, 100.0), MeasurementError);
}

}  // TEST_SUITE

}  // namespace
