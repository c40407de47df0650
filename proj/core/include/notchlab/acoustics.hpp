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

#include <cstddef>
#include <optional>
#include <vector>

#include "notchlab/filter_design.hpp"

namespace notchlab {

// Room-to-room level measurement: average source level L1, receiving level
// L2, partition area S, receiving-room volume V and reverberation time T.
struct RoomMeasurement {
  double l1_db = 0.0;
  double l2_db = 0.0;
  double partition_area_m2 = 0.0;
  double room_volume_m3 = 0.0;
  double reverb_time_s = 0.0;
};

// One third-octave band of a measured sound-insulation curve: band centre
// frequency and the measured level difference R in dB.
struct InsulationPoint {
  double freq_hz = 0.0;
  double r_db = 0.0;
};

// Strictly increasing in frequency; needs at least three points before dips
// can be searched.
using InsulationCurve = std::vector<InsulationPoint>;

// Equivalent absorption area A = 0.161 * V / T in m^2, from room volume V
// (m^3) and reverberation time T (s). Throws std::domain_error unless both
// are positive.
double absorption_area(double volume_m3, double reverb_time_s);

// Sound reduction index R = L1 - L2 + 10*log10(S/A) in dB, from the level
// difference across the partition of area S (m^2) and the receiving room's
// absorption area A (m^2). Throws std::domain_error unless S and A are
// positive.
double transmission_loss(double l1_db, double l2_db, double partition_area_m2,
                         double absorption_area_m2);
double transmission_loss(const RoomMeasurement& m);

// A local minimum of the insulation curve: the wall passes more noise here
// than in the neighbouring bands. Depth is measured against the lower of the
// two neighbours, so it is positive for any strict local minimum.
struct InsulationDip {
  double freq_hz = 0.0;
  double r_db = 0.0;
  double depth_db = 0.0;
  std::size_t index = 0;
};

// Weak spots of a partition, one per mechanism: resonance below 1 kHz,
// coincidence in the 1-4 kHz band. A field is empty when its band holds no
// strict local minimum.
struct DipReport {
  std::optional<InsulationDip> resonance;
  std::optional<InsulationDip> coincidence;
};

inline constexpr double kResonanceBandMaxHz = 1000.0;
inline constexpr double kCoincidenceBandMinHz = 1000.0;
inline constexpr double kCoincidenceBandMaxHz = 4000.0;

// Scans the interior points of the curve (endpoints are never dips) for
// strict local minima and reports the deepest one in each band. Throws
// std::invalid_argument if the curve has fewer than three points or the
// frequencies are not positive and strictly increasing.
DipReport find_dips(const InsulationCurve& curve);

// One NotchSpec per dip present in the report, in resonance-then-coincidence
// order. A dip frequency at or above sample_rate/2 cannot be notched; throws
// std::domain_error naming the offending frequency.
std::vector<NotchSpec> notch_specs_from_dips(const DipReport& report,
                                             double sample_rate_hz = kDefaultSampleRateHz,
                                             double pole_radius = kDefaultPoleRadius);

}  // namespace notchlab
