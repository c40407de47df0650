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

#include "notchlab/acoustics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace notchlab {

double absorption_area(double volume_m3, double reverb_time_s) {
  if (!(volume_m3 > 0.0)) {
    throw std::domain_error("room volume must be positive");
  }
  if (!(reverb_time_s > 0.0)) {
    throw std::domain_error("reverberation time must be positive");
  }
  return 0.161 * volume_m3 / reverb_time_s;
}

double transmission_loss(double l1_db, double l2_db, double partition_area_m2,
                         double absorption_area_m2) {
  if (!(partition_area_m2 > 0.0)) {
    throw std::domain_error("partition area must be positive");
  }
  if (!(absorption_area_m2 > 0.0)) {
    throw std::domain_error("absorption area must be positive");
  }
  return l1_db - l2_db + 10.0 * std::log10(partition_area_m2 / absorption_area_m2);
}

double transmission_loss(const RoomMeasurement& m) {
  return transmission_loss(m.l1_db, m.l2_db, m.partition_area_m2,
                           absorption_area(m.room_volume_m3, m.reverb_time_s));
}

DipReport find_dips(const InsulationCurve& curve) {
  if (curve.size() < 3) {
    throw std::invalid_argument("an insulation curve needs at least 3 points");
  }
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (!(curve[i].freq_hz > 0.0)) {
      throw std::invalid_argument("insulation curve frequencies must be positive");
    }
    if (i > 0 && !(curve[i].freq_hz > curve[i - 1].freq_hz)) {
      throw std::invalid_argument("insulation curve frequencies must be strictly increasing");
    }
  }

  DipReport report;
  auto offer = [](std::optional<InsulationDip>& slot, const InsulationDip& dip) {
    if (!slot || dip.depth_db > slot->depth_db) slot = dip;
  };

  for (std::size_t i = 1; i + 1 < curve.size(); ++i) {
    const double r = curve[i].r_db;
    if (!(r < curve[i - 1].r_db) || !(r < curve[i + 1].r_db)) continue;

    InsulationDip dip;
    dip.freq_hz = curve[i].freq_hz;
    dip.r_db = r;
    dip.depth_db = std::min(curve[i - 1].r_db, curve[i + 1].r_db) - r;
    dip.index = i;

    if (dip.freq_hz < kResonanceBandMaxHz) {
      offer(report.resonance, dip);
    } else if (dip.freq_hz >= kCoincidenceBandMinHz && dip.freq_hz <= kCoincidenceBandMaxHz) {
      offer(report.coincidence, dip);
    }
  }
  return report;
}

std::vector<NotchSpec> notch_specs_from_dips(const DipReport& report,
                                             double sample_rate_hz, double pole_radius) {
  std::vector<NotchSpec> specs;
  const double nyquist = 0.5 * sample_rate_hz;
  for (const auto& slot : {report.resonance, report.coincidence}) {
    if (!slot) continue;
    if (!(slot->freq_hz < nyquist)) {
      char msg[128];
      std::snprintf(msg, sizeof(msg),
                    "dip at %g Hz is at or above the Nyquist frequency %g Hz", slot->freq_hz,
                    nyquist);
      throw std::domain_error(msg);
    }
    specs.push_back(NotchSpec{slot->freq_hz, sample_rate_hz, pole_radius});
  }
  return specs;
}

}  // namespace notchlab
