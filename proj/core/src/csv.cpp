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

#include "notchlab/csv.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include "notchlab/errors.hpp"
#include "text_util.hpp"

namespace notchlab {

namespace {

using internal::format_double;
using internal::parse_double;
using internal::split;
using internal::strip_cr;

// Header-checked CSV of doubles: every row must have as many fields as the
// header names. Rows are handed to `row` as parsed values.
void read_numeric_csv(std::istream& in, std::string_view header,
                      const std::function<void(const std::vector<double>&)>& row) {
  const std::size_t n_fields = split(header, ',').size();
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != header) {
    throw FormatError("line 1: expected header '" + std::string(header) + "'");
  }
  std::vector<double> values(n_fields);
  for (std::size_t line_no = 2; std::getline(in, line); ++line_no) {
    const std::string_view stripped = strip_cr(line);
    if (stripped.empty()) continue;
    const auto fields = split(stripped, ',');
    if (fields.size() != n_fields) {
      throw FormatError("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(n_fields) + " fields, got " +
                        std::to_string(fields.size()));
    }
    for (std::size_t i = 0; i < n_fields; ++i) {
      if (!parse_double(fields[i], values[i])) {
        throw FormatError("line " + std::to_string(line_no) + ": cannot parse number '" +
                          std::string(fields[i]) + "'");
      }
    }
    row(values);
  }
}

template <typename Reader>
auto from_file(const std::filesystem::path& path, Reader reader) {
  std::ifstream in(path);
  if (!in) {
    throw FormatError("cannot open file: " + path.string());
  }
  try {
    return reader(in);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace

InsulationCurve read_insulation_csv(std::istream& in) {
  InsulationCurve curve;
  read_numeric_csv(in, "freq_hz,r_db", [&curve](const std::vector<double>& v) {
    curve.push_back({v[0], v[1]});
  });
  return curve;
}

InsulationCurve read_insulation_csv(const std::filesystem::path& path) {
  return from_file(path, [](std::istream& in) { return read_insulation_csv(in); });
}

void write_insulation_csv(std::ostream& out, const InsulationCurve& curve) {
  out << "freq_hz,r_db\n";
  for (const auto& p : curve) {
    out << format_double(p.freq_hz) << ',' << format_double(p.r_db) << '\n';
  }
}

ResponseCurve read_response_csv(std::istream& in) {
  ResponseCurve curve;
  read_numeric_csv(in, "freq_hz,magnitude,magnitude_db,phase_rad",
                   [&curve](const std::vector<double>& v) {
                     curve.points.push_back({v[0], v[1], v[2], v[3]});
                   });
  return curve;
}

ResponseCurve read_response_csv(const std::filesystem::path& path) {
  return from_file(path, [](std::istream& in) { return read_response_csv(in); });
}

void write_response_csv(std::ostream& out, const ResponseCurve& curve) {
  out << "freq_hz,magnitude,magnitude_db,phase_rad\n";
  for (const auto& p : curve.points) {
    out << format_double(p.freq_hz) << ',' << format_double(p.magnitude) << ','
        << format_double(p.magnitude_db) << ',' << format_double(p.phase_rad) << '\n';
  }
}

Spectrum read_spectrum_csv(std::istream& in) {
  Spectrum spectrum;
  read_numeric_csv(in, "freq_hz,magnitude_db", [&spectrum](const std::vector<double>& v) {
    SpectrumPoint p;
    p.freq_hz = v[0];
    p.power_db = v[1];
    p.power = std::isinf(p.power_db) && p.power_db < 0.0
                  ? 0.0
                  : std::pow(10.0, p.power_db / 10.0);
    spectrum.push_back(p);
  });
  return spectrum;
}

Spectrum read_spectrum_csv(const std::filesystem::path& path) {
  return from_file(path, [](std::istream& in) { return read_spectrum_csv(in); });
}

void write_spectrum_csv(std::ostream& out, const Spectrum& spectrum) {
  out << "freq_hz,magnitude_db\n";
  for (const auto& p : spectrum) {
    out << format_double(p.freq_hz) << ',' << format_double(p.power_db) << '\n';
  }
}

}  // namespace notchlab
