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

#include <filesystem>
#include <iosfwd>

#include "notchlab/acoustics.hpp"
#include "notchlab/response.hpp"
#include "notchlab/spectrum.hpp"

namespace notchlab {

// CSV formats. Every file carries a header row naming its columns; numbers
// are written with enough digits to round-trip a double. Parsers throw
// FormatError (with a line number) on a missing or mismatched header, wrong
// field count, or an unparsable number.

// Header: freq_hz,r_db
InsulationCurve read_insulation_csv(const std::filesystem::path& path);
InsulationCurve read_insulation_csv(std::istream& in);
void write_insulation_csv(std::ostream& out, const InsulationCurve& curve);

// Header: freq_hz,magnitude,magnitude_db,phase_rad
void write_response_csv(std::ostream& out, const ResponseCurve& curve);
ResponseCurve read_response_csv(const std::filesystem::path& path);
ResponseCurve read_response_csv(std::istream& in);

// Header: freq_hz,magnitude_db. Power is recovered on read as
// 10^(magnitude_db/10); silence round-trips through the "-inf" sentinel.
void write_spectrum_csv(std::ostream& out, const Spectrum& spectrum);
Spectrum read_spectrum_csv(const std::filesystem::path& path);
Spectrum read_spectrum_csv(std::istream& in);

}  // namespace notchlab
