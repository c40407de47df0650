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

#include <stdexcept>
#include <string>

namespace notchlab {

// Malformed or unsupported input data: broken CSV/WAV/coefficient files,
// sample-rate mismatches, wrong channel counts. Distinct from argument errors
// so callers (e.g. the CLI) can map the two classes to different exit codes.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// A requested measurement cannot be taken from the given curve (no local
// minimum near the requested frequency, no -3 dB crossing, ...).
class MeasurementError : public std::runtime_error {
 public:
  explicit MeasurementError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace notchlab
