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
#include <string>
#include <vector>

namespace notchlab::cli {

// Process exit codes, shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;      // bad arguments / values out of domain
inline constexpr int kExitBadData = 3;    // unreadable or malformed input data
inline constexpr int kExitUnstable = 4;   // a filter failed the stability check

struct DesignOptions {
  std::vector<double> notch_freqs_hz;
  double sample_rate_hz = 7400.0;
  double pole_radius = 0.99;
  int fraction_bits = 15;
  std::string output_path;
};

struct AnalyzeOptions {
  std::string coeff_path;
  std::size_t n_points = 8192;
  std::string output_path;
};

struct FilterOptions {
  std::string input_path;
  std::string coeff_path;
  std::string engine = "float";  // "float" | "fixed"
  std::string output_path;
};

struct SpectrumOptionsCli {
  std::string input_path;
  std::size_t n_fft = 8192;
  std::string window = "hann";  // "hann" | "rect"
  std::string output_path;
};

struct AcousticsOptions {
  std::string input_path;
  double sample_rate_hz = 7400.0;
  double pole_radius = 0.99;
  int fraction_bits = 15;
  std::string output_path;
};

int run_design(const DesignOptions& opts);
int run_analyze(const AnalyzeOptions& opts);
int run_filter(const FilterOptions& opts);
int run_spectrum(const SpectrumOptionsCli& opts);
int run_acoustics(const AcousticsOptions& opts);

}  // namespace notchlab::cli
