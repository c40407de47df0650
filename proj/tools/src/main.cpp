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

#include <cstdio>
#include <stdexcept>

#include <CLI11.hpp>

#include "commands.hpp"
#include "notchlab/errors.hpp"

namespace cli = notchlab::cli;

int main(int argc, char** argv) {
  CLI::App app{
      "notchlab: design cascaded IIR notch filters from sound-insulation "
      "measurements and run them in floating point or as a bit-exact 8-bit "
      "fixed-point datapath model"};
  app.require_subcommand(1);

  cli::DesignOptions design;
  CLI::App* cmd_design = app.add_subcommand(
      "design", "Design notch sections and write a coefficient file");
  cmd_design->add_option("--notch", design.notch_freqs_hz, "Notch frequency in Hz (repeatable)")
      ->required();
  cmd_design->add_option("--fs", design.sample_rate_hz, "Sample rate in Hz")
      ->capture_default_str();
  cmd_design->add_option("--r", design.pole_radius, "Pole radius in [0, 1)")
      ->capture_default_str();
  cmd_design->add_option("--fraction-bits", design.fraction_bits,
                         "Fixed-point fraction bits for the quantized words")
      ->capture_default_str();
  cmd_design->add_option("-o,--output", design.output_path, "Coefficient file to write")
      ->required();

  cli::AnalyzeOptions analyze;
  CLI::App* cmd_analyze = app.add_subcommand(
      "analyze", "Sweep a coefficient file's response and measure its notches");
  cmd_analyze->add_option("coeffs", analyze.coeff_path, "Coefficient file")->required();
  cmd_analyze->add_option("--points", analyze.n_points, "Sweep grid size")
      ->capture_default_str();
  cmd_analyze->add_option("-o,--output", analyze.output_path, "Response CSV to write")
      ->required();

  cli::FilterOptions filter;
  CLI::App* cmd_filter =
      app.add_subcommand("filter", "Run a WAV file through the designed cascade");
  cmd_filter->add_option("-i,--input", filter.input_path, "Input WAV (PCM mono 16-bit)")
      ->required();
  cmd_filter->add_option("-c,--coeffs", filter.coeff_path, "Coefficient file")->required();
  cmd_filter->add_option("--engine", filter.engine, "Execution engine")
      ->check(CLI::IsMember({"float", "fixed"}))
      ->capture_default_str();
  cmd_filter->add_option("-o,--output", filter.output_path, "Filtered WAV to write")
      ->required();

  cli::SpectrumOptionsCli spectrum;
  CLI::App* cmd_spectrum =
      app.add_subcommand("spectrum", "Averaged power spectrum of a WAV file as CSV");
  cmd_spectrum->add_option("-i,--input", spectrum.input_path, "Input WAV (PCM mono 16-bit)")
      ->required();
  cmd_spectrum->add_option("--n-fft", spectrum.n_fft, "FFT length (power of two)")
      ->capture_default_str();
  cmd_spectrum->add_option("--window", spectrum.window, "Analysis window")
      ->check(CLI::IsMember({"hann", "rect"}))
      ->capture_default_str();
  cmd_spectrum->add_option("-o,--output", spectrum.output_path, "Spectrum CSV to write")
      ->required();

  cli::AcousticsOptions acoustics;
  CLI::App* cmd_acoustics = app.add_subcommand(
      "acoustics", "Find insulation dips and design the matching notch cascade");
  cmd_acoustics
      ->add_option("-i,--input", acoustics.input_path, "Insulation CSV (freq_hz,r_db)")
      ->required();
  cmd_acoustics->add_option("--fs", acoustics.sample_rate_hz, "Sample rate in Hz")
      ->capture_default_str();
  cmd_acoustics->add_option("--r", acoustics.pole_radius, "Pole radius in [0, 1)")
      ->capture_default_str();
  cmd_acoustics->add_option("--fraction-bits", acoustics.fraction_bits,
                            "Fixed-point fraction bits for the quantized words")
      ->capture_default_str();
  cmd_acoustics->add_option("-o,--output", acoustics.output_path, "Coefficient file to write")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  try {
    if (app.got_subcommand(cmd_design)) return cli::run_design(design);
    if (app.got_subcommand(cmd_analyze)) return cli::run_analyze(analyze);
    if (app.got_subcommand(cmd_filter)) return cli::run_filter(filter);
    if (app.got_subcommand(cmd_spectrum)) return cli::run_spectrum(spectrum);
    if (app.got_subcommand(cmd_acoustics)) return cli::run_acoustics(acoustics);
  } catch (const notchlab::FormatError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return cli::kExitBadData;
  } catch (const notchlab::MeasurementError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return cli::kExitBadData;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return cli::kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return cli::kExitUsage;
  } catch (const std::range_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return cli::kExitUsage;
  } catch (const std::out_of_range& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return cli::kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return cli::kExitOk;
}
