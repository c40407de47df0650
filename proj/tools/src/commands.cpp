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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "notchlab/acoustics.hpp"
#include "notchlab/coeff_file.hpp"
#include "notchlab/csv.hpp"
#include "notchlab/errors.hpp"
#include "notchlab/filter_design.hpp"
#include "notchlab/fixed_engine.hpp"
#include "notchlab/quantize.hpp"
#include "notchlab/response.hpp"
#include "notchlab/spectrum.hpp"
#include "notchlab/wav.hpp"

namespace notchlab::cli {

namespace {

bool is_identity(const Biquad& f) {
  return f.a0 == 1.0 && f.a1 == 0.0 && f.a2 == 0.0 && f.b1 == 0.0 && f.b2 == 0.0;
}

void print_stability(const char* label, const StabilityReport& report) {
  std::printf("%s poles:", label);
  for (double mag : report.pole_magnitudes) std::printf(" %.6g", mag);
  std::printf(" (%s)\n", report.stable ? "stable" : "UNSTABLE");
}

// The notch frequency a section was designed for, recovered from its
// unit-circle zero pair; < 0 when the section has no such pair.
double notch_frequency_of(const Biquad& section, double sample_rate_hz) {
  const std::vector<double> numerator{section.a0, section.a1, section.a2};
  if (numerator[0] == 0.0) return -1.0;
  for (const auto& zero : polynomial_roots(numerator)) {
    if (zero.imag() <= 0.0) continue;
    if (std::abs(std::abs(zero) - 1.0) > 1e-6) continue;
    const double freq = std::arg(zero) / (2.0 * std::numbers::pi) * sample_rate_hz;
    if (freq > 0.0 && freq < 0.5 * sample_rate_hz) return freq;
  }
  return -1.0;
}

CoefficientFile design_file(const std::vector<NotchSpec>& specs, int fraction_bits) {
  CoefficientFile file;
  if (!specs.empty()) file.sample_rate_hz = specs.front().sample_rate_hz;
  const FixedFormat format{fraction_bits, Rounding::kTruncate};
  for (const NotchSpec& spec : specs) {
    CoefficientSection section;
    section.design = design_notch(spec);
    section.quantized = quantize(section.design, format);
    file.sections.push_back(section);
  }
  return file;
}

// Shared tail of `design` and `acoustics`: report both stability checks,
// write the file, fail with the stability exit code if quantization pushed a
// pole out of the unit circle.
int finish_design(const CoefficientFile& file, const std::string& output_path) {
  std::vector<Biquad> quantized_sections;
  for (const CoefficientSection& section : file.sections) {
    quantized_sections.push_back(as_biquad(*section.quantized));
  }
  const StabilityReport designed = check_stability(design_cascade(file));
  const StabilityReport quantized = check_stability(cascade(quantized_sections));
  print_stability("designed", designed);
  print_stability("quantized", quantized);

  write_coefficient_file(std::filesystem::path(output_path), file);
  std::printf("wrote %s (%zu sections, fs %g Hz)\n", output_path.c_str(),
              file.sections.size(), file.sample_rate_hz);

  if (!designed.stable || !quantized.stable) {
    std::fprintf(stderr, "error: filter is unstable; see pole magnitudes above\n");
    return kExitUnstable;
  }
  return kExitOk;
}

}  // namespace

int run_design(const DesignOptions& opts) {
  std::vector<NotchSpec> specs;
  specs.reserve(opts.notch_freqs_hz.size());
  for (double freq : opts.notch_freqs_hz) {
    specs.push_back(NotchSpec{freq, opts.sample_rate_hz, opts.pole_radius});
  }

  const CoefficientFile file = design_file(specs, opts.fraction_bits);
  for (std::size_t i = 0; i < file.sections.size(); ++i) {
    const CoefficientSection& s = file.sections[i];
    std::printf("section %zu: notch %g Hz\n", i + 1, specs[i].notch_freq_hz);
    std::printf("  a1 %.17g  b1 %.17g  b2 %.17g\n", s.design.a1, s.design.b1, s.design.b2);
    std::printf("  words a1 %lld  b1 %lld  b2 %lld  (fraction_bits %d)\n",
                static_cast<long long>(s.quantized->a1_word),
                static_cast<long long>(s.quantized->b1_word),
                static_cast<long long>(s.quantized->b2_word),
                s.quantized->format.fraction_bits);
  }
  return finish_design(file, opts.output_path);
}

int run_analyze(const AnalyzeOptions& opts) {
  const CoefficientFile file = read_coefficient_file(std::filesystem::path(opts.coeff_path));
  const Cascade filter = design_cascade(file);

  const StabilityReport stability = check_stability(filter);
  print_stability("designed", stability);

  const ResponseCurve curve = sweep(filter, file.sample_rate_hz, opts.n_points);
  {
    std::ofstream out(opts.output_path, std::ios::trunc);
    if (!out) {
      throw FormatError("cannot write response CSV: " + opts.output_path);
    }
    write_response_csv(out, curve);
  }
  std::printf("wrote %s (%zu points, fs %g Hz)\n", opts.output_path.c_str(),
              curve.points.size(), file.sample_rate_hz);

  for (std::size_t i = 0; i < file.sections.size(); ++i) {
    const double freq = notch_frequency_of(file.sections[i].design, file.sample_rate_hz);
    if (freq < 0.0) {
      std::printf("section %zu: no unit-circle zero pair, nothing to measure\n", i + 1);
      continue;
    }
    try {
      const NotchMeasurement m = measure_notch(curve, freq);
      std::printf("section %zu: notch at %.6g Hz, depth %.6g dB, bandwidth %.6g Hz\n",
                  i + 1, m.notch_freq_hz, m.depth_db, m.bandwidth_3db_hz);
    } catch (const MeasurementError& e) {
      std::printf("section %zu: notch at %.6g Hz not measurable: %s\n", i + 1, freq,
                  e.what());
    }
  }

  return stability.stable ? kExitOk : kExitUnstable;
}

namespace {

int run_filter_float(const WavData& wav, const CoefficientFile& file,
                     const std::string& output_path) {
  const Cascade filter = design_cascade(file);
  const StabilityReport stability = check_stability(filter);
  if (!stability.stable) {
    print_stability("designed", stability);
    std::fprintf(stderr, "error: cascade is unstable; not filtering\n");
    return kExitUnstable;
  }

  std::vector<double> input(wav.samples.begin(), wav.samples.end());
  const std::vector<double> output = run_reference(filter, input);

  std::vector<std::int16_t> samples;
  samples.reserve(output.size());
  std::uint64_t clipped = 0;
  double peak_out = 0.0;
  for (double v : output) {
    peak_out = std::max(peak_out, std::abs(v));
    const long r = std::lrint(v);
    if (r > 32767 || r < -32768) ++clipped;
    samples.push_back(static_cast<std::int16_t>(std::clamp(r, -32768L, 32767L)));
  }
  write_wav(std::filesystem::path(output_path), wav.sample_rate_hz, samples);

  double peak_in = 0.0;
  for (std::int16_t s : wav.samples) peak_in = std::max(peak_in, std::abs(static_cast<double>(s)));
  std::printf("float engine: %zu samples, peak in %g, peak out %.6g, clipped %llu\n",
              samples.size(), peak_in, peak_out,
              static_cast<unsigned long long>(clipped));
  std::printf("wrote %s\n", output_path.c_str());
  return kExitOk;
}

int run_filter_fixed(const WavData& wav, const CoefficientFile& file,
                     const std::string& output_path) {
  std::vector<SectionEngine> engines;
  std::vector<Biquad> quantized_sections;
  for (std::size_t i = 0; i < file.sections.size(); ++i) {
    const CoefficientSection& section = file.sections[i];
    if (is_identity(section.design) && !section.quantized) {
      continue;  // exact pass-through, nothing for the engine to do
    }
    if (!section.quantized) {
      throw FormatError("section " + std::to_string(i + 1) +
                        " has no quantized coefficients; the fixed engine needs them");
    }
    if (section.quantized->format.fraction_bits != 15) {
      throw FormatError("section " + std::to_string(i + 1) + " is quantized at " +
                        std::to_string(section.quantized->format.fraction_bits) +
                        " fraction bits; the fixed engine runs 15");
    }
    quantized_sections.push_back(as_biquad(*section.quantized));
    engines.emplace_back(*section.quantized);
  }

  if (!engines.empty()) {
    const StabilityReport stability = check_stability(cascade(quantized_sections));
    if (!stability.stable) {
      print_stability("quantized", stability);
      std::fprintf(stderr, "error: quantized cascade is unstable; not filtering\n");
      return kExitUnstable;
    }
  }

  const std::vector<std::int8_t> input = to_sample8(wav.samples);
  const RunResult result = run(engines, input);
  write_wav(std::filesystem::path(output_path), wav.sample_rate_hz,
            to_sample16(result.samples));

  std::printf("fixed engine: %llu samples through %zu sections\n",
              static_cast<unsigned long long>(result.report.samples_processed),
              engines.size());
  for (std::size_t i = 0; i < engines.size(); ++i) {
    std::printf("  section %zu: saturations %llu, peak accumulator %ld\n", i + 1,
                static_cast<unsigned long long>(result.report.saturations[i]),
                static_cast<long>(result.report.peak_accumulators[i]));
  }
  std::printf("wrote %s\n", output_path.c_str());
  return kExitOk;
}

}  // namespace

int run_filter(const FilterOptions& opts) {
  const WavData wav = read_wav(std::filesystem::path(opts.input_path));
  const CoefficientFile file = read_coefficient_file(std::filesystem::path(opts.coeff_path));
  if (static_cast<double>(wav.sample_rate_hz) != file.sample_rate_hz) {
    throw FormatError("sample rate mismatch: WAV is " + std::to_string(wav.sample_rate_hz) +
                      " Hz, coefficients were designed for " +
                      std::to_string(file.sample_rate_hz) + " Hz (resampling is out of scope)");
  }
  return opts.engine == "fixed" ? run_filter_fixed(wav, file, opts.output_path)
                                : run_filter_float(wav, file, opts.output_path);
}

int run_spectrum(const SpectrumOptionsCli& opts) {
  const WavData wav = read_wav(std::filesystem::path(opts.input_path));
  std::vector<double> samples(wav.samples.begin(), wav.samples.end());

  SpectrumOptions options;
  options.n_fft = opts.n_fft;
  options.window = opts.window == "rect" ? Window::kRectangular : Window::kHann;
  options.sample_rate_hz = static_cast<double>(wav.sample_rate_hz);
  const Spectrum spectrum = power_spectrum(samples, options);

  {
    std::ofstream out(opts.output_path, std::ios::trunc);
    if (!out) {
      throw FormatError("cannot write spectrum CSV: " + opts.output_path);
    }
    write_spectrum_csv(out, spectrum);
  }

  const std::size_t peak = peak_bin(spectrum);
  std::printf("%zu bins at %g Hz spacing, peak at %.6g Hz (bin %zu)\n", spectrum.size(),
              options.sample_rate_hz / static_cast<double>(opts.n_fft),
              spectrum[peak].freq_hz, peak);
  std::printf("wrote %s\n", opts.output_path.c_str());
  return kExitOk;
}

int run_acoustics(const AcousticsOptions& opts) {
  const InsulationCurve curve = read_insulation_csv(std::filesystem::path(opts.input_path));

  DipReport report;
  try {
    report = find_dips(curve);
  } catch (const std::invalid_argument& e) {
    // The curve came from a file, so a structural defect is bad data, not a
    // bad argument.
    throw FormatError(opts.input_path + ": " + e.what());
  }

  auto print_dip = [](const char* label, const std::optional<InsulationDip>& dip) {
    if (dip) {
      std::printf("%s dip at %g Hz: R %g dB, depth %g dB below neighbours\n", label,
                  dip->freq_hz, dip->r_db, dip->depth_db);
    } else {
      std::printf("%s dip: none\n", label);
    }
  };
  print_dip("resonance", report.resonance);
  print_dip("coincidence", report.coincidence);

  if (!report.resonance && !report.coincidence) {
    std::printf("no dips found; no filter to design\n");
    return kExitOk;
  }

  const std::vector<NotchSpec> specs =
      notch_specs_from_dips(report, opts.sample_rate_hz, opts.pole_radius);
  const CoefficientFile file = design_file(specs, opts.fraction_bits);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    std::printf("section %zu: notch %g Hz at fs %g Hz, r %g\n", i + 1,
                specs[i].notch_freq_hz, specs[i].sample_rate_hz, specs[i].pole_radius);
  }
  return finish_design(file, opts.output_path);
}

}  // namespace notchlab::cli
