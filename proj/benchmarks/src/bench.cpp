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

#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "notchlab/filter_design.hpp"
#include "notchlab/fixed_engine.hpp"
#include "notchlab/quantize.hpp"
#include "notchlab/response.hpp"
#include "notchlab/spectrum.hpp"

namespace {

using namespace notchlab;

Cascade studio_cascade() {
  return cascade({design_notch({315.0, 7400.0, 0.99}),
                  design_notch({2500.0, 7400.0, 0.99})});
}

std::vector<double> tone(std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = 12000.0 * std::sin(2.0 * std::numbers::pi * 315.0 * i / 7400.0);
  }
  return out;
}

void BM_DesignNotch(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(design_notch({315.0, 7400.0, 0.99}));
  }
}
BENCHMARK(BM_DesignNotch);

void BM_QuantizeSection(benchmark::State& state) {
  const Biquad d = design_notch({315.0, 7400.0, 0.99});
  for (auto _ : state) {
    benchmark::DoNotOptimize(quantize(d));
  }
}
BENCHMARK(BM_QuantizeSection);

void BM_Sweep(benchmark::State& state) {
  const Cascade c = studio_cascade();
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep(c, 7400.0, n));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sweep)->Arg(1024)->Arg(8192);

void BM_MeasureNotch(benchmark::State& state) {
  const ResponseCurve curve = sweep(studio_cascade(), 7400.0, 8192);
  for (auto _ : state) {
    benchmark::DoNotOptimize(measure_notch(curve, 315.0));
  }
}
BENCHMARK(BM_MeasureNotch);

void BM_FixedEngineStep(benchmark::State& state) {
  SectionEngine engine{quantize(design_notch({315.0, 7400.0, 0.99}))};
  std::mt19937 rng(1u);
  std::uniform_int_distribution<int> dist(-64, 64);
  std::vector<std::int8_t> samples(4096);
  for (auto& s : samples) s = static_cast<std::int8_t>(dist(rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(engine.step(samples[i]));
    i = (i + 1) & 4095;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_FixedEngineStep);

void BM_FixedCascadeRun(benchmark::State& state) {
  const QuantizedBiquad q1 = quantize(design_notch({315.0, 7400.0, 0.99}));
  const QuantizedBiquad q2 = quantize(design_notch({2500.0, 7400.0, 0.99}));
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::int8_t> samples(n);
  for (std::size_t i = 0; i < n; ++i) {
    samples[i] = static_cast<std::int8_t>(
        std::lround(50.0 * std::sin(2.0 * std::numbers::pi * 315.0 * i / 7400.0)));
  }
  for (auto _ : state) {
    std::vector<SectionEngine> engines{SectionEngine{q1}, SectionEngine{q2}};
    benchmark::DoNotOptimize(run(engines, samples));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FixedCascadeRun)->Arg(7400)->Arg(74000);

void BM_RunReference(benchmark::State& state) {
  const Cascade c = studio_cascade();
  const auto samples = tone(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_reference(c, samples));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunReference)->Arg(7400)->Arg(74000);

void BM_Fft(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(2u);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<std::complex<double>> data(n);
  for (auto& v : data) v = {dist(rng), dist(rng)};
  for (auto _ : state) {
    std::vector<std::complex<double>> work = data;
    fft(work);
    benchmark::DoNotOptimize(work.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Fft)->Arg(1024)->Arg(8192)->Arg(32768);

void BM_PowerSpectrum(benchmark::State& state) {
  const auto samples = tone(74000);
  SpectrumOptions opt;
  opt.n_fft = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(power_spectrum(samples, opt));
  }
}
BENCHMARK(BM_PowerSpectrum)->Arg(1024)->Arg(8192);

}  // namespace

BENCHMARK_MAIN();
