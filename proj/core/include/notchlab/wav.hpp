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

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace notchlab {

// Mono 16-bit PCM audio. This is deliberately the only WAV flavour the
// toolkit reads or writes; anything else raises FormatError on read.
struct WavData {
  std::uint32_t sample_rate_hz = 0;
  std::vector<std::int16_t> samples;
};

// Reads a RIFF/WAVE file. Accepts only format tag 1 (PCM), one channel,
// 16 bits per sample; throws FormatError otherwise or on any structural
// problem (bad magic, truncated chunk, missing fmt/data).
WavData read_wav(const std::filesystem::path& path);

// Writes samples as mono 16-bit PCM. Throws FormatError if the file cannot
// be created or sample_rate_hz is zero.
void write_wav(const std::filesystem::path& path, std::uint32_t sample_rate_hz,
               std::span<const std::int16_t> samples);

// 16-bit to 8-bit with rounding toward the nearest 8-bit code:
// y = clamp((s + 128) >> 8, -128, 127). Inverse scales by 256.
std::int8_t to_sample8(std::int16_t s);
std::int16_t to_sample16(std::int8_t s);
std::vector<std::int8_t> to_sample8(std::span<const std::int16_t> samples);
std::vector<std::int16_t> to_sample16(std::span<const std::int8_t> samples);

}  // namespace notchlab
