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

#include "notchlab/wav.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <string>

#include "notchlab/errors.hpp"

namespace notchlab {

namespace {

std::uint16_t get_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t get_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

void put_u32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

}  // namespace

WavData read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FormatError("cannot open WAV file: " + path.string());
  }
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto* data = reinterpret_cast<const unsigned char*>(bytes.data());
  const std::size_t size = bytes.size();

  if (size < 12 || std::memcmp(data, "RIFF", 4) != 0 || std::memcmp(data + 8, "WAVE", 4) != 0) {
    throw FormatError(path.string() + ": not a RIFF/WAVE file");
  }

  bool have_fmt = false;
  bool have_data = false;
  std::uint16_t format_tag = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits_per_sample = 0;
  std::size_t data_offset = 0;
  std::size_t data_size = 0;

  std::size_t pos = 12;
  while (pos + 8 <= size) {
    const unsigned char* chunk = data + pos;
    const std::uint32_t chunk_size = get_u32(chunk + 4);
    pos += 8;
    if (pos + chunk_size > size) {
      throw FormatError(path.string() + ": truncated chunk");
    }
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (chunk_size < 16) {
        throw FormatError(path.string() + ": fmt chunk too short");
      }
      format_tag = get_u16(data + pos);
      channels = get_u16(data + pos + 2);
      sample_rate = get_u32(data + pos + 4);
      bits_per_sample = get_u16(data + pos + 14);
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      data_offset = pos;
      data_size = chunk_size;
      have_data = true;
    }
    pos += chunk_size + (chunk_size % 2);  // chunks are word-aligned
  }

  if (!have_fmt) {
    throw FormatError(path.string() + ": missing fmt chunk");
  }
  if (!have_data) {
    throw FormatError(path.string() + ": missing data chunk");
  }
  if (format_tag != 1) {
    throw FormatError(path.string() + ": only PCM (format 1) is supported, got format " +
                      std::to_string(format_tag));
  }
  if (channels != 1) {
    throw FormatError(path.string() + ": only mono is supported, got " +
                      std::to_string(channels) + " channels");
  }
  if (bits_per_sample != 16) {
    throw FormatError(path.string() + ": only 16-bit samples are supported, got " +
                      std::to_string(bits_per_sample) + " bits");
  }
  if (sample_rate == 0) {
    throw FormatError(path.string() + ": sample rate is zero");
  }
  if (data_size % 2 != 0) {
    throw FormatError(path.string() + ": data chunk holds a partial sample");
  }

  WavData wav;
  wav.sample_rate_hz = sample_rate;
  wav.samples.resize(data_size / 2);
  for (std::size_t i = 0; i < wav.samples.size(); ++i) {
    wav.samples[i] = static_cast<std::int16_t>(get_u16(data + data_offset + 2 * i));
  }
  return wav;
}

void write_wav(const std::filesystem::path& path, std::uint32_t sample_rate_hz,
               std::span<const std::int16_t> samples) {
  if (sample_rate_hz == 0) {
    throw FormatError("WAV sample rate must be nonzero");
  }
  const std::uint32_t data_bytes = static_cast<std::uint32_t>(2 * samples.size());

  std::string out;
  out.reserve(44 + data_bytes);
  out += "RIFF";
  put_u32(out, 36 + data_bytes);
  out += "WAVE";
  out += "fmt ";
  put_u32(out, 16);
  put_u16(out, 1);  // PCM
  put_u16(out, 1);  // mono
  put_u32(out, sample_rate_hz);
  put_u32(out, sample_rate_hz * 2);  // byte rate
  put_u16(out, 2);                   // block align
  put_u16(out, 16);                  // bits per sample
  out += "data";
  put_u32(out, data_bytes);
  for (std::int16_t s : samples) {
    put_u16(out, static_cast<std::uint16_t>(s));
  }

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file || !file.write(out.data(), static_cast<std::streamsize>(out.size()))) {
    throw FormatError("cannot write WAV file: " + path.string());
  }
}

std::int8_t to_sample8(std::int16_t s) {
  const int shifted = (static_cast<int>(s) + 128) >> 8;
  return static_cast<std::int8_t>(std::clamp(shifted, -128, 127));
}

std::int16_t to_sample16(std::int8_t s) {
  return static_cast<std::int16_t>(static_cast<int>(s) * 256);
}

std::vector<std::int8_t> to_sample8(std::span<const std::int16_t> samples) {
  std::vector<std::int8_t> out;
  out.reserve(samples.size());
  for (std::int16_t s : samples) out.push_back(to_sample8(s));
  return out;
}

std::vector<std::int16_t> to_sample16(std::span<const std::int8_t> samples) {
  std::vector<std::int16_t> out;
  out.reserve(samples.size());
  for (std::int8_t s : samples) out.push_back(to_sample16(s));
  return out;
}

}  // namespace notchlab
