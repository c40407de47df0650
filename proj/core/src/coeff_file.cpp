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

#include "notchlab/coeff_file.hpp"

#include <cstdint>
#include <fstream>
#include <istream>
#include <iterator>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include "notchlab/errors.hpp"
#include "text_util.hpp"

namespace notchlab {

namespace {

using internal::format_double;
using internal::parse_double;
using internal::parse_int64;

constexpr std::string_view kMagic = "notchlab-coefficients";
constexpr std::string_view kDesignKeys[] = {"a0", "a1", "a2", "b1", "b2"};
constexpr std::string_view kQuantizedKeys[] = {"fraction_bits", "a1_word", "b1_word",
                                               "b2_word"};

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw FormatError("line " + std::to_string(line_no) + ": " + what);
}

bool known_key(std::string_view key) {
  for (auto k : kDesignKeys) {
    if (key == k) return true;
  }
  for (auto k : kQuantizedKeys) {
    if (key == k) return true;
  }
  return false;
}

struct PendingSection {
  std::map<std::string, std::string, std::less<>> values;
  std::size_t line_no = 0;  // of its "section" line, for error reporting

  double number(std::string_view key) const {
    double value = 0.0;
    const auto it = values.find(key);
    if (!parse_double(it->second, value)) {
      fail(line_no, "cannot parse number '" + it->second + "' for key '" +
                        std::string(key) + "'");
    }
    return value;
  }

  std::int64_t integer(std::string_view key) const {
    std::int64_t value = 0;
    const auto it = values.find(key);
    if (!parse_int64(it->second, value)) {
      fail(line_no, "cannot parse integer '" + it->second + "' for key '" +
                        std::string(key) + "'");
    }
    return value;
  }
};

CoefficientSection finalize(const PendingSection& pending) {
  for (auto key : kDesignKeys) {
    if (!pending.values.count(key)) {
      fail(pending.line_no, "section is missing key '" + std::string(key) + "'");
    }
  }
  std::size_t quantized_keys = 0;
  for (auto key : kQuantizedKeys) quantized_keys += pending.values.count(key);
  if (quantized_keys != 0 && quantized_keys != std::size(kQuantizedKeys)) {
    fail(pending.line_no,
         "incomplete quantized block (need fraction_bits, a1_word, b1_word, b2_word)");
  }

  CoefficientSection section;
  section.design.a0 = pending.number("a0");
  section.design.a1 = pending.number("a1");
  section.design.a2 = pending.number("a2");
  section.design.b1 = pending.number("b1");
  section.design.b2 = pending.number("b2");

  if (quantized_keys != 0) {
    if (section.design.a0 != 1.0 || section.design.a2 != 1.0) {
      fail(pending.line_no, "quantized block on a section without a0 = a2 = 1");
    }
    const std::int64_t fraction_bits = pending.integer("fraction_bits");
    if (fraction_bits < 1 || fraction_bits > 62) {
      fail(pending.line_no, "fraction_bits outside [1, 62]");
    }
    QuantizedBiquad q;
    q.format.fraction_bits = static_cast<int>(fraction_bits);
    q.a1_word = pending.integer("a1_word");
    q.b1_word = pending.integer("b1_word");
    q.b2_word = pending.integer("b2_word");
    section.quantized = q;
  }
  return section;
}

}  // namespace

CoefficientFile read_coefficient_file(std::istream& in) {
  CoefficientFile file;
  bool seen_magic = false;
  bool seen_rate = false;
  std::int64_t declared_sections = -1;
  PendingSection pending;
  bool in_section = false;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view v = internal::strip_cr(line);
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    if (v.empty() || v.front() == '#') continue;

    const std::size_t space = v.find(' ');
    if (space == std::string_view::npos || v.find(' ', space + 1) != std::string_view::npos) {
      fail(line_no, "expected 'key value', got '" + std::string(v) + "'");
    }
    const std::string_view key = v.substr(0, space);
    const std::string_view value = v.substr(space + 1);

    if (!seen_magic) {
      if (key != kMagic) {
        fail(line_no, "not a coefficient file (expected '" + std::string(kMagic) + "')");
      }
      if (value != "1") {
        fail(line_no, "unsupported coefficient file version '" + std::string(value) + "'");
      }
      seen_magic = true;
      continue;
    }

    if (key == "sample_rate_hz") {
      if (in_section) fail(line_no, "sample_rate_hz must precede the sections");
      if (seen_rate) fail(line_no, "duplicate sample_rate_hz");
      if (!parse_double(value, file.sample_rate_hz) || !(file.sample_rate_hz > 0.0)) {
        fail(line_no, "sample_rate_hz must be a positive number, got '" +
                          std::string(value) + "'");
      }
      seen_rate = true;
      continue;
    }
    if (key == "sections") {
      if (in_section) fail(line_no, "sections count must precede the sections");
      if (declared_sections >= 0) fail(line_no, "duplicate sections count");
      if (!parse_int64(value, declared_sections) || declared_sections < 1) {
        fail(line_no, "sections must be a positive integer, got '" + std::string(value) + "'");
      }
      continue;
    }
    if (key == "section") {
      if (in_section) file.sections.push_back(finalize(pending));
      std::int64_t index = 0;
      if (!parse_int64(value, index) ||
          index != static_cast<std::int64_t>(file.sections.size()) + 1) {
        fail(line_no, "expected 'section " + std::to_string(file.sections.size() + 1) +
                          "', got 'section " + std::string(value) + "'");
      }
      pending = PendingSection{};
      pending.line_no = line_no;
      in_section = true;
      continue;
    }

    if (!in_section) {
      fail(line_no, "unexpected key '" + std::string(key) + "' before the first section");
    }
    if (!known_key(key)) {
      fail(line_no, "unknown key '" + std::string(key) + "'");
    }
    if (!pending.values.emplace(std::string(key), std::string(value)).second) {
      fail(line_no, "duplicate key '" + std::string(key) + "'");
    }
  }

  if (!seen_magic) {
    fail(1, "not a coefficient file (expected '" + std::string(kMagic) + "')");
  }
  if (in_section) file.sections.push_back(finalize(pending));
  if (!seen_rate) {
    fail(line_no, "missing sample_rate_hz");
  }
  if (declared_sections < 0) {
    fail(line_no, "missing sections count");
  }
  if (static_cast<std::int64_t>(file.sections.size()) != declared_sections) {
    fail(line_no, "file declares " + std::to_string(declared_sections) + " sections but holds " +
                      std::to_string(file.sections.size()));
  }
  return file;
}

CoefficientFile read_coefficient_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw FormatError("cannot open coefficient file: " + path.string());
  }
  try {
    return read_coefficient_file(in);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_coefficient_file(std::ostream& out, const CoefficientFile& file) {
  out << kMagic << " 1\n";
  out << "sample_rate_hz " << format_double(file.sample_rate_hz) << '\n';
  out << "sections " << file.sections.size() << '\n';
  for (std::size_t i = 0; i < file.sections.size(); ++i) {
    const CoefficientSection& section = file.sections[i];
    out << '\n';
    out << "section " << i + 1 << '\n';
    out << "a0 " << format_double(section.design.a0) << '\n';
    out << "a1 " << format_double(section.design.a1) << '\n';
    out << "a2 " << format_double(section.design.a2) << '\n';
    out << "b1 " << format_double(section.design.b1) << '\n';
    out << "b2 " << format_double(section.design.b2) << '\n';
    if (section.quantized) {
      out << "fraction_bits " << section.quantized->format.fraction_bits << '\n';
      out << "a1_word " << section.quantized->a1_word << '\n';
      out << "b1_word " << section.quantized->b1_word << '\n';
      out << "b2_word " << section.quantized->b2_word << '\n';
    }
  }
}

void write_coefficient_file(const std::filesystem::path& path, const CoefficientFile& file) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw FormatError("cannot write coefficient file: " + path.string());
  }
  write_coefficient_file(out, file);
  if (!out.flush()) {
    throw FormatError("cannot write coefficient file: " + path.string());
  }
}

Cascade design_cascade(const CoefficientFile& file) {
  std::vector<Biquad> sections;
  sections.reserve(file.sections.size());
  for (const CoefficientSection& section : file.sections) {
    sections.push_back(section.design);
  }
  return cascade(std::move(sections));
}

}  // namespace notchlab
