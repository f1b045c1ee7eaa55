// Copyright 2026 The readscore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Small string, number and file helpers shared by the parsers and reports.

#ifndef READSCORE_TEXT_HPP
#define READSCORE_TEXT_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace readscore {

std::string to_lower_ascii(std::string_view s);
std::string_view trim(std::string_view s);

/// Splits on every occurrence of `sep`; empty fields are kept.
std::vector<std::string_view> split(std::string_view s, char sep);

/// Splits on runs of spaces/tabs; empty fields are dropped.
std::vector<std::string_view> split_whitespace(std::string_view s);

/// Splits one CSV record. Double-quoted fields may contain commas and "".
std::vector<std::string> split_csv(std::string_view line);

/// Whole-token numeric parses; nullopt on trailing garbage or overflow.
std::optional<double> parse_double(std::string_view s);
std::optional<long long> parse_int(std::string_view s, int base = 10);

/// Fixed-point rendering with `decimals` places ("-0.000" is printed as
/// "0.000").
std::string format_fixed(double value, int decimals);

/// Shortest decimal string that reads back to the identical double.
std::string format_roundtrip(double value);
/// Reads a whole file. Throws LoadError naming the path when it cannot be
/// opened.
std::string read_file(const std::filesystem::path& path);

/// Writes `content` to a sibling temporary file and renames it over `path`,
/// so readers never observe a partially written file.
void write_file_atomically(const std::filesystem::path& path,
                           std::string_view content);

/// Iterates the lines of a buffer, reporting 1-based line numbers and the
/// byte offset of each line start. A trailing '\r' is not stripped.
class LineReader {
 public:
  explicit LineReader(std::string_view buffer) : buffer_(buffer) {}

  bool next(std::string_view& line);
  std::size_t line_number() const { return line_number_; }
  std::size_t line_offset() const { return line_offset_; }

 private:
  std::string_view buffer_;
  std::size_t pos_ = 0;
  std::size_t line_number_ = 0;
  std::size_t line_offset_ = 0;
};

}  // namespace readscore

#endif  // READSCORE_TEXT_HPP
