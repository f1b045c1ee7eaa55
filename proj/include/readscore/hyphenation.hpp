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

// Liang pattern hyphenation over a Hunspell/LibreOffice `hyph_*.dic` file,
// reproducing the matching rules of the pyphen library.

#ifndef READSCORE_HYPHENATION_HPP
#define READSCORE_HYPHENATION_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace readscore {

class Hyphenator {
 public:
  /// Parses pattern text. The first line names the encoding (UTF-8 or a
  /// single-byte one read as Latin-1); `%`/`#` comments and the *HYPHENMIN
  /// directives are skipped.
  static Hyphenator from_patterns(std::string_view text);
  static Hyphenator load(const std::filesystem::path& path);

  /// Break positions as character indices into the lowercased word, keeping
  /// at least `left` characters before the first break and `right` after
  /// the last.
  std::vector<std::size_t> positions(std::string_view word) const;

  /// Hyphenated pieces, i.e. positions().size() + 1. Throws
  /// ValidationError on an empty word.
  int syllables(std::string_view word) const;

  std::string hyphenate(std::string_view word, char mark = '-') const;

  std::size_t pattern_count() const { return patterns_.size(); }

  std::size_t left = 2;
  std::size_t right = 2;

 private:
  struct Pattern {
    std::size_t start;
    std::vector<std::uint8_t> values;
  };

  std::unordered_map<std::u32string, Pattern> patterns_;
  std::size_t max_length_ = 0;
};

}  // namespace readscore

#endif  // READSCORE_HYPHENATION_HPP
