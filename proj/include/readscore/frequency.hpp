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

// Word frequency table (proportion of corpus tokens).

#ifndef READSCORE_FREQUENCY_HPP
#define READSCORE_FREQUENCY_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace readscore {

class FrequencyTable {
 public:
  FrequencyTable() = default;

  /// Keys are lowercased. Throws ValidationError on a value outside (0,1]
  /// or a key that repeats after lowercasing.
  explicit FrequencyTable(std::vector<std::pair<std::string, double>> entries);

  /// Exactly 0 for absent words.
  double lookup(std::string_view word) const;
  std::size_t size() const { return freq_.size(); }

 private:
  friend FrequencyTable parse_frequency(const std::filesystem::path&);
  void insert(std::string word, double value, const std::string& where);

  std::unordered_map<std::string, double> freq_;
};

/// One `word<whitespace>proportion` entry per line; blank lines and `#`
/// comments are ignored.
FrequencyTable parse_frequency(const std::filesystem::path& path);

/// log10 of occurrences per billion tokens, floored at 0 (the floor is what
/// an absent word maps to).
double zipf_scale(double proportion);

}  // namespace readscore

#endif  // READSCORE_FREQUENCY_HPP
