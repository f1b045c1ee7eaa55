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

// User Engagement Scale responses: reverse coding, per-word aggregation and
// scale reliability.

#ifndef READSCORE_SURVEY_HPP
#define READSCORE_SURVEY_HPP

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace readscore {

inline constexpr std::size_t kItemCount = 8;

/// Item codes in column order; the `-n` items are negatively worded.
inline constexpr std::array<std::string_view, kItemCount> kItemCodes = {
    "EA", "EA-n", "FA", "FA-n", "PU", "PU-n", "RW", "RW-n"};

bool is_negative_item(std::size_t item);

struct UESRecord {
  std::string word;
  double mean_ues = 0.0;
  std::optional<double> sd_ues;
  std::size_t n = 0;
};

struct ItemResponseRow {
  std::string word;
  /// Raw answers in kItemCodes order, before reverse coding.
  std::array<int, kItemCount> responses{};

  /// Throws ValidationError for an answer outside 1..5.
  void validate() const;
};

/// 6 - response. Throws ValidationError outside 1..5.
int reverse_code(int response);

/// Mean of the eight items after reverse-coding the negative ones.
double row_ues(const ItemResponseRow& row);

/// Per-word mean, sample SD (absent for a single row) and count, sorted by
/// word. Throws ValidationError for an empty input.
std::vector<UESRecord> aggregate(const std::vector<ItemResponseRow>& rows);

/// k/(k-1) * (1 - sum of item variances / variance of row totals), sample
/// variances. Throws NumericalError for < 2 rows, < 2 items, ragged rows or
/// zero total variance.
double cronbach_alpha(const std::vector<std::vector<double>>& items);

/// Reverse-coded item matrix for cronbach_alpha.
std::vector<std::vector<double>> scored_items(
    const std::vector<ItemResponseRow>& rows);

/// CSV `word,mean_ues,sd_ues,n`; sd may be empty.
std::vector<UESRecord> parse_ues_csv(std::string_view text,
                                     const std::string& source);
std::vector<UESRecord> read_ues_csv(const std::filesystem::path& path);
std::string ues_csv(const std::vector<UESRecord>& records);

/// CSV `word,EA,EA_n,FA,FA_n,PU,PU_n,RW,RW_n`.
std::vector<ItemResponseRow> parse_items_csv(std::string_view text,
                                             const std::string& source);
std::vector<ItemResponseRow> read_items_csv(const std::filesystem::path& path);

}  // namespace readscore

#endif  // READSCORE_SURVEY_HPP
