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

// SentiWordNet-style synset sentiment scores.

#ifndef READSCORE_SENTIMENT_HPP
#define READSCORE_SENTIMENT_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "readscore/lexicon.hpp"

namespace readscore {

struct SentimentScore {
  double positivity = 0.0;
  double negativity = 0.0;

  friend bool operator==(const SentimentScore&, const SentimentScore&) = default;
};

/// How adjective satellites are keyed. SentiWordNet 3.0 writes `a` for both
/// head adjectives and satellites, so the default folds them together.
enum class SatelliteKeying { kFoldIntoAdjective, kDistinct };

class SentimentLexicon {
 public:
  explicit SentimentLexicon(
      SatelliteKeying keying = SatelliteKeying::kFoldIntoAdjective)
      : keying_(keying) {}

  /// Throws ValidationError on a score outside [0,1] or a repeated id.
  SentimentLexicon(std::vector<std::pair<SynsetId, SentimentScore>> entries,
                   SatelliteKeying keying = SatelliteKeying::kFoldIntoAdjective);

  std::optional<SentimentScore> find(SynsetId id) const;
  std::size_t size() const { return scores_.size(); }
  SatelliteKeying keying() const { return keying_; }

 private:
  friend SentimentLexicon parse_sentiment(const std::filesystem::path&,
                                          SatelliteKeying);
  SynsetId key(SynsetId id) const;
  void insert(SynsetId id, SentimentScore score, const std::string& where);

  SatelliteKeying keying_;
  std::unordered_map<SynsetId, SentimentScore, SynsetIdHash> scores_;
};

/// Reads the tab-separated POS, ID, PosScore, NegScore, SynsetTerms, Gloss
/// layout. Lines whose first non-blank character is `#` are skipped, which
/// also covers the distribution's tab-indented trailer.
SentimentLexicon parse_sentiment(
    const std::filesystem::path& path,
    SatelliteKeying keying = SatelliteKeying::kFoldIntoAdjective);

}  // namespace readscore

#endif  // READSCORE_SENTIMENT_HPP
