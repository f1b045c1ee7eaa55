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

// The nine READ predictors for a single word.

#ifndef READSCORE_FEATURES_HPP
#define READSCORE_FEATURES_HPP

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "readscore/frequency.hpp"
#include "readscore/hyphenation.hpp"
#include "readscore/lexicon.hpp"
#include "readscore/sentiment.hpp"
#include "readscore/syllables.hpp"

namespace readscore {

inline constexpr std::size_t kPredictorCount = 9;

/// Predictor names in regression-table order.
inline constexpr std::array<std::string_view, kPredictorCount> kPredictorNames =
    {"definitions", "hypernyms", "hyponyms", "positive", "negative",
     "length",      "flesch",    "syllable", "frequency"};

struct WordFeatures {
  std::string word;
  int definitions = 0;
  int hypernyms = 0;
  int hyponyms = 0;
  double positivity = 0.0;
  double negativity = 0.0;
  int length = 0;
  int syllables = 0;
  double flesch = 0.0;
  /// Proportion of corpus tokens.
  double frequency = 0.0;

  /// Syllables that went into `flesch`; differs from `syllables` when the
  /// hyphenation count is used.
  int readability_syllables = 0;
  /// False when the word has no synsets (the coverage warning).
  bool in_lexicon = false;

  /// The nine predictors, frequency as a proportion.
  std::array<double, kPredictorCount> values() const;

  friend bool operator==(const WordFeatures&, const WordFeatures&) = default;
};

enum class HierarchyCounting { kDirect, kClosure };

/// Which syllable count feeds the Flesch score. `kHyphenation` matches the
/// readability tooling (Liang patterns); `kPredictor` reuses the Syllable
/// predictor, which makes Flesch an affine copy of it.
enum class FleschSyllables { kHyphenation, kPredictor };

struct FeatureOptions {
  LemmaMatching matching = LemmaMatching::kBaseForms;
  HierarchyCounting hierarchy = HierarchyCounting::kDirect;
  bool include_instances = false;
  SyllableMode syllable_mode = SyllableMode::kWithOverrides;
  FleschSyllables flesch_syllables = FleschSyllables::kHyphenation;
};

/// Non-owning view of the loaded resources. `hyphenator` may be null when
/// Flesch uses the predictor syllables.
struct Resources {
  const Lexicon* lexicon = nullptr;
  const SentimentLexicon* sentiment = nullptr;
  const FrequencyTable* frequency = nullptr;
  const Hyphenator* hyphenator = nullptr;
};

struct Representativeness {
  int definitions = 0;
  int hypernyms = 0;
  int hyponyms = 0;

  friend bool operator==(const Representativeness&,
                         const Representativeness&) = default;
};

Representativeness representativeness(const Lexicon& lexicon,
                                      std::string_view word,
                                      const FeatureOptions& options = {});

/// Maxima taken independently over the word's synsets; (0, 0) without any
/// scored synset.
SentimentScore affect(const Lexicon& lexicon, const SentimentLexicon& sentiment,
                      std::string_view word, const FeatureOptions& options = {});

double distribution(const FrequencyTable& table, std::string_view word);

/// 206.835 - 1.015 * (1 word / 1 sentence) - 84.6 * (syllables / 1 word),
/// unclamped. Throws ValidationError for syllables < 1.
double flesch_single_word(int syllables);

/// Throws ValidationError for an empty or multiword input.
WordFeatures extract(const Resources& resources, std::string_view word,
                     const FeatureOptions& options = {});

/// Order-preserving; work is spread over `threads` workers (0 picks the
/// hardware concurrency).
std::vector<WordFeatures> extract_all(const Resources& resources,
                                      const std::vector<std::string>& words,
                                      const FeatureOptions& options = {},
                                      unsigned threads = 0);

/// `word` plus the nine predictors in table order. Doubles are written in
/// shortest round-trip form so that a reloaded file is bit-identical.
std::string features_csv(const std::vector<WordFeatures>& rows);
std::vector<WordFeatures> read_features_csv(const std::filesystem::path& path);
std::vector<WordFeatures> parse_features_csv(std::string_view text,
                                             const std::string& source);

/// One JSON object per line with the same fields.
std::string features_jsonl(const std::vector<WordFeatures>& rows);

}  // namespace readscore

#endif  // READSCORE_FEATURES_HPP
