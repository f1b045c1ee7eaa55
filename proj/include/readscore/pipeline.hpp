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

// Resource loading and the batch stages shared by the command-line tool and
// the acceptance checks.

#ifndef READSCORE_PIPELINE_HPP
#define READSCORE_PIPELINE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "readscore/compare.hpp"
#include "readscore/features.hpp"
#include "readscore/frequency.hpp"
#include "readscore/hyphenation.hpp"
#include "readscore/lexicon.hpp"
#include "readscore/model.hpp"
#include "readscore/sentiment.hpp"
#include "readscore/survey.hpp"

namespace readscore {

struct ResourcePaths {
  std::filesystem::path wordnet;
  std::filesystem::path sentiment;
  std::filesystem::path frequency;
  std::filesystem::path hyphenation;

  /// root/wordnet, root/sentiwordnet.txt, root/frequency.tsv,
  /// root/hyph_en_US.dic.
  static ResourcePaths under(const std::filesystem::path& root);

  /// Throws LoadError naming the first missing path.
  void validate(bool need_hyphenation) const;
};

struct LoadedResources {
  Lexicon lexicon;
  SentimentLexicon sentiment;
  FrequencyTable frequency;
  std::optional<Hyphenator> hyphenator;

  Resources view() const;
};

LoadedResources load_resources(
    const ResourcePaths& paths, bool need_hyphenation,
    SatelliteKeying keying = SatelliteKeying::kFoldIntoAdjective);

/// word1 and word2 of every pair, in file order.
std::vector<std::string> corpus_words(const std::vector<SynsetPair>& pairs);

/// One word per line; blank lines and `#` comments skipped.
std::vector<std::string> read_word_list(const std::filesystem::path& path);

enum class FitWeighting {
  kEqual,
  /// Each word weighted by its respondent count.
  kByRespondents,
};

struct Refit {
  RegressionFit fit;
  CoefficientSet coefficients;
};

/// Joins features with observed UES by word (ValidationError listing every
/// word without a UES record) and fits the nine-predictor model.
Refit refit_model(const std::vector<WordFeatures>& features,
                  const std::vector<UESRecord>& ues, FrequencyEncoding encoding,
                  FitWeighting weighting = FitWeighting::kEqual);

/// Looks both words of each pair up in `features` (ValidationError when one
/// is missing).
std::vector<ComparisonOutcome> evaluate_pairs(
    const std::vector<SynsetPair>& pairs,
    const std::vector<WordFeatures>& features,
    const CoefficientSet& coefficients, double tie_epsilon = 0.0);

}  // namespace readscore

#endif  // READSCORE_PIPELINE_HPP
