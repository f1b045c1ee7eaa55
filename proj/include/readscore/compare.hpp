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

// Pairwise synonym comparison, accuracy accounting and Welch's t-test.

#ifndef READSCORE_COMPARE_HPP
#define READSCORE_COMPARE_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "readscore/features.hpp"
#include "readscore/model.hpp"

namespace readscore {

enum class Winner { kWord1, kWord2, kTie };

struct SynsetPair {
  std::string synset_label;
  std::string word1;
  std::string word2;
  double observed_ues1 = 0.0;
  double observed_ues2 = 0.0;

  /// Throws ValidationError unless the words differ and both UES values lie
  /// on the 1..5 scale.
  void validate() const;
};

struct ComparisonOutcome {
  SynsetPair pair;
  double predicted1 = 0.0;
  double predicted2 = 0.0;
  Winner predicted_winner = Winner::kTie;
  Winner observed_winner = Winner::kTie;
  bool agree = false;
};

/// kWord1 iff score1 - score2 > tie_epsilon, kWord2 symmetrically.
Winner compare_scores(double score1, double score2, double tie_epsilon = 0.0);

/// The winning word, or "tie".
std::string winner_name(Winner winner, std::string_view word1,
                        std::string_view word2);

/// Observed winner uses epsilon 0; ties never agree.
ComparisonOutcome compare_pair(const CoefficientSet& coefficients,
                               const SynsetPair& pair,
                               const WordFeatures& features1,
                               const WordFeatures& features2,
                               double tie_epsilon = 0.0);

/// Outcome for precomputed predictions.
ComparisonOutcome compare_predictions(const SynsetPair& pair, double predicted1,
                                      double predicted2,
                                      double tie_epsilon = 0.0);

struct Accuracy {
  std::size_t hits = 0;
  std::size_t total = 0;
  double accuracy = 0.0;
};

/// Throws ValidationError for an empty list.
Accuracy evaluate_accuracy(const std::vector<ComparisonOutcome>& outcomes);

struct WelchResult {
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;
};

/// Two-sided. Throws ValidationError for n < 2 or negative SD and
/// NumericalError when both SDs are 0.
WelchResult welch_t(double mean1, double sd1, std::size_t n1, double mean2,
                    double sd2, std::size_t n2);

/// Throws NumericalError for fewer than 2 points or zero variance.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

/// CSV with header synset,word1,ues1,word2,ues2. Rows are validated; errors
/// name the source and line.
std::vector<SynsetPair> parse_pairs_csv(std::string_view text,
                                        const std::string& source);
std::vector<SynsetPair> read_pairs_csv(const std::filesystem::path& path);

/// synset, word1, ues1, predicted1, word2, ues2, predicted2, higher
/// observed, higher predicted, agree; scores with two decimals.
std::string evaluation_csv(const std::vector<ComparisonOutcome>& outcomes);
std::string evaluation_jsonl(const std::vector<ComparisonOutcome>& outcomes);
/// "hits/total (accuracy%)".
std::string accuracy_line(const Accuracy& accuracy);

}  // namespace readscore

#endif  // READSCORE_COMPARE_HPP
