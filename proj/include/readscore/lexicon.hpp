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

// In-memory WordNet: synsets, the lemma index, exception lists and the
// hypernym/hyponym graph, loaded from the standard wndb database files.

#ifndef READSCORE_LEXICON_HPP
#define READSCORE_LEXICON_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace readscore {

/// Declaration order is the order synsets are reported in.
enum class PartOfSpeech : std::uint8_t {
  kNoun,
  kVerb,
  kAdjective,
  kSatellite,
  kAdverb,
};

inline constexpr std::array<PartOfSpeech, 5> kAllPartsOfSpeech = {
    PartOfSpeech::kNoun, PartOfSpeech::kVerb, PartOfSpeech::kAdjective,
    PartOfSpeech::kSatellite, PartOfSpeech::kAdverb};

/// The four parts of speech that own an index file.
inline constexpr std::array<PartOfSpeech, 4> kIndexPartsOfSpeech = {
    PartOfSpeech::kNoun, PartOfSpeech::kVerb, PartOfSpeech::kAdjective,
    PartOfSpeech::kAdverb};

/// One of 'n', 'v', 'a', 's', 'r'.
char pos_tag(PartOfSpeech pos);
std::optional<PartOfSpeech> pos_from_tag(char tag);
/// "noun", "verb", "adj", "adj-satellite", "adverb".
std::string_view pos_name(PartOfSpeech pos);
/// Satellites are indexed and looked up as adjectives.
PartOfSpeech index_pos(PartOfSpeech pos);

struct SynsetId {
  PartOfSpeech pos = PartOfSpeech::kNoun;
  std::uint32_t offset = 0;

  friend auto operator<=>(const SynsetId&, const SynsetId&) = default;
};

/// Renders as "00001740-a", the usual offset-pos notation.
std::string to_string(SynsetId id);

struct SynsetIdHash {
  std::size_t operator()(SynsetId id) const noexcept {
    return (static_cast<std::size_t>(id.offset) << 3) ^
           static_cast<std::size_t>(id.pos);
  }
};

struct Synset {
  SynsetId id;
  /// Lowercased, adjective markers removed; multiword lemmas keep their
  /// underscores.
  std::vector<std::string> lemmas;
  std::string gloss;
  std::vector<SynsetId> hypernyms;
  std::vector<SynsetId> hyponyms;
  std::vector<SynsetId> instance_hypernyms;
  std::vector<SynsetId> instance_hyponyms;

  friend bool operator==(const Synset&, const Synset&) = default;
};

struct LoadReport {
  std::array<std::size_t, 5> synsets_by_pos{};
  std::size_t index_entries = 0;
  std::size_t exception_entries = 0;
  std::size_t header_lines = 0;
  /// Inverse edges that were missing from the source and added on load.
  std::size_t symmetrized_edges = 0;
};

/// Immutable once constructed; safe for concurrent readers.
class Lexicon {
 public:
  /// lemma -> synsets, one slot per index part of speech (n, v, a, r).
  using IndexMap =
      std::unordered_map<std::string, std::array<std::vector<SynsetId>, 4>>;
  /// inflected form -> base forms, one map per index part of speech.
  using ExceptionMap =
      std::array<std::unordered_map<std::string, std::vector<std::string>>,
                 4>;

  Lexicon() = default;

  /// Validates that every pointer and index entry resolves (LoadError
  /// otherwise) and makes hypernym/hyponym edges mutually consistent.
  Lexicon(std::vector<Synset> synsets, IndexMap index,
          ExceptionMap exceptions = {});

  /// Builds the index from the synsets' own lemma lists.
  static Lexicon from_synsets(std::vector<Synset> synsets,
                              ExceptionMap exceptions = {});

  std::size_t size() const { return synsets_.size(); }
  /// Sorted by SynsetId.
  const std::vector<Synset>& synsets() const { return synsets_; }

  const Synset* find(SynsetId id) const;
  /// Throws LoadError for an unknown id.
  const Synset& at(SynsetId id) const;

  /// Exact index lookup; `pos` may be a satellite, which reads the adjective
  /// slot. Returns an empty list for unindexed lemmas.
  const std::vector<SynsetId>& lookup(std::string_view lemma,
                                      PartOfSpeech pos) const;
  bool is_indexed(std::string_view lemma, PartOfSpeech pos) const;
  const std::vector<std::string>* exceptions(std::string_view form,
                                             PartOfSpeech pos) const;

  const IndexMap& index() const { return index_; }
  const LoadReport& report() const { return report_; }

  friend bool operator==(const Lexicon& a, const Lexicon& b) {
    return a.synsets_ == b.synsets_ && a.index_ == b.index_ &&
           a.exceptions_ == b.exceptions_;
  }

 private:
  friend Lexicon parse_wordnet(const std::filesystem::path& directory);

  std::vector<Synset> synsets_;
  IndexMap index_;
  ExceptionMap exceptions_;
  LoadReport report_;
};

/// Loads data.{noun,verb,adj,adv}, index.{noun,verb,adj,adv} and, when
/// present, {noun,verb,adj,adv}.exc from `directory`. Every record's offset
/// field is checked against its byte position.
Lexicon parse_wordnet(const std::filesystem::path& directory);

enum class LemmaMatching {
  /// The query must be a lemma of the synset.
  kExact,
  /// The query is reduced to its indexed base forms first (exception lists,
  /// then one round of inflectional suffix rules).
  kBaseForms,
};

/// Lowercases `word` (spaces become underscores) and returns every matching
/// synset across all parts of speech, each once, ordered by SynsetId.
std::vector<const Synset*> synsets_of(
    const Lexicon& lexicon, std::string_view word,
    LemmaMatching matching = LemmaMatching::kExact);

/// Indexed base forms of `word` for one part of speech, the word itself
/// first when it is indexed. Empty when nothing is indexed.
std::vector<std::string> base_forms(const Lexicon& lexicon,
                                    std::string_view word, PartOfSpeech pos);

enum class Relation { kHypernym, kHyponym };

/// Direct neighbours; instance links are included only on request.
std::vector<SynsetId> related(const Synset& synset, Relation relation,
                              bool include_instances = false);

/// Every synset reachable through `relation`, each once, sorted, without
/// the start synset.
std::vector<SynsetId> closure(const Lexicon& lexicon, SynsetId start,
                              Relation relation,
                              bool include_instances = false);

}  // namespace readscore

#endif  // READSCORE_LEXICON_HPP
