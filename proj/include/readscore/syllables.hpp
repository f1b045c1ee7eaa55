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

// Syllable counts for the Syllable predictor.

#ifndef READSCORE_SYLLABLES_HPP
#define READSCORE_SYLLABLES_HPP

#include <string>
#include <string_view>
#include <unordered_map>

namespace readscore {

/// Vowel-group count (a, e, i, o, u, y) less a silent final `e`; a final
/// consonant + "le" keeps its syllable. Never below 1. Throws
/// ValidationError on an empty word.
int heuristic_syllables(std::string_view word);

/// Dictionary counts for the study's word list.
const std::unordered_map<std::string, int>& study_syllable_overrides();

enum class SyllableMode { kWithOverrides, kHeuristicOnly };

/// Override table first, heuristic otherwise.
int syllable_count(std::string_view word,
                   SyllableMode mode = SyllableMode::kWithOverrides);

}  // namespace readscore

#endif  // READSCORE_SYLLABLES_HPP
