// Copyright 2026 The Subword Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUBWORD_PROFILE_H_
#define SUBWORD_PROFILE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "subword/corpus.h"
#include "subword/model.h"

namespace subword {

inline constexpr double kDefaultDeadZoneDivisor = 100.0;

struct TokenFrequency {
  std::u32string token;
  std::uint64_t frequency = 0;

  friend bool operator==(const TokenFrequency&, const TokenFrequency&) = default;
};

// Occurrences of each emitted token when every word of `counts` is tokenized
// once and weighted by its count. Unknown-token occurrences are included.
struct CorpusTokenization {
  std::map<std::u32string, std::uint64_t> frequencies;
  std::uint64_t total_tokens = 0;       // Σ count(w) · |tok(w)|
  std::uint64_t total_type_tokens = 0;  // Σ |tok(w)|
  std::uint64_t unknown_tokens = 0;
};

CorpusTokenization tokenize_corpus(const Model& model, const WordCounts& counts);

struct VocabProfile {
  std::map<std::size_t, std::size_t> length_histogram;  // code points -> tokens
  double mean_token_length = 0.0;
  // Every vocabulary token, most frequent first (ties in code point order).
  std::vector<TokenFrequency> rank_frequency;
  // Tokens per power-of-two frequency bin: bin 0 holds frequency 0, bin b > 0
  // holds [2^(b-1), 2^b).
  std::map<std::size_t, std::size_t> frequency_bins;
  double median_frequency = 0.0;
  double dead_zone_threshold = 0.0;
  std::size_t dead_zone_count = 0;
  double tokens_per_word = 0.0;
  double tokens_per_word_type = 0.0;
  std::uint64_t unknown_tokens = 0;
};

// Vocabulary statistics for `model` over `counts`. The dead zone holds the
// vocabulary tokens whose corpus frequency is below
// max(1, median frequency / dead_zone_divisor).
VocabProfile profile_vocab(const Model& model, const WordCounts& counts,
                           double dead_zone_divisor = kDefaultDeadZoneDivisor);

struct FrequencyDiffRow {
  std::u32string token;
  std::uint64_t frequency_a = 0;
  std::uint64_t frequency_b = 0;
  std::int64_t difference = 0;  // frequency_a - frequency_b
};

enum class DiffDirection {
  kBoth,     // rank by |difference|
  kMoreInA,  // positive differences only
  kMoreInB,  // negative differences only
};

// Tokens whose corpus frequency differs most between two tokenizations,
// ordered by |difference| descending then code point order; at most top_n
// rows (0 keeps all).
std::vector<FrequencyDiffRow> frequency_diff(const Model& model_a, const Model& model_b,
                                             const WordCounts& counts, std::size_t top_n,
                                             DiffDirection direction = DiffDirection::kBoth);

}  // namespace subword

#endif  // SUBWORD_PROFILE_H_
