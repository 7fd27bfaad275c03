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

#include "subword/profile.h"

#include <algorithm>
#include <bit>
#include <cstdlib>

#include "subword/error.h"

namespace subword {

CorpusTokenization tokenize_corpus(const Model& model, const WordCounts& counts) {
  CorpusTokenization out;
  for (const auto& [word, count] : counts.entries()) {
    const Segmentation seg = model.tokenize(word);
    for (const auto& token : seg.tokens) out.frequencies[token] += count;
    out.total_tokens += count * seg.tokens.size();
    out.total_type_tokens += seg.tokens.size();
    out.unknown_tokens += count * seg.unknown_count;
  }
  return out;
}

VocabProfile profile_vocab(const Model& model, const WordCounts& counts,
                           double dead_zone_divisor) {
  if (dead_zone_divisor <= 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "dead-zone divisor must be positive");
  }
  VocabProfile profile;
  const CorpusTokenization corpus = tokenize_corpus(model, counts);
  const std::vector<std::u32string> vocab = model.vocabulary();

  std::size_t total_length = 0;
  for (const auto& token : vocab) {
    ++profile.length_histogram[token.size()];
    total_length += token.size();
    const auto it = corpus.frequencies.find(token);
    profile.rank_frequency.push_back(
        TokenFrequency{token, it == corpus.frequencies.end() ? 0 : it->second});
  }
  if (!vocab.empty()) {
    profile.mean_token_length =
        static_cast<double>(total_length) / static_cast<double>(vocab.size());
  }
  std::stable_sort(profile.rank_frequency.begin(), profile.rank_frequency.end(),
                   [](const TokenFrequency& a, const TokenFrequency& b) {
                     return a.frequency > b.frequency;
                   });

  for (const auto& row : profile.rank_frequency) {
    ++profile.frequency_bins[static_cast<std::size_t>(std::bit_width(row.frequency))];
  }

  const std::size_t n = profile.rank_frequency.size();
  if (n > 0) {
    // rank_frequency is descending, so the middle elements give the median.
    const double upper = static_cast<double>(profile.rank_frequency[(n - 1) / 2].frequency);
    const double lower = static_cast<double>(profile.rank_frequency[n / 2].frequency);
    profile.median_frequency = (upper + lower) / 2.0;
  }
  profile.dead_zone_threshold = std::max(1.0, profile.median_frequency / dead_zone_divisor);
  for (const auto& row : profile.rank_frequency) {
    if (static_cast<double>(row.frequency) < profile.dead_zone_threshold) {
      ++profile.dead_zone_count;
    }
  }

  if (counts.total_words() > 0) {
    profile.tokens_per_word = static_cast<double>(corpus.total_tokens) /
                              static_cast<double>(counts.total_words());
    profile.tokens_per_word_type = static_cast<double>(corpus.total_type_tokens) /
                                   static_cast<double>(counts.total_word_types());
  }
  profile.unknown_tokens = corpus.unknown_tokens;
  return profile;
}

std::vector<FrequencyDiffRow> frequency_diff(const Model& model_a, const Model& model_b,
                                             const WordCounts& counts, std::size_t top_n,
                                             DiffDirection direction) {
  const CorpusTokenization a = tokenize_corpus(model_a, counts);
  const CorpusTokenization b = tokenize_corpus(model_b, counts);
  std::map<std::u32string, FrequencyDiffRow> merged;
  for (const auto& [token, freq] : a.frequencies) {
    merged[token].frequency_a = freq;
  }
  for (const auto& [token, freq] : b.frequencies) {
    merged[token].frequency_b = freq;
  }
  std::vector<FrequencyDiffRow> rows;
  for (auto& [token, row] : merged) {
    row.token = token;
    row.difference = static_cast<std::int64_t>(row.frequency_a) -
                     static_cast<std::int64_t>(row.frequency_b);
    if (direction == DiffDirection::kMoreInA && row.difference <= 0) continue;
    if (direction == DiffDirection::kMoreInB && row.difference >= 0) continue;
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const FrequencyDiffRow& x, const FrequencyDiffRow& y) {
                     return std::llabs(x.difference) > std::llabs(y.difference);
                   });
  if (top_n != 0 && rows.size() > top_n) rows.resize(top_n);
  return rows;
}

}  // namespace subword
