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

// Property-test generators for tokenizer models and corpora.

#ifndef SUBWORD_TESTS_SUPPORT_RANDOM_MODELS_H_
#define SUBWORD_TESTS_SUPPORT_RANDOM_MODELS_H_

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "subword/bpe.h"
#include "subword/corpus.h"
#include "subword/model.h"
#include "subword/unigram.h"

namespace subword::testing {

// Mixes ASCII, Latin-1, CJK and astral code points so serialization sees
// every UTF-8 width.
inline CharInventory random_inventory(std::mt19937& rng, char32_t marker) {
  static const std::u32string kPool = U"abcxyzéßжλ中文🙂𝄞\"\\/";
  CharInventory chars{marker};
  const int n = std::uniform_int_distribution<int>(1, 8)(rng);
  for (int i = 0; i < n; ++i) {
    chars.insert(kPool[std::uniform_int_distribution<std::size_t>(0, kPool.size() - 1)(rng)]);
  }
  return chars;
}

inline char32_t random_marker(std::mt19937& rng) {
  static const std::u32string kMarkers = U"▁_@";
  return kMarkers[std::uniform_int_distribution<std::size_t>(0, kMarkers.size() - 1)(rng)];
}

inline BpeModel random_bpe(std::mt19937& rng) {
  const char32_t marker = random_marker(rng);
  const CharInventory chars = random_inventory(rng, marker);
  std::vector<std::u32string> symbols;
  for (char32_t c : chars) symbols.emplace_back(1, c);
  std::vector<Merge> merges;
  const int n = std::uniform_int_distribution<int>(0, 12)(rng);
  for (int i = 0; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
    Merge m{symbols[pick(rng)], symbols[pick(rng)]};
    symbols.push_back(m.product());
    merges.push_back(std::move(m));
  }
  return BpeModel(marker, chars, std::move(merges));
}

inline UnigramModel random_unigram(std::mt19937& rng) {
  const char32_t marker = random_marker(rng);
  const CharInventory chars = random_inventory(rng, marker);
  const std::vector<char32_t> alphabet(chars.begin(), chars.end());
  std::map<std::u32string, double> weights;
  for (char32_t c : chars) weights[std::u32string(1, c)] = 0.0;
  weights[std::u32string(kDefaultUnkToken)] = 0.0;
  const int extra = std::uniform_int_distribution<int>(0, 15)(rng);
  for (int i = 0; i < extra; ++i) {
    std::u32string piece;
    const int len = std::uniform_int_distribution<int>(2, 5)(rng);
    for (int j = 0; j < len; ++j) {
      piece.push_back(alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)]);
    }
    weights[piece] = 0.0;
  }
  std::uniform_real_distribution<double> weight(1e-6, 1.0);
  double total = 0.0;
  for (auto& [piece, w] : weights) {
    w = weight(rng);
    total += w;
  }
  std::map<std::u32string, double> logprobs;
  for (const auto& [piece, w] : weights) logprobs[piece] = std::log(w / total);
  return UnigramModel(marker, std::move(logprobs));
}

inline TrainingMetadata random_metadata(std::mt19937& rng, bool unigram) {
  TrainingMetadata meta;
  if (std::bernoulli_distribution(0.8)(rng)) {
    meta.vocab_size = std::uniform_int_distribution<std::uint64_t>(1, 1u << 20)(rng);
  }
  if (unigram) {
    meta.alpha = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    meta.em_iterations = std::uniform_int_distribution<int>(1, 5)(rng);
  }
  meta.split_mode = std::bernoulli_distribution(0.5)(rng) ? "whitespace" : "line";
  static const char kHex[] = "0123456789abcdef";
  for (int i = 0; i < 64; ++i) meta.corpus_digest.push_back(kHex[rng() % 16]);
  return meta;
}

inline ModelFile random_model_file(std::mt19937& rng) {
  if (std::bernoulli_distribution(0.5)(rng)) {
    return ModelFile{Model(random_bpe(rng)), random_metadata(rng, false)};
  }
  return ModelFile{Model(random_unigram(rng)), random_metadata(rng, true)};
}

// Small marker-prefixed corpus over `alphabet`.
inline WordCounts random_corpus(std::mt19937& rng, const std::u32string& alphabet,
                                int max_types, int max_len, std::uint64_t max_count) {
  WordCounts counts;
  const int types = std::uniform_int_distribution<int>(1, max_types)(rng);
  for (int i = 0; i < types; ++i) {
    std::u32string word(1, kDefaultMarker);
    const int len = std::uniform_int_distribution<int>(1, max_len)(rng);
    for (int j = 0; j < len; ++j) {
      word.push_back(alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)]);
    }
    counts.add(word, std::uniform_int_distribution<std::uint64_t>(1, max_count)(rng));
  }
  return counts;
}

}  // namespace subword::testing

#endif  // SUBWORD_TESTS_SUPPORT_RANDOM_MODELS_H_
