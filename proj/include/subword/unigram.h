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

#ifndef SUBWORD_UNIGRAM_H_
#define SUBWORD_UNIGRAM_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "subword/corpus.h"
#include "subword/segmentation.h"

namespace subword {

// Expected counts below this value are raised to it before the M-step so no
// token ends up with zero probability.
inline constexpr double kExpectedCountFloor = 1e-10;

// Unknown-token penalty when a model carries no explicit unknown entry:
// this far below the least likely piece.
inline constexpr double kUnkPenalty = 10.0;

// Path scores closer than this (relative to their magnitude) count as tied
// when decoding, so ties that hold exactly in real arithmetic are not
// decided by rounding.
inline constexpr double kScoreTieTolerance = 1e-12;

inline bool scores_tie(double a, double b) {
  if (a == b) return true;
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= kScoreTieTolerance * scale;
}

// Token -> log probability. Pieces are kept in code point order; the unknown
// token, if present, takes part in normalization but never matches text.
class UnigramModel {
 public:
  UnigramModel(char32_t marker, std::map<std::u32string, double> logprobs,
               std::u32string unk_token = std::u32string(kDefaultUnkToken));

  char32_t marker() const { return marker_; }
  const std::u32string& unk_token() const { return unk_token_; }
  const std::map<std::u32string, double>& logprobs() const { return logprobs_; }
  std::size_t size() const { return logprobs_.size(); }
  bool contains(std::u32string_view token) const {
    return logprobs_.find(std::u32string(token)) != logprobs_.end();
  }

  // Log probability charged for one unknown character.
  double unk_logprob() const;

  // Single characters and the unknown token.
  bool is_protected(const std::u32string& token) const {
    return token.size() == 1 || token == unk_token_;
  }

  // Checks normalization (within 1e-9), finiteness and negativity of every
  // log probability, and that every piece is built from `characters`.
  // Throws Error(kCorruptModel) naming the violated property.
  void validate(const CharInventory& characters) const;

  // Calls fn(length, piece_index) for every piece that matches `word` at
  // `start`, shortest first. piece_index indexes pieces().
  template <typename Fn>
  void for_each_match(std::u32string_view word, std::size_t start, Fn&& fn) const {
    int node = 0;
    for (std::size_t end = start; end < word.size(); ++end) {
      node = child(node, word[end]);
      if (node < 0) return;
      if (trie_[node].piece >= 0) fn(end - start + 1, trie_[node].piece);
    }
  }

  // Pieces in code point order, parallel to piece_logprobs().
  const std::vector<std::u32string>& pieces() const { return pieces_; }
  const std::vector<double>& piece_logprobs() const { return piece_logprobs_; }

  friend bool operator==(const UnigramModel& a, const UnigramModel& b) {
    return a.marker_ == b.marker_ && a.unk_token_ == b.unk_token_ &&
           a.logprobs_ == b.logprobs_;
  }

 private:
  struct Node {
    std::vector<std::pair<char32_t, int>> children;  // sorted by code point
    int piece = -1;
  };

  int child(int node, char32_t c) const;

  char32_t marker_;
  std::u32string unk_token_;
  std::map<std::u32string, double> logprobs_;
  std::vector<std::u32string> pieces_;
  std::vector<double> piece_logprobs_;
  std::vector<Node> trie_;
};

// L_t for every unprotected token: corpus log-likelihood under the model
// minus that under the model with t removed and the rest renormalized.
struct LossTable {
  std::map<std::u32string, double> losses;
  std::set<std::u32string> protected_tokens;
};

// Candidate pieces: every substring (up to max_token_len code points) whose
// count-weighted occurrence count is at least 2, keeping the max_seed most
// frequent; every single character is always kept. Initial probabilities are
// proportional to substring counts. The unknown token is added with the
// expected-count floor.
UnigramModel seed_vocab(const WordCounts& counts, std::size_t max_seed,
                        std::size_t max_token_len = 16,
                        std::u32string unk_token = std::u32string(kDefaultUnkToken));

// log of the total probability of all segmentations of `word`. Returns
// -infinity if no segmentation exists.
double marginal_loglik(const UnigramModel& model, std::u32string_view word);

// Σ count(w) · marginal_loglik(w).
double corpus_loglik(const UnigramModel& model, const WordCounts& counts);

// Most likely segmentation. Among equally likely segmentations the one with
// fewer tokens wins, then the one whose first differing token is longer.
// Characters with no matching piece are emitted as the unknown token.
Segmentation viterbi_tokenize(const UnigramModel& model, std::u32string_view word);

// `iterations` rounds of EM with forward-backward expected counts.
UnigramModel em_fit(const UnigramModel& model, const WordCounts& counts,
                    int iterations);

// Removing t rescales every other probability by e^step, step =
// -log(1 - p_t), which changes the log marginal of every word. That shift is
// summed exactly over the corpus unless the exact sum would exceed
// exact_budget lattice-length operations; then tokens with step at most
// series_max_step use a fourth-order cumulant expansion (error O(step^5)).
struct LossOptions {
  double exact_budget = 5e7;
  double series_max_step = 1e-3;
};

LossTable token_losses(const UnigramModel& model, const WordCounts& counts,
                       const LossOptions& options = {});

// min(|V| - k, floor(alpha * |V|)), or 0 when |V| <= k.
std::size_t prune_count(std::size_t vocab_size, std::size_t k, double alpha);

// Removes prune_count(|V|, k, alpha) unprotected tokens with the smallest
// losses (ties: code point order) and renormalizes.
UnigramModel prune(const UnigramModel& model, const LossTable& losses,
                   std::size_t k, double alpha);

struct UnigramTrainerOptions {
  std::size_t vocab_size = 20000;
  double alpha = 0.25;
  int em_iterations = 2;
  std::size_t max_seed = 0;  // 0 selects 100 * vocab_size
  std::size_t max_token_len = 16;
  std::u32string unk_token = std::u32string(kDefaultUnkToken);
};

// Seed, then {EM, losses, prune} until the vocabulary (unknown token
// included) has vocab_size entries, then a final EM fit.
UnigramModel train_unigram(const WordCounts& counts,
                           const UnigramTrainerOptions& options);

}  // namespace subword

#endif  // SUBWORD_UNIGRAM_H_
