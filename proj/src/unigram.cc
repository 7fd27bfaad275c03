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

#include "subword/unigram.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "subword/error.h"
#include "subword/parallel.h"
#include "subword/unicode.h"

namespace subword {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  return a > b ? a + std::log1p(std::exp(b - a)) : b + std::log1p(std::exp(a - b));
}

struct Edge {
  int start;
  int end;
  int piece;
};

// All piece matches in `word`, ordered by start then length.
std::vector<Edge> build_lattice(const UnigramModel& model, std::u32string_view word) {
  std::vector<Edge> edges;
  for (std::size_t start = 0; start < word.size(); ++start) {
    model.for_each_match(word, start, [&](std::size_t len, int piece) {
      edges.push_back(Edge{static_cast<int>(start), static_cast<int>(start + len), piece});
    });
  }
  return edges;
}

// Forward pass in log space. `shift` is added to every edge; edges of
// `excluded` are skipped.
double forward(const std::vector<Edge>& edges, std::size_t length,
               const std::vector<double>& logprobs, double shift = 0.0,
               int excluded = -1) {
  std::vector<double> alpha(length + 1, kNegInf);
  alpha[0] = 0.0;
  for (const Edge& e : edges) {
    if (e.piece == excluded || alpha[e.start] == kNegInf) continue;
    alpha[e.end] = log_add(alpha[e.end], alpha[e.start] + logprobs[e.piece] + shift);
  }
  return alpha[length];
}

// Word types with their lattices, reused while the piece set is fixed.
struct LatticeCorpus {
  std::vector<std::u32string_view> words;
  std::vector<double> weights;
  std::vector<std::vector<Edge>> lattices;

  LatticeCorpus(const UnigramModel& model, const WordCounts& counts) {
    words.reserve(counts.total_word_types());
    for (const auto& [word, count] : counts.entries()) {
      words.push_back(word);
      weights.push_back(static_cast<double>(count));
      lattices.push_back(build_lattice(model, word));
    }
  }
};

std::vector<double> expected_counts(const LatticeCorpus& corpus,
                                    const std::vector<double>& logprobs,
                                    double* loglik) {
  std::vector<double> expected(logprobs.size(), 0.0);
  double total = 0.0;
  std::vector<double> alpha;
  std::vector<double> beta;
  for (std::size_t w = 0; w < corpus.words.size(); ++w) {
    const auto& edges = corpus.lattices[w];
    const std::size_t n = corpus.words[w].size();
    alpha.assign(n + 1, kNegInf);
    beta.assign(n + 1, kNegInf);
    alpha[0] = 0.0;
    beta[n] = 0.0;
    for (const Edge& e : edges) {
      if (alpha[e.start] == kNegInf) continue;
      alpha[e.end] = log_add(alpha[e.end], alpha[e.start] + logprobs[e.piece]);
    }
    const double z = alpha[n];
    if (z == kNegInf) {
      total = kNegInf;
      continue;
    }
    for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
      if (beta[it->end] == kNegInf) continue;
      beta[it->start] = log_add(beta[it->start], logprobs[it->piece] + beta[it->end]);
    }
    const double weight = corpus.weights[w];
    for (const Edge& e : edges) {
      const double lp = alpha[e.start] + logprobs[e.piece] + beta[e.end] - z;
      if (lp == kNegInf) continue;
      expected[e.piece] += weight * std::exp(lp);
    }
    total += weight * z;
  }
  if (loglik != nullptr) *loglik = total;
  return expected;
}

// Normalizes `weights` (one per piece of `model`) into a new model.
UnigramModel with_weights(const UnigramModel& model, std::vector<double> weights) {
  double sum = 0.0;
  for (double& w : weights) {
    w = std::max(w, kExpectedCountFloor);
    sum += w;
  }
  const double log_sum = std::log(sum);
  std::map<std::u32string, double> logprobs;
  const auto& pieces = model.pieces();
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    logprobs.emplace_hint(logprobs.end(), pieces[i], std::log(weights[i]) - log_sum);
  }
  return UnigramModel(model.marker(), std::move(logprobs), model.unk_token());
}

UnigramModel renormalized(char32_t marker, std::map<std::u32string, double> logprobs,
                          const std::u32string& unk_token) {
  double log_sum = kNegInf;
  for (const auto& [token, lp] : logprobs) log_sum = log_add(log_sum, lp);
  for (auto& [token, lp] : logprobs) lp -= log_sum;
  return UnigramModel(marker, std::move(logprobs), unk_token);
}

// Removes the `n` unprotected tokens with the smallest losses.
UnigramModel remove_lowest(const UnigramModel& model, const LossTable& table,
                           std::size_t n) {
  std::vector<std::pair<double, const std::u32string*>> ranked;
  for (const auto& [token, lp] : model.logprobs()) {
    if (model.is_protected(token)) continue;
    const auto it = table.losses.find(token);
    if (it == table.losses.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "no loss for token '" + encode_utf8(token) + "'");
    }
    ranked.emplace_back(it->second, &token);
  }
  if (ranked.size() < n) {
    throw Error(ErrorCode::kInfeasible,
                "only " + std::to_string(ranked.size()) +
                    " unprotected tokens left but " + std::to_string(n) +
                    " must be removed");
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return *a.second < *b.second;
  });
  std::map<std::u32string, double> kept = model.logprobs();
  for (std::size_t i = 0; i < n; ++i) kept.erase(*ranked[i].second);
  return renormalized(model.marker(), std::move(kept), model.unk_token());
}

}  // namespace

UnigramModel::UnigramModel(char32_t marker, std::map<std::u32string, double> logprobs,
                           std::u32string unk_token)
    : marker_(marker), unk_token_(std::move(unk_token)), logprobs_(std::move(logprobs)) {
  if (unk_token_.empty()) {
    throw Error(ErrorCode::kCorruptModel, "unknown token must be non-empty");
  }
  trie_.emplace_back();
  pieces_.reserve(logprobs_.size());
  piece_logprobs_.reserve(logprobs_.size());
  for (const auto& [token, lp] : logprobs_) {
    if (token.empty()) throw Error(ErrorCode::kCorruptModel, "empty piece");
    const int index = static_cast<int>(pieces_.size());
    pieces_.push_back(token);
    piece_logprobs_.push_back(lp);
    if (token == unk_token_) continue;
    int node = 0;
    for (char32_t c : token) {
      int next = child(node, c);
      if (next < 0) {
        next = static_cast<int>(trie_.size());
        auto& kids = trie_[node].children;
        kids.insert(std::lower_bound(kids.begin(), kids.end(), std::make_pair(c, 0)),
                    std::make_pair(c, next));
        trie_.emplace_back();
      }
      node = next;
    }
    trie_[node].piece = index;
  }
}

int UnigramModel::child(int node, char32_t c) const {
  const auto& kids = trie_[node].children;
  const auto it = std::lower_bound(
      kids.begin(), kids.end(), c,
      [](const std::pair<char32_t, int>& kid, char32_t value) { return kid.first < value; });
  return it != kids.end() && it->first == c ? it->second : -1;
}

double UnigramModel::unk_logprob() const {
  if (const auto it = logprobs_.find(unk_token_); it != logprobs_.end()) {
    return it->second;
  }
  double lowest = 0.0;
  for (const auto& [token, lp] : logprobs_) lowest = std::min(lowest, lp);
  return lowest - kUnkPenalty;
}

void UnigramModel::validate(const CharInventory& characters) const {
  if (!logprobs_.contains(unk_token_)) {
    throw Error(ErrorCode::kCorruptModel,
                "required unknown token '" + encode_utf8(unk_token_) + "' missing");
  }
  double log_sum = kNegInf;
  for (const auto& [token, lp] : logprobs_) {
    if (!std::isfinite(lp) || lp >= 0.0) {
      throw Error(ErrorCode::kCorruptModel,
                  "log probability of '" + encode_utf8(token) +
                      "' must be finite and negative");
    }
    log_sum = log_add(log_sum, lp);
    if (token == unk_token_) continue;
    for (char32_t c : token) {
      if (!characters.contains(c)) {
        throw Error(ErrorCode::kCorruptModel,
                    "piece '" + encode_utf8(token) +
                        "' uses a character outside the inventory");
      }
    }
  }
  if (std::abs(std::exp(log_sum) - 1.0) > 1e-9) {
    throw Error(ErrorCode::kCorruptModel, "probabilities do not sum to 1");
  }
  for (char32_t c : characters) {
    if (!logprobs_.contains(std::u32string(1, c))) {
      throw Error(ErrorCode::kCorruptModel,
                  "required single-character piece '" + encode_utf8(c) + "' missing");
    }
  }
}

UnigramModel seed_vocab(const WordCounts& counts, std::size_t max_seed,
                        std::size_t max_token_len, std::u32string unk_token) {
  if (counts.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "cannot seed from an empty corpus");
  }
  if (max_token_len == 0) {
    throw Error(ErrorCode::kInvalidArgument, "max_token_len must be positive");
  }
  std::unordered_map<std::u32string, std::uint64_t> substrings;
  for (const auto& [word, count] : counts.entries()) {
    for (std::size_t i = 0; i < word.size(); ++i) {
      const std::size_t longest = std::min(max_token_len, word.size() - i);
      for (std::size_t len = 1; len <= longest; ++len) {
        substrings[word.substr(i, len)] += count;
      }
    }
  }

  std::map<std::u32string, std::uint64_t> chosen;
  std::vector<std::pair<std::uint64_t, const std::u32string*>> multi;
  for (const auto& [token, count] : substrings) {
    if (token.size() == 1) {
      chosen.emplace(token, count);
    } else if (count >= 2) {
      multi.emplace_back(count, &token);
    }
  }
  if (max_seed < chosen.size()) {
    throw Error(ErrorCode::kInfeasible,
                "max_seed " + std::to_string(max_seed) +
                    " is smaller than the character inventory (" +
                    std::to_string(chosen.size()) + ")");
  }
  const std::size_t room = max_seed - chosen.size();
  const std::size_t take = std::min(room, multi.size());
  std::partial_sort(multi.begin(), multi.begin() + static_cast<std::ptrdiff_t>(take),
                    multi.end(), [](const auto& a, const auto& b) {
                      if (a.first != b.first) return a.first > b.first;
                      return *a.second < *b.second;
                    });
  for (std::size_t i = 0; i < take; ++i) chosen.emplace(*multi[i].second, multi[i].first);

  double total = kExpectedCountFloor;
  for (const auto& [token, count] : chosen) total += static_cast<double>(count);
  const double log_total = std::log(total);
  std::map<std::u32string, double> logprobs;
  for (const auto& [token, count] : chosen) {
    logprobs.emplace_hint(logprobs.end(), token,
                          std::log(static_cast<double>(count)) - log_total);
  }
  logprobs[unk_token] = std::log(kExpectedCountFloor) - log_total;
  return UnigramModel(counts.marker(), std::move(logprobs), std::move(unk_token));
}

double marginal_loglik(const UnigramModel& model, std::u32string_view word) {
  if (word.empty()) throw Error(ErrorCode::kInvalidArgument, "empty word");
  return forward(build_lattice(model, word), word.size(), model.piece_logprobs());
}

double corpus_loglik(const UnigramModel& model, const WordCounts& counts) {
  double total = 0.0;
  for (const auto& [word, count] : counts.entries()) {
    total += static_cast<double>(count) * marginal_loglik(model, word);
  }
  return total;
}

Segmentation viterbi_tokenize(const UnigramModel& model, std::u32string_view word) {
  if (word.empty()) throw Error(ErrorCode::kInvalidArgument, "empty word");
  constexpr int kUnkEdge = -1;
  const std::size_t n = word.size();
  const auto& logprobs = model.piece_logprobs();
  const double unk_lp = model.unk_logprob();

  std::vector<double> score(n + 1, kNegInf);
  std::vector<std::size_t> ntokens(n + 1, 0);
  std::vector<int> prev(n + 1, -1);
  std::vector<int> piece(n + 1, kUnkEdge);
  score[0] = 0.0;

  // Span lengths of the best path to `end` when its last token starts at
  // `start`.
  auto spans = [&](std::size_t start, std::size_t end) {
    std::vector<std::size_t> out{end - start};
    for (std::size_t pos = start; pos > 0; pos = static_cast<std::size_t>(prev[pos])) {
      out.push_back(pos - static_cast<std::size_t>(prev[pos]));
    }
    std::reverse(out.begin(), out.end());
    return out;
  };

  auto relax = [&](std::size_t start, std::size_t end, int p, double lp) {
    const double cand = score[start] + lp;
    if (cand == kNegInf) return;
    const std::size_t cand_tokens = ntokens[start] + 1;
    const bool tie = score[end] != kNegInf && scores_tie(cand, score[end]);
    bool take = !tie && cand > score[end];
    if (tie) {
      if (cand_tokens != ntokens[end]) {
        take = cand_tokens < ntokens[end];
      } else {
        const auto a = spans(start, end);
        const auto b = spans(static_cast<std::size_t>(prev[end]), end);
        const auto diff = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
        take = diff.first != a.end() && diff.second != b.end() && *diff.first > *diff.second;
      }
    }
    if (take) {
      score[end] = cand;
      ntokens[end] = cand_tokens;
      prev[end] = static_cast<int>(start);
      piece[end] = p;
    }
  };

  for (std::size_t start = 0; start < n; ++start) {
    if (score[start] == kNegInf) continue;
    bool single = false;
    model.for_each_match(word, start, [&](std::size_t len, int p) {
      if (len == 1) single = true;
      relax(start, start + len, p, logprobs[p]);
    });
    if (!single) relax(start, start + 1, kUnkEdge, unk_lp);
  }

  Segmentation seg;
  seg.log_likelihood = score[n];
  for (std::size_t pos = n; pos > 0; pos = static_cast<std::size_t>(prev[pos])) {
    if (prev[pos] < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "word cannot be segmented: " + encode_utf8(word));
    }
    if (piece[pos] == kUnkEdge) {
      seg.tokens.push_back(model.unk_token());
      ++seg.unknown_count;
    } else {
      seg.tokens.push_back(model.pieces()[piece[pos]]);
    }
  }
  std::reverse(seg.tokens.begin(), seg.tokens.end());
  return seg;
}

UnigramModel em_fit(const UnigramModel& model, const WordCounts& counts, int iterations) {
  if (iterations < 1) {
    throw Error(ErrorCode::kInvalidArgument, "EM needs at least one iteration");
  }
  const LatticeCorpus corpus(model, counts);
  UnigramModel current = model;
  for (int it = 0; it < iterations; ++it) {
    current = with_weights(current, expected_counts(corpus, current.piece_logprobs(), nullptr));
  }
  return current;
}

namespace {

// For each word, the distribution of segmentation length: log q(n), the
// posterior log probability that a segmentation has n tokens.
struct LengthDistributions {
  std::vector<std::size_t> offsets;  // word w owns [offsets[w], offsets[w+1])
  std::vector<double> log_q;
  double cumulants[4] = {0.0, 0.0, 0.0, 0.0};  // count-weighted sums

  LengthDistributions(const LatticeCorpus& corpus, const std::vector<double>& logprobs,
                      const std::vector<double>& log_z) {
    offsets.push_back(0);
    std::vector<std::vector<double>> graded;
    for (std::size_t w = 0; w < corpus.words.size(); ++w) {
      const std::size_t n = corpus.words[w].size();
      if (log_z[w] == kNegInf) {
        log_q.insert(log_q.end(), n + 1, kNegInf);
        offsets.push_back(log_q.size());
        continue;
      }
      graded.assign(n + 1, std::vector<double>(n + 1, kNegInf));
      graded[0][0] = 0.0;
      for (const Edge& e : corpus.lattices[w]) {
        const auto& from = graded[e.start];
        auto& to = graded[e.end];
        const double lp = logprobs[e.piece];
        for (int k = 0; k < e.start + 1; ++k) {
          if (from[k] == kNegInf) continue;
          to[k + 1] = log_add(to[k + 1], from[k] + lp);
        }
      }
      double mean = 0.0;
      for (std::size_t k = 0; k <= n; ++k) {
        const double lq = graded[n][k] - log_z[w];
        log_q.push_back(lq);
        if (lq != kNegInf) mean += std::exp(lq) * static_cast<double>(k);
      }
      double m2 = 0.0, m3 = 0.0, m4 = 0.0;
      for (std::size_t k = 0; k <= n; ++k) {
        const double q = std::exp(log_q[offsets.back() + k]);
        const double d = static_cast<double>(k) - mean;
        m2 += q * d * d;
        m3 += q * d * d * d;
        m4 += q * d * d * d * d;
      }
      const double weight = corpus.weights[w];
      cumulants[0] += weight * mean;
      cumulants[1] += weight * m2;
      cumulants[2] += weight * m3;
      cumulants[3] += weight * (m4 - 3.0 * m2 * m2);
      offsets.push_back(log_q.size());
    }
  }

  // log Σ_n q(n) e^{step n}: change in a word's log marginal when every
  // probability is scaled by e^{step}.
  double word_shift(std::size_t w, double step) const {
    double acc = kNegInf;
    for (std::size_t i = offsets[w]; i < offsets[w + 1]; ++i) {
      if (log_q[i] == kNegInf) continue;
      acc = log_add(acc, log_q[i] + step * static_cast<double>(i - offsets[w]));
    }
    return acc;
  }

  double exact_shift(const LatticeCorpus& corpus, const std::vector<double>& log_z,
                     double step) const {
    double total = 0.0;
    for (std::size_t w = 0; w < corpus.words.size(); ++w) {
      if (log_z[w] == kNegInf) continue;
      total += corpus.weights[w] * word_shift(w, step);
    }
    return total;
  }

  double series_shift(double step) const {
    const double s2 = step * step;
    return cumulants[0] * step + cumulants[1] * s2 / 2.0 +
           cumulants[2] * s2 * step / 6.0 + cumulants[3] * s2 * s2 / 24.0;
  }
};

}  // namespace

LossTable token_losses(const UnigramModel& model, const WordCounts& counts,
                       const LossOptions& options) {
  LossTable table;
  const auto& pieces = model.pieces();
  const auto& logprobs = model.piece_logprobs();
  const LatticeCorpus corpus(model, counts);

  std::vector<double> log_z(corpus.words.size());
  for (std::size_t w = 0; w < corpus.words.size(); ++w) {
    log_z[w] = forward(corpus.lattices[w], corpus.words[w].size(), logprobs);
  }
  const LengthDistributions lengths(corpus, logprobs, log_z);

  // Inverted index: piece -> words whose lattice contains it.
  std::vector<std::vector<std::size_t>> occurrences(pieces.size());
  for (std::size_t w = 0; w < corpus.words.size(); ++w) {
    int last = -1;
    std::vector<int> seen;
    for (const Edge& e : corpus.lattices[w]) seen.push_back(e.piece);
    std::sort(seen.begin(), seen.end());
    for (int p : seen) {
      if (p != last) occurrences[p].push_back(w);
      last = p;
    }
  }

  double log_total = kNegInf;
  for (double lp : logprobs) log_total = log_add(log_total, lp);

  std::vector<std::size_t> scored;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (model.is_protected(pieces[i])) {
      table.protected_tokens.insert(pieces[i]);
    } else {
      scored.push_back(i);
    }
  }
  const double exact_cost =
      static_cast<double>(scored.size()) * static_cast<double>(lengths.log_q.size());
  const bool all_exact = exact_cost <= options.exact_budget;

  std::vector<double> losses(scored.size());
  parallel_for(scored.size(), [&](std::size_t j) {
    const std::size_t t = scored[j];
    // Removing t scales the remaining probabilities by total / (total - p_t).
    const double ratio = std::exp(logprobs[t] - log_total);
    if (ratio >= 1.0) {
      losses[j] = std::numeric_limits<double>::infinity();
      return;
    }
    const double step = -std::log1p(-ratio);
    double loss = all_exact || step > options.series_max_step
                      ? -lengths.exact_shift(corpus, log_z, step)
                      : -lengths.series_shift(step);
    for (std::size_t w : occurrences[t]) {
      if (log_z[w] == kNegInf) continue;
      const double with_t = log_z[w] + lengths.word_shift(w, step);
      const double without_t = forward(corpus.lattices[w], corpus.words[w].size(),
                                       logprobs, step, static_cast<int>(t));
      loss += corpus.weights[w] * (with_t - without_t);
    }
    losses[j] = loss;
  });
  for (std::size_t j = 0; j < scored.size(); ++j) {
    table.losses.emplace(pieces[scored[j]], losses[j]);
  }
  return table;
}

std::size_t prune_count(std::size_t vocab_size, std::size_t k, double alpha) {
  if (alpha < 0.0 || alpha > 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must lie in [0, 1]");
  }
  if (vocab_size <= k) return 0;
  const auto fraction =
      static_cast<std::size_t>(std::floor(alpha * static_cast<double>(vocab_size)));
  return std::min(vocab_size - k, fraction);
}

UnigramModel prune(const UnigramModel& model, const LossTable& losses, std::size_t k,
                   double alpha) {
  const std::size_t n = prune_count(model.size(), k, alpha);
  std::size_t protected_count = 0;
  for (const auto& [token, lp] : model.logprobs()) {
    if (model.is_protected(token)) ++protected_count;
  }
  if (protected_count > k) {
    throw Error(ErrorCode::kInfeasible,
                std::to_string(protected_count) +
                    " protected tokens exceed the target vocabulary size " +
                    std::to_string(k));
  }
  if (n == 0) return model;
  return remove_lowest(model, losses, n);
}

UnigramModel train_unigram(const WordCounts& counts, const UnigramTrainerOptions& options) {
  if (counts.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "cannot train on an empty corpus");
  }
  const std::size_t k = options.vocab_size;
  const std::size_t chars = char_inventory(counts).size();
  if (k < chars + 1) {
    throw Error(ErrorCode::kInfeasible,
                "vocabulary size " + std::to_string(k) +
                    " leaves no room for the " + std::to_string(chars) +
                    " characters plus the unknown token");
  }
  if (options.alpha < 0.0 || options.alpha > 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must lie in [0, 1]");
  }
  const std::size_t max_seed = options.max_seed != 0 ? options.max_seed : 100 * k;
  UnigramModel model =
      seed_vocab(counts, max_seed, options.max_token_len, options.unk_token);
  while (model.size() > k) {
    model = em_fit(model, counts, options.em_iterations);
    const LossTable losses = token_losses(model, counts);
    const std::size_t n = std::max<std::size_t>(1, prune_count(model.size(), k, options.alpha));
    model = remove_lowest(model, losses, n);
  }
  return em_fit(model, counts, options.em_iterations);
}

}  // namespace subword
