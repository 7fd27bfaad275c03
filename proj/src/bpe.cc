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

#include "subword/bpe.h"

#include <algorithm>
#include <unordered_set>

#include "subword/error.h"
#include "subword/unicode.h"

namespace subword {

BpeModel::BpeModel(char32_t marker, CharInventory characters,
                   std::vector<Merge> merges, std::u32string unk_token)
    : marker_(marker),
      unk_token_(std::move(unk_token)),
      characters_(std::move(characters)),
      merges_(std::move(merges)) {
  if (unk_token_.empty()) {
    throw Error(ErrorCode::kCorruptModel, "unknown token must be non-empty");
  }
  std::unordered_map<std::u32string, int> ids;
  auto intern = [&](const std::u32string& token) {
    auto [it, inserted] = ids.emplace(token, static_cast<int>(symbols_.size()));
    if (inserted) symbols_.push_back(token);
    return it->second;
  };
  for (char32_t c : characters_) {
    const std::u32string token(1, c);
    char_ids_[c] = intern(token);
    vocab_.insert(token);
  }
  for (std::size_t rank = 0; rank < merges_.size(); ++rank) {
    const Merge& merge = merges_[rank];
    for (const std::u32string* operand : {&merge.left, &merge.right}) {
      if (!ids.contains(*operand)) {
        throw Error(ErrorCode::kCorruptModel,
                    "merge " + std::to_string(rank) + " uses operand '" +
                        encode_utf8(*operand) +
                        "' that is neither a character nor an earlier merge "
                        "product");
      }
    }
    const int left = ids.at(merge.left);
    const int right = ids.at(merge.right);
    const int product = intern(merge.product());
    vocab_.insert(merge.product());
    rules_[pair_key(left, right)].push_back(Rule{rank, product});
  }
}

Segmentation BpeModel::tokenize(std::u32string_view word) const {
  Segmentation seg;
  constexpr int kUnknown = -1;
  std::vector<int> symbols;
  symbols.reserve(word.size());
  for (char32_t c : word) {
    const auto it = char_ids_.find(c);
    if (it == char_ids_.end()) {
      symbols.push_back(kUnknown);
      ++seg.unknown_count;
    } else {
      symbols.push_back(it->second);
    }
  }

  // Equivalent to applying every merge in creation order: merges with no
  // adjacent occurrence are no-ops, so jump straight to the lowest rank at
  // or after the cursor that matches somewhere in the word.
  std::size_t cursor = 0;
  while (symbols.size() > 1) {
    const Rule* best = nullptr;
    int best_left = 0;
    int best_right = 0;
    for (std::size_t i = 0; i + 1 < symbols.size(); ++i) {
      if (symbols[i] == kUnknown || symbols[i + 1] == kUnknown) continue;
      const auto it = rules_.find(pair_key(symbols[i], symbols[i + 1]));
      if (it == rules_.end()) continue;
      const auto& ranks = it->second;
      const auto r = std::lower_bound(
          ranks.begin(), ranks.end(), cursor,
          [](const Rule& rule, std::size_t value) { return rule.rank < value; });
      if (r != ranks.end() && (best == nullptr || r->rank < best->rank)) {
        best = &*r;
        best_left = symbols[i];
        best_right = symbols[i + 1];
      }
    }
    if (best == nullptr) break;
    std::vector<int> next;
    next.reserve(symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      if (i + 1 < symbols.size() && symbols[i] == best_left &&
          symbols[i + 1] == best_right) {
        next.push_back(best->product);
        ++i;
      } else {
        next.push_back(symbols[i]);
      }
    }
    symbols = std::move(next);
    cursor = best->rank + 1;
  }

  seg.tokens.reserve(symbols.size());
  for (int id : symbols) {
    seg.tokens.push_back(id == kUnknown ? unk_token_ : symbols_[id]);
  }
  return seg;
}

namespace {

// Incremental trainer state. Pair counts are kept exact by recounting every
// word that contains the merged pair before and after the merge.
class BpeTrainer {
 public:
  explicit BpeTrainer(const WordCounts& counts) : queue_(PairOrder{&symbols_}) {
    for (const auto& [word, count] : counts.entries()) {
      std::vector<int> syms;
      syms.reserve(word.size());
      for (char32_t c : word) syms.push_back(intern(std::u32string(1, c)));
      words_.push_back(std::move(syms));
      freqs_.push_back(static_cast<std::int64_t>(count));
    }
    std::unordered_map<std::uint64_t, std::int64_t> initial;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      add_pairs(static_cast<int>(w), +1, initial);
    }
    apply(initial);
  }

  // Returns false when no pair occurs at least twice.
  bool merge_best(Merge& merge) {
    if (queue_.empty() || queue_.begin()->count < 2) return false;
    const Candidate top = *queue_.begin();
    merge.left = symbols_[top.left];
    merge.right = symbols_[top.right];
    const int product = intern(merge.product());

    const std::uint64_t key = pair_key(top.left, top.right);
    const std::vector<int> affected(where_[key].begin(), where_[key].end());
    std::unordered_map<std::uint64_t, std::int64_t> delta;
    for (int w : affected) {
      add_pairs(w, -1, delta);
      auto& syms = words_[w];
      std::vector<int> next;
      next.reserve(syms.size());
      for (std::size_t i = 0; i < syms.size(); ++i) {
        if (i + 1 < syms.size() && syms[i] == top.left &&
            syms[i + 1] == top.right) {
          next.push_back(product);
          ++i;
        } else {
          next.push_back(syms[i]);
        }
      }
      syms = std::move(next);
      add_pairs(w, +1, delta);
    }
    apply(delta);
    return true;
  }

  const std::vector<std::vector<int>>& words() const { return words_; }
  const std::vector<std::u32string>& symbols() const { return symbols_; }

 private:
  struct Candidate {
    std::int64_t count;
    int left;
    int right;
  };

  // Highest count first, then the smaller (left, right) pair in code point
  // order.
  struct PairOrder {
    const std::vector<std::u32string>* symbols;
    bool operator()(const Candidate& a, const Candidate& b) const {
      if (a.count != b.count) return a.count > b.count;
      const auto& s = *symbols;
      if (a.left != b.left) return s[a.left] < s[b.left];
      return s[a.right] < s[b.right];
    }
  };

  static std::uint64_t pair_key(int left, int right) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(left)) << 32) |
           static_cast<std::uint32_t>(right);
  }

  int intern(const std::u32string& token) {
    auto [it, inserted] = ids_.emplace(token, static_cast<int>(symbols_.size()));
    if (inserted) symbols_.push_back(token);
    return it->second;
  }

  void add_pairs(int w, int sign,
                 std::unordered_map<std::uint64_t, std::int64_t>& delta) {
    const auto& syms = words_[w];
    for (std::size_t i = 0; i + 1 < syms.size(); ++i) {
      const std::uint64_t key = pair_key(syms[i], syms[i + 1]);
      delta[key] += sign * freqs_[w];
      if (sign > 0) where_[key].insert(w);
    }
  }

  void apply(const std::unordered_map<std::uint64_t, std::int64_t>& delta) {
    for (const auto& [key, change] : delta) {
      if (change == 0) continue;
      const int left = static_cast<int>(key >> 32);
      const int right = static_cast<int>(key & 0xffffffffu);
      std::int64_t& count = counts_[key];
      if (count > 0) queue_.erase(Candidate{count, left, right});
      count += change;
      if (count > 0) {
        queue_.insert(Candidate{count, left, right});
      } else {
        counts_.erase(key);
        where_.erase(key);
      }
    }
  }

  std::vector<std::u32string> symbols_;
  std::unordered_map<std::u32string, int> ids_;
  std::vector<std::vector<int>> words_;
  std::vector<std::int64_t> freqs_;
  std::unordered_map<std::uint64_t, std::int64_t> counts_;
  std::unordered_map<std::uint64_t, std::unordered_set<int>> where_;
  std::set<Candidate, PairOrder> queue_;
};

}  // namespace

BpeModel train_bpe(const WordCounts& counts, std::size_t vocab_size,
                   std::u32string unk_token) {
  if (counts.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "cannot train on an empty corpus");
  }
  CharInventory chars = char_inventory(counts);
  if (vocab_size < chars.size()) {
    throw Error(ErrorCode::kInfeasible,
                "vocabulary size " + std::to_string(vocab_size) +
                    " is smaller than the character inventory (" +
                    std::to_string(chars.size()) + ")");
  }
  std::set<std::u32string> vocab;
  for (char32_t c : chars) vocab.insert(std::u32string(1, c));

  BpeTrainer trainer(counts);
  std::vector<Merge> merges;
  while (vocab.size() < vocab_size) {
    Merge merge;
    if (!trainer.merge_best(merge)) break;
    vocab.insert(merge.product());
    merges.push_back(std::move(merge));
  }
  return BpeModel(counts.marker(), std::move(chars), std::move(merges),
                  std::move(unk_token));
}

}  // namespace subword
