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

#ifndef SUBWORD_BPE_H_
#define SUBWORD_BPE_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "subword/corpus.h"
#include "subword/segmentation.h"

namespace subword {

struct Merge {
  std::u32string left;
  std::u32string right;

  std::u32string product() const { return left + right; }
  friend auto operator<=>(const Merge&, const Merge&) = default;
};

// Ordered merge list over a character inventory. Tokenization replays the
// merges in creation order.
//
// The constructor checks that every merge operand is a character or the
// product of an earlier merge; violations throw Error(kCorruptModel).
class BpeModel {
 public:
  BpeModel(char32_t marker, CharInventory characters, std::vector<Merge> merges,
           std::u32string unk_token = std::u32string(kDefaultUnkToken));

  char32_t marker() const { return marker_; }
  const std::u32string& unk_token() const { return unk_token_; }
  const CharInventory& characters() const { return characters_; }
  const std::vector<Merge>& merges() const { return merges_; }

  // Characters plus merge products. Two different merges may yield the same
  // string, so this can be smaller than characters + merges.
  const std::set<std::u32string>& vocab() const { return vocab_; }

  Segmentation tokenize(std::u32string_view word) const;

  friend bool operator==(const BpeModel& a, const BpeModel& b) {
    return a.marker_ == b.marker_ && a.unk_token_ == b.unk_token_ &&
           a.characters_ == b.characters_ && a.merges_ == b.merges_;
  }

 private:
  static std::uint64_t pair_key(int left, int right) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(left)) << 32) |
           static_cast<std::uint32_t>(right);
  }

  struct Rule {
    std::size_t rank;
    int product;
  };

  char32_t marker_;
  std::u32string unk_token_;
  CharInventory characters_;
  std::vector<Merge> merges_;
  std::set<std::u32string> vocab_;

  // Symbol table for replay: id -> token string.
  std::vector<std::u32string> symbols_;
  std::unordered_map<char32_t, int> char_ids_;
  // A pair can be merged more than once when a merge product is recreated
  // by a later merge, so each pair keeps its ranks in increasing order.
  std::unordered_map<std::uint64_t, std::vector<Rule>> rules_;
};

// Greedy bigram merging. Bigram counts are taken within words, weighted by
// word counts; equal counts are broken by the smaller (left, right) pair in
// code point order. Stops when the vocabulary reaches `vocab_size` or no
// bigram occurs at least twice.
BpeModel train_bpe(const WordCounts& counts, std::size_t vocab_size,
                   std::u32string unk_token = std::u32string(kDefaultUnkToken));

inline Segmentation tokenize_bpe(const BpeModel& model, std::u32string_view word) {
  return model.tokenize(word);
}

}  // namespace subword

#endif  // SUBWORD_BPE_H_
