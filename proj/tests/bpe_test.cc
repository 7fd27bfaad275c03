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

#include <random>

#include <gtest/gtest.h>

#include "oracles/oracles.h"
#include "subword/error.h"

namespace subword {
namespace {

using Tokens = std::vector<std::u32string>;

WordCounts make(std::initializer_list<std::pair<std::u32string, std::uint64_t>> entries) {
  WordCounts counts;
  for (const auto& [w, c] : entries) counts.add(w, c);
  return counts;
}

WordCounts random_corpus(std::mt19937& rng, std::size_t max_types, std::size_t alphabet_size) {
  const std::u32string alphabet = std::u32string(U"abcdef").substr(0, alphabet_size);
  WordCounts counts;
  const std::size_t types = std::uniform_int_distribution<std::size_t>(1, max_types)(rng);
  for (std::size_t t = 0; t < types; ++t) {
    std::u32string word(1, kDefaultMarker);
    const int len = std::uniform_int_distribution<int>(1, 7)(rng);
    for (int i = 0; i < len; ++i) {
      word.push_back(alphabet[std::uniform_int_distribution<std::size_t>(
          0, alphabet.size() - 1)(rng)]);
    }
    counts.add(word, std::uniform_int_distribution<std::uint64_t>(1, 5)(rng));
  }
  return counts;
}

TEST(BpeTrainTest, MergesMostFrequentBigram) {
  // (▁,a)=5, (a,a)=3, (a,b)=2
  const BpeModel model = train_bpe(make({{U"▁aa", 3}, {U"▁ab", 2}}), 4);
  ASSERT_EQ(model.merges().size(), 1u);
  EXPECT_EQ(model.merges()[0], (Merge{U"▁", U"a"}));
  EXPECT_EQ(model.vocab(), (std::set<std::u32string>{U"▁", U"a", U"b", U"▁a"}));
}

TEST(BpeTrainTest, NoMergesWhenVocabEqualsInventory) {
  const BpeModel model = train_bpe(make({{U"▁ab", 1}}), 3);
  EXPECT_TRUE(model.merges().empty());
  EXPECT_EQ(model.vocab().size(), 3u);
}

TEST(BpeTrainTest, TieBreaksByCodePointOrder) {
  // All three bigrams occur twice; 'a' < 'b' < U+2581.
  const BpeModel model = train_bpe(make({{U"▁abc", 2}}), 5);
  ASSERT_EQ(model.merges().size(), 1u);
  EXPECT_EQ(model.merges()[0], (Merge{U"a", U"b"}));
}

TEST(BpeTrainTest, StopsWhenNoBigramRepeats) {
  const BpeModel model = train_bpe(make({{U"▁ab", 1}, {U"▁cd", 1}}), 100);
  EXPECT_TRUE(model.merges().empty());
}

TEST(BpeTrainTest, Errors) {
  try {
    train_bpe(make({{U"▁abc", 1}}), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasible);
  }
  EXPECT_THROW(train_bpe(WordCounts(), 10), Error);
}

TEST(BpeTokenizeTest, ReplaysMergesInOrder) {
  const BpeModel model(kDefaultMarker, {U'▁', U'a', U'b'},
                       {{U"▁", U"a"}, {U"▁a", U"b"}});
  // The second merge never sees an adjacent (▁a, b).
  EXPECT_EQ(model.tokenize(U"▁aab").tokens, (Tokens{U"▁a", U"a", U"b"}));
  EXPECT_EQ(model.tokenize(U"▁ab").tokens, (Tokens{U"▁ab"}));
}

TEST(BpeTokenizeTest, CharacterFallback) {
  const BpeModel model(kDefaultMarker, {U'▁', U'a', U'b'}, {});
  EXPECT_EQ(model.tokenize(U"▁ab").tokens, (Tokens{U"▁", U"a", U"b"}));
}

TEST(BpeTokenizeTest, UnknownCharacter) {
  const BpeModel model(kDefaultMarker, {U'▁', U'a'}, {{U"▁", U"a"}});
  const Segmentation seg = model.tokenize(U"▁aq");
  EXPECT_EQ(seg.tokens, (Tokens{U"▁a", U"<unk>"}));
  EXPECT_EQ(seg.unknown_count, 1u);
}

TEST(BpeTokenizeTest, LeftmostNonOverlapping) {
  const BpeModel model(kDefaultMarker, {U'▁', U'a'}, {{U"a", U"a"}});
  EXPECT_EQ(model.tokenize(U"▁aaa").tokens, (Tokens{U"▁", U"aa", U"a"}));
}

TEST(BpeModelTest, RejectsForwardReferences) {
  try {
    BpeModel model(kDefaultMarker, {U'a', U'b'}, {{U"ab", U"a"}, {U"a", U"b"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCorruptModel);
  }
}

// Trainer merge list equals a textbook full-recount implementation, and
// tokenizing the training words reproduces the trainer's final corpus.
TEST(BpeTrainTest, MatchesNaiveReferenceAndReplays) {
  std::mt19937 rng(2024);
  for (int round = 0; round < 60; ++round) {
    const WordCounts counts = random_corpus(rng, 20, 6);
    const std::size_t inventory = char_inventory(counts).size();
    const std::size_t k =
        inventory + std::uniform_int_distribution<std::size_t>(0, 30)(rng);
    const BpeModel model = train_bpe(counts, k);
    const auto naive = oracle::naive_bpe(counts.entries(), k);
    ASSERT_EQ(model.merges().size(), naive.merges.size()) << "round " << round;
    for (std::size_t i = 0; i < naive.merges.size(); ++i) {
      EXPECT_EQ(model.merges()[i].left, naive.merges[i].first);
      EXPECT_EQ(model.merges()[i].right, naive.merges[i].second);
    }
    for (const auto& [syms, count] : naive.corpus) {
      std::u32string word;
      for (const auto& s : syms) word += s;
      EXPECT_EQ(model.tokenize(word).tokens, syms);
    }
    EXPECT_LE(model.vocab().size(), k);
  }
}

TEST(BpeTokenizeTest, TokenCountNonIncreasingInMerges) {
  std::mt19937 rng(11);
  for (int round = 0; round < 20; ++round) {
    const WordCounts counts = random_corpus(rng, 15, 4);
    const BpeModel full = train_bpe(counts, char_inventory(counts).size() + 25);
    for (const auto& [word, count] : counts.entries()) {
      std::size_t previous = word.size() + 1;
      for (std::size_t m = 0; m <= full.merges().size(); ++m) {
        const BpeModel prefix(
            full.marker(), full.characters(),
            std::vector<Merge>(full.merges().begin(),
                               full.merges().begin() + static_cast<std::ptrdiff_t>(m)));
        const Segmentation seg = prefix.tokenize(word);
        EXPECT_LE(seg.tokens.size(), previous);
        EXPECT_EQ(seg.concatenated(), word);
        previous = seg.tokens.size();
      }
    }
  }
}

TEST(BpeTrainTest, Deterministic) {
  std::mt19937 rng(5);
  const WordCounts counts = random_corpus(rng, 20, 5);
  EXPECT_EQ(train_bpe(counts, 30), train_bpe(counts, 30));
}

}  // namespace
}  // namespace subword
