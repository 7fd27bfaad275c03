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

// Hand-scored boundary evaluation fixture.
//
// Each row pairs a reference segmentation with a fixed candidate
// tokenization. Per-row boundary sets and weighted totals are worked out by
// hand below, so the expected scores do not depend on the code under test.
//
//   word        w    candidate             cand      ref     C    R    M
//   unfriendly  1    ▁un friend ly         {2,8}     {2}     2    1    1
//   walked      2    ▁walk ed              {4}       {4}     2    2    2
//   cats        3    ▁cats                 {}        {3}     0    3    0
//   rethinking  1    ▁re think ing         {2,7}     {2,7}   2    2    2
//   happiness   2    ▁happ iness           {4}       {5}     2    2    0
//   dog         5    (single morph: not evaluated)
//   quickly     0.5  ▁qu ick ly            {2,5}     {5}     1    0.5  0.5
//   unkind      1    ▁u nkind              {1}       {2}     1    1    0
//   books       4    ▁book s               {4}       {4}     4    4    4
//   played      1    ▁p l a y e d          {1..5}    {4}     5    1    1
//   zebras      1    ▁ze <unk> as          (unknown token: skipped)
//   teacher     1    ▁teach er             {5}       {5}     1    1    1
//                                                   total   20  17.5 11.5
//
//   P = 11.5/20 = 23/40, R = 11.5/17.5 = 23/35, F1 = 2M/(C+R) = 46/75.

#ifndef SUBWORD_TESTS_SUPPORT_MORPH_FIXTURE_H_
#define SUBWORD_TESTS_SUPPORT_MORPH_FIXTURE_H_

#include <map>
#include <string>
#include <vector>

#include "subword/morpho.h"

namespace subword::testing {

struct MorphFixtureRow {
  ReferenceSegmentation reference;
  std::vector<std::u32string> candidate;
  bool unknown = false;
};

inline std::vector<MorphFixtureRow> morph_fixture() {
  return {
      {{U"unfriendly", {U"un", U"friendly"}, 1.0}, {U"▁un", U"friend", U"ly"}},
      {{U"walked", {U"walk", U"ed"}, 2.0}, {U"▁walk", U"ed"}},
      {{U"cats", {U"cat", U"s"}, 3.0}, {U"▁cats"}},
      {{U"rethinking", {U"re", U"think", U"ing"}, 1.0}, {U"▁re", U"think", U"ing"}},
      {{U"happiness", {U"happi", U"ness"}, 2.0}, {U"▁happ", U"iness"}},
      {{U"dog", {U"dog"}, 5.0}, {U"▁d", U"og"}},
      {{U"quickly", {U"quick", U"ly"}, 0.5}, {U"▁qu", U"ick", U"ly"}},
      {{U"unkind", {U"un", U"kind"}, 1.0}, {U"▁u", U"nkind"}},
      {{U"books", {U"book", U"s"}, 4.0}, {U"▁book", U"s"}},
      {{U"played", {U"play", U"ed"}, 1.0}, {U"▁p", U"l", U"a", U"y", U"e", U"d"}},
      {{U"zebras", {U"zebra", U"s"}, 1.0}, {U"▁ze", U"<unk>", U"as"}, true},
      {{U"teacher", {U"teach", U"er"}, 1.0}, {U"▁teach", U"er"}},
  };
}

inline constexpr double kFixtureCandidate = 20.0;
inline constexpr double kFixtureReference = 17.5;
inline constexpr double kFixtureMatches = 11.5;
inline constexpr double kFixturePrecision = 23.0 / 40.0;
inline constexpr double kFixtureRecall = 23.0 / 35.0;
inline constexpr double kFixtureF1 = 46.0 / 75.0;
inline constexpr std::size_t kFixtureEvaluated = 10;
inline constexpr std::size_t kFixtureSkipped = 1;

// Tokenizer that returns the fixture candidates verbatim.
inline WordTokenizer fixture_tokenizer(const std::vector<MorphFixtureRow>& rows) {
  std::map<std::u32string, Segmentation> table;
  for (const auto& row : rows) {
    Segmentation seg;
    seg.tokens = row.candidate;
    seg.unknown_count = row.unknown ? 1 : 0;
    table[U"▁" + row.reference.word] = seg;
  }
  return [table](std::u32string_view word) { return table.at(std::u32string(word)); };
}

}  // namespace subword::testing

#endif  // SUBWORD_TESTS_SUPPORT_MORPH_FIXTURE_H_
