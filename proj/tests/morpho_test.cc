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

#include "subword/morpho.h"

#include <sstream>

#include <gtest/gtest.h>

#include "subword/error.h"
#include "support/morph_fixture.h"

namespace subword {
namespace {

using Offsets = std::set<std::size_t>;

std::vector<ReferenceSegmentation> references_of(
    const std::vector<testing::MorphFixtureRow>& rows) {
  std::vector<ReferenceSegmentation> refs;
  for (const auto& row : rows) refs.push_back(row.reference);
  return refs;
}

// Candidate = reference morphs, marker on the first.
WordTokenizer identity_tokenizer(const std::vector<ReferenceSegmentation>& refs) {
  std::map<std::u32string, Segmentation> table;
  for (const auto& ref : refs) {
    Segmentation seg;
    seg.tokens = ref.morphs;
    seg.tokens.front() = U"▁" + seg.tokens.front();
    table[U"▁" + ref.word] = seg;
  }
  return [table](std::u32string_view w) { return table.at(std::u32string(w)); };
}

TEST(BoundariesTest, CumulativeOffsets) {
  EXPECT_EQ(boundaries({U"un", U"friend", U"ly"}, kDefaultMarker), (Offsets{2, 8}));
  EXPECT_EQ(boundaries({U"friendly"}, kDefaultMarker), Offsets{});
  EXPECT_EQ(boundaries({U"▁fur", U"ious", U"ly"}, kDefaultMarker), (Offsets{3, 7}));
  // A bare marker token is the word-initial boundary, not an internal one.
  EXPECT_EQ(boundaries({U"▁", U"fur", U"ious"}, kDefaultMarker), (Offsets{3}));
  EXPECT_EQ(boundaries({}, kDefaultMarker), Offsets{});
}

TEST(BoundaryPrfTest, UnFriendLy) {
  const std::vector<ReferenceSegmentation> refs{{U"unfriendly", {U"un", U"friendly"}, 1.0}};
  const WordTokenizer tok = [](std::u32string_view) {
    return Segmentation{{U"▁un", U"friend", U"ly"}, 0.0, 0};
  };
  const BoundaryReport r = boundary_prf(tok, kDefaultMarker, refs);
  EXPECT_NEAR(r.precision, 0.5, 1e-12);
  EXPECT_NEAR(r.recall, 1.0, 1e-12);
  EXPECT_NEAR(r.f1, 2.0 / 3.0, 1e-12);
}

TEST(BoundaryPrfTest, HandScoredFixture) {
  const auto rows = testing::morph_fixture();
  const BoundaryReport r =
      boundary_prf(testing::fixture_tokenizer(rows), kDefaultMarker, references_of(rows));
  EXPECT_NEAR(r.weighted_candidate_boundaries, testing::kFixtureCandidate, 1e-9);
  EXPECT_NEAR(r.weighted_reference_boundaries, testing::kFixtureReference, 1e-9);
  EXPECT_NEAR(r.weighted_matches, testing::kFixtureMatches, 1e-9);
  EXPECT_NEAR(r.precision, testing::kFixturePrecision, 1e-9);
  EXPECT_NEAR(r.recall, testing::kFixtureRecall, 1e-9);
  EXPECT_NEAR(r.f1, testing::kFixtureF1, 1e-9);
  EXPECT_EQ(r.evaluated_words, testing::kFixtureEvaluated);
  EXPECT_EQ(r.skipped_unknown, testing::kFixtureSkipped);
}

TEST(BoundaryPrfTest, IdentityIsPerfect) {
  const auto refs = references_of(testing::morph_fixture());
  const BoundaryReport r = boundary_prf(identity_tokenizer(refs), kDefaultMarker, refs);
  EXPECT_DOUBLE_EQ(r.precision, 1.0);
  EXPECT_DOUBLE_EQ(r.recall, 1.0);
  EXPECT_DOUBLE_EQ(r.f1, 1.0);
}

TEST(BoundaryPrfTest, WeightScalingInvariant) {
  const auto rows = testing::morph_fixture();
  auto refs = references_of(rows);
  const BoundaryReport base = boundary_prf(testing::fixture_tokenizer(rows), kDefaultMarker, refs);
  for (auto& ref : refs) ref.weight *= 7.25;
  const BoundaryReport scaled =
      boundary_prf(testing::fixture_tokenizer(rows), kDefaultMarker, refs);
  EXPECT_NEAR(scaled.precision, base.precision, 1e-12);
  EXPECT_NEAR(scaled.recall, base.recall, 1e-12);
  EXPECT_NEAR(scaled.f1, base.f1, 1e-12);
}

TEST(BoundaryPrfTest, PerfectRowNeverLowersScores) {
  auto rows = testing::morph_fixture();
  const auto before =
      boundary_prf(testing::fixture_tokenizer(rows), kDefaultMarker, references_of(rows));
  rows.push_back({{U"kindness", {U"kind", U"ness"}, 3.0}, {U"▁kind", U"ness"}});
  const auto after =
      boundary_prf(testing::fixture_tokenizer(rows), kDefaultMarker, references_of(rows));
  EXPECT_GE(after.precision, before.precision);
  EXPECT_GE(after.recall, before.recall);
}

TEST(BoundaryPrfTest, NoMultimorphemicReferences) {
  const std::vector<ReferenceSegmentation> refs{{U"dog", {U"dog"}, 1.0}};
  const WordTokenizer tok = [](std::u32string_view w) {
    return Segmentation{{std::u32string(w)}, 0.0, 0};
  };
  try {
    boundary_prf(tok, kDefaultMarker, refs);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidData);
    EXPECT_NE(std::string(e.what()).find("no multimorphemic references"), std::string::npos);
  }
  EXPECT_THROW(boundary_prf(tok, kDefaultMarker, {}), Error);
}

TEST(BoundaryPrfTest, RealModel) {
  // ▁un | friend | ly
  const Model model = BpeModel(
      kDefaultMarker, {U'▁', U'u', U'n', U'f', U'r', U'i', U'e', U'd', U'l', U'y'},
      {{U"▁", U"u"}, {U"▁u", U"n"}, {U"f", U"r"}, {U"fr", U"i"}, {U"fri", U"e"},
       {U"frie", U"n"}, {U"frien", U"d"}, {U"l", U"y"}});
  EXPECT_EQ(model.tokenize(U"▁unfriendly").tokens,
            (std::vector<std::u32string>{U"▁un", U"friend", U"ly"}));
  const BoundaryReport r = boundary_prf(model, {{U"unfriendly", {U"un", U"friendly"}, 1.0}});
  EXPECT_NEAR(r.f1, 2.0 / 3.0, 1e-12);
}

TEST(ReadReferencesTest, ParsesRows) {
  std::istringstream in(
      "# comment\n"
      "\n"
      "unfriendly\t2.5\tun|friend|ly\r\n"
      "dog\t1\tdog\n");
  const auto refs = read_references(in);
  ASSERT_EQ(refs.size(), 2u);
  EXPECT_EQ(refs[0].word, U"unfriendly");
  EXPECT_EQ(refs[0].weight, 2.5);
  EXPECT_EQ(refs[0].morphs, (std::vector<std::u32string>{U"un", U"friend", U"ly"}));
  EXPECT_EQ(refs[1].morphs, (std::vector<std::u32string>{U"dog"}));
}

TEST(ReadReferencesTest, RejectsMalformedRowsWithLineNumber) {
  for (const char* bad : {"ab\t1\ta|c\n", "ab\t-1\ta|b\n", "ab\tx\ta|b\n", "ab\t1\n",
                          "ab\t1\ta||b\n", "a\xff\t1\ta\xff\n", "ab\t1\ta|b\textra\n"}) {
    std::istringstream in(std::string("ok\t1\to|k\n") + bad);
    try {
      read_references(in);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidData);
      EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    }
  }
}

TEST(ReadReferencesTest, BundledListParses) {
  const auto refs = read_references_file(std::string(SUBWORD_TEST_DATA) + "/desk_morphs.tsv");
  EXPECT_GE(refs.size(), 450u);
  for (const auto& ref : refs) EXPECT_GE(ref.morphs.size(), 2u);
}

}  // namespace
}  // namespace subword
