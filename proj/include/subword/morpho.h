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

#ifndef SUBWORD_MORPHO_H_
#define SUBWORD_MORPHO_H_

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "subword/model.h"

namespace subword {

struct ReferenceSegmentation {
  std::u32string word;  // no marker
  std::vector<std::u32string> morphs;
  double weight = 1.0;
};

struct BoundaryReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double weighted_candidate_boundaries = 0.0;
  double weighted_reference_boundaries = 0.0;
  double weighted_matches = 0.0;
  std::size_t evaluated_words = 0;
  std::size_t skipped_unknown = 0;  // tokenization contained the unknown token
};

// Internal split offsets (code points) of a segmentation. A leading marker is
// stripped first; empty tokens contribute no boundary.
std::set<std::size_t> boundaries(const std::vector<std::u32string>& tokens,
                                 char32_t marker);

// Reads `word<TAB>weight<TAB>morph|morph|...` rows. Blank lines and lines
// starting with '#' are skipped. Literal '|' inside a morph is unsupported.
// Throws Error(kInvalidData) with the line number on malformed rows.
std::vector<ReferenceSegmentation> read_references(std::istream& in);
std::vector<ReferenceSegmentation> read_references_file(const std::string& path);

using WordTokenizer = std::function<Segmentation(std::u32string_view)>;

// Boundary precision/recall/F1 over references with at least two morphs.
// Each word is tokenized with the marker prepended; counts are scaled by the
// reference weight.
BoundaryReport boundary_prf(const WordTokenizer& tokenize, char32_t marker,
                            const std::vector<ReferenceSegmentation>& references);
BoundaryReport boundary_prf(const Model& model,
                            const std::vector<ReferenceSegmentation>& references);

}  // namespace subword

#endif  // SUBWORD_MORPHO_H_
