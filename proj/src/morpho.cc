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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>

#include "subword/error.h"
#include "subword/unicode.h"

namespace subword {

std::set<std::size_t> boundaries(const std::vector<std::u32string>& tokens,
                                 char32_t marker) {
  std::set<std::size_t> out;
  std::size_t offset = 0;
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    std::size_t len = tokens[i].size();
    if (i == 0 && len > 0 && tokens[i].front() == marker) --len;
    offset += len;
    if (offset > 0) out.insert(offset);
  }
  return out;
}

std::vector<ReferenceSegmentation> read_references(std::istream& in) {
  std::vector<ReferenceSegmentation> refs;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::kInvalidData,
                "reference line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const std::size_t tab1 = line.find('\t');
    const std::size_t tab2 =
        tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos || line.find('\t', tab2 + 1) != std::string::npos) {
      fail("expected word<TAB>weight<TAB>morphs");
    }
    ReferenceSegmentation ref;
    try {
      ref.word = decode_utf8(std::string_view(line).substr(0, tab1));
    } catch (const Error& e) {
      fail(e.what());
    }
    const std::string weight = line.substr(tab1 + 1, tab2 - tab1 - 1);
    const auto [ptr, ec] =
        std::from_chars(weight.data(), weight.data() + weight.size(), ref.weight);
    if (ec != std::errc() || ptr != weight.data() + weight.size() ||
        !std::isfinite(ref.weight) || ref.weight < 0.0) {
      fail("weight must be a non-negative number");
    }
    std::u32string morphs;
    try {
      morphs = decode_utf8(std::string_view(line).substr(tab2 + 1));
    } catch (const Error& e) {
      fail(e.what());
    }
    std::u32string current;
    for (char32_t c : morphs) {
      if (c == U'|') {
        ref.morphs.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(c);
      }
    }
    ref.morphs.push_back(std::move(current));
    std::u32string joined;
    for (const auto& m : ref.morphs) {
      if (m.empty()) fail("empty morph");
      joined += m;
    }
    if (ref.word.empty()) fail("empty word");
    if (joined != ref.word) fail("morphs do not concatenate to the word");
    refs.push_back(std::move(ref));
  }
  return refs;
}

std::vector<ReferenceSegmentation> read_references_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return read_references(in);
}

BoundaryReport boundary_prf(const WordTokenizer& tokenize, char32_t marker,
                            const std::vector<ReferenceSegmentation>& references) {
  BoundaryReport report;
  bool any = false;
  for (const auto& ref : references) {
    if (ref.morphs.size() < 2) continue;
    any = true;
    const Segmentation seg = tokenize(marker + ref.word);
    if (seg.unknown_count > 0) {
      ++report.skipped_unknown;
      continue;
    }
    const auto candidate = boundaries(seg.tokens, marker);
    const auto reference = boundaries(ref.morphs, marker);
    std::size_t matches = 0;
    for (std::size_t b : candidate) matches += reference.count(b);
    report.weighted_candidate_boundaries += ref.weight * static_cast<double>(candidate.size());
    report.weighted_reference_boundaries += ref.weight * static_cast<double>(reference.size());
    report.weighted_matches += ref.weight * static_cast<double>(matches);
    ++report.evaluated_words;
  }
  if (!any) {
    throw Error(ErrorCode::kInvalidData, "no multimorphemic references");
  }
  if (report.weighted_candidate_boundaries > 0.0) {
    report.precision = report.weighted_matches / report.weighted_candidate_boundaries;
  }
  if (report.weighted_reference_boundaries > 0.0) {
    report.recall = report.weighted_matches / report.weighted_reference_boundaries;
  }
  const double sum = report.precision + report.recall;
  report.f1 = sum > 0.0 ? 2.0 * report.precision * report.recall / sum : 0.0;
  return report;
}

BoundaryReport boundary_prf(const Model& model,
                            const std::vector<ReferenceSegmentation>& references) {
  return boundary_prf([&model](std::u32string_view word) { return model.tokenize(word); },
                      model.marker(), references);
}

}  // namespace subword
