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

#ifndef SUBWORD_SEGMENTATION_H_
#define SUBWORD_SEGMENTATION_H_

#include <cstddef>
#include <string>
#include <vector>

namespace subword {

inline constexpr std::u32string_view kDefaultUnkToken = U"<unk>";

// Ordered tokens covering one word. When `unknown_count` is zero the tokens
// concatenate back to the word; otherwise that many single characters were
// replaced by the model's unknown token.
struct Segmentation {
  std::vector<std::u32string> tokens;
  double log_likelihood = 0.0;
  std::size_t unknown_count = 0;

  std::u32string concatenated() const {
    std::u32string out;
    for (const auto& t : tokens) out += t;
    return out;
  }
};

}  // namespace subword

#endif  // SUBWORD_SEGMENTATION_H_
