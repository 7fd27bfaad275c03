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

#include "subword/model.h"

#include <algorithm>
#include <set>

namespace subword {

std::string_view model_kind_name(ModelKind kind) {
  return kind == ModelKind::kBpe ? "bpe" : "unigram";
}

char32_t Model::marker() const {
  return std::visit([](const auto& m) { return m.marker(); }, impl_);
}

const std::u32string& Model::unk_token() const {
  return std::visit([](const auto& m) -> const std::u32string& { return m.unk_token(); },
                    impl_);
}

Segmentation Model::tokenize(std::u32string_view word) const {
  if (const auto* m = bpe()) return m->tokenize(word);
  return viterbi_tokenize(*unigram(), word);
}

std::vector<std::u32string> Model::vocabulary() const {
  if (const auto* m = bpe()) return {m->vocab().begin(), m->vocab().end()};
  std::vector<std::u32string> out;
  for (const auto& [token, lp] : unigram()->logprobs()) {
    if (token != unigram()->unk_token()) out.push_back(token);
  }
  return out;
}

CharInventory Model::characters() const {
  if (const auto* m = bpe()) return m->characters();
  CharInventory chars;
  for (const auto& [token, lp] : unigram()->logprobs()) {
    if (token.size() == 1 && token != unigram()->unk_token()) chars.insert(token[0]);
  }
  return chars;
}

std::vector<std::u32string> Model::id_order() const {
  std::vector<std::u32string> order{unk_token()};
  std::set<std::u32string> rest;
  for (auto& token : vocabulary()) {
    if (token.size() != 1 && token != unk_token()) rest.insert(std::move(token));
  }
  for (char32_t c : characters()) {
    if (std::u32string(1, c) != unk_token()) order.emplace_back(1, c);
  }
  order.insert(order.end(), rest.begin(), rest.end());
  return order;
}

}  // namespace subword
