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

#ifndef SUBWORD_MODEL_H_
#define SUBWORD_MODEL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "subword/bpe.h"
#include "subword/segmentation.h"
#include "subword/unigram.h"

namespace subword {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class ModelKind { kBpe, kUnigram };

std::string_view model_kind_name(ModelKind kind);

// Either tokenizer behind one interface, for code that only needs to
// segment words and enumerate a vocabulary.
class Model {
 public:
  Model(BpeModel bpe) : impl_(std::move(bpe)) {}          // NOLINT
  Model(UnigramModel unigram) : impl_(std::move(unigram)) {}  // NOLINT

  ModelKind kind() const {
    return std::holds_alternative<BpeModel>(impl_) ? ModelKind::kBpe : ModelKind::kUnigram;
  }
  const BpeModel* bpe() const { return std::get_if<BpeModel>(&impl_); }
  const UnigramModel* unigram() const { return std::get_if<UnigramModel>(&impl_); }

  char32_t marker() const;
  const std::u32string& unk_token() const;

  // BPE replays merges; unigram decodes with Viterbi.
  Segmentation tokenize(std::u32string_view word) const;

  // The token strings the model can emit, excluding the unknown token, in
  // code point order.
  std::vector<std::u32string> vocabulary() const;

  // Id assignment: the unknown token, then single characters, then every
  // other token, each group in code point order. A token's id is its index.
  std::vector<std::u32string> id_order() const;

  // Single characters the model covers.
  CharInventory characters() const;

  friend bool operator==(const Model&, const Model&) = default;

 private:
  std::variant<BpeModel, UnigramModel> impl_;
};

struct TrainingMetadata {
  std::optional<std::uint64_t> vocab_size;
  std::optional<double> alpha;
  std::optional<int> em_iterations;
  std::string split_mode = "whitespace";
  std::string corpus_digest;
  std::string tool_version = std::string(kToolVersion);

  friend bool operator==(const TrainingMetadata&, const TrainingMetadata&) = default;
};

struct ModelFile {
  static constexpr int kFormatVersion = 1;

  Model model;
  TrainingMetadata training;

  friend bool operator==(const ModelFile&, const ModelFile&) = default;
};

}  // namespace subword

#endif  // SUBWORD_MODEL_H_
