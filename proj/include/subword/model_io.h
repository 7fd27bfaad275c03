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

#ifndef SUBWORD_MODEL_IO_H_
#define SUBWORD_MODEL_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "subword/model.h"

namespace subword {

// Model files are JSON documents with sorted keys, two-space indentation and
// a trailing newline. Doubles are written in shortest round-trip form, so
// save and load are exact inverses and equal models give equal bytes.
//
//   format_version  1
//   kind            "bpe" | "unigram"
//   marker          one code point
//   unk_token       string
//   characters      bpe: character inventory, code point order
//   merges          bpe: [left, right] pairs in creation order
//   pieces          unigram: [token, logprob] pairs in id order
//   training        vocab_size, alpha, em_iterations, split_mode,
//                   corpus_digest, tool_version
std::string serialize_model(const ModelFile& file);

// Throws Error(kCorruptModel) naming the first violated invariant.
ModelFile parse_model(std::string_view text);

void save_model(const ModelFile& file, const std::filesystem::path& path);
ModelFile load_model(const std::filesystem::path& path);

}  // namespace subword

#endif  // SUBWORD_MODEL_IO_H_
