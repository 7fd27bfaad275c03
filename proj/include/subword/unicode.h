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

#ifndef SUBWORD_UNICODE_H_
#define SUBWORD_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace subword {

// Strict UTF-8 decoding. Throws Error(kInvalidUtf8) naming the byte offset
// of the first bad sequence; `base_offset` is added to that offset so
// callers streaming line by line can report positions in the whole input.
std::u32string decode_utf8(std::string_view bytes, std::size_t base_offset = 0);

std::string encode_utf8(std::u32string_view text);
std::string encode_utf8(char32_t c);

// Canonical composition (NFC).
std::u32string nfc(std::u32string_view text);

// Unicode White_Space property.
bool is_whitespace(char32_t c);

}  // namespace subword

#endif  // SUBWORD_UNICODE_H_
