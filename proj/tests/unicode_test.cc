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

#include "subword/unicode.h"

#include <gtest/gtest.h>

#include "subword/error.h"

namespace subword {
namespace {

TEST(UnicodeTest, RoundTripsMultibyte) {
  const std::string text = "a\xC3\xA9\xE2\x96\x81\xF0\x9F\x99\x82";  // a é ▁ 🙂
  const std::u32string decoded = decode_utf8(text);
  EXPECT_EQ(decoded, U"aé▁🙂");
  EXPECT_EQ(encode_utf8(decoded), text);
}

TEST(UnicodeTest, InvalidUtf8ReportsOffset) {
  try {
    decode_utf8("ab\xC3(", 100);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidUtf8);
    EXPECT_NE(std::string(e.what()).find("102"), std::string::npos) << e.what();
  }
  EXPECT_THROW(decode_utf8("\xED\xA0\x80"), Error);  // surrogate
  EXPECT_THROW(decode_utf8("\xC0\xAF"), Error);      // overlong
}

TEST(UnicodeTest, NfcComposes) {
  EXPECT_EQ(nfc(U"é"), U"é");
  EXPECT_EQ(nfc(U"abc"), U"abc");
}

TEST(UnicodeTest, Whitespace) {
  EXPECT_TRUE(is_whitespace(U' '));
  EXPECT_TRUE(is_whitespace(U'\t'));
  EXPECT_TRUE(is_whitespace(U'　'));  // ideographic space
  EXPECT_TRUE(is_whitespace(U' '));
  EXPECT_FALSE(is_whitespace(U'a'));
  EXPECT_FALSE(is_whitespace(U'▁'));
}

}  // namespace
}  // namespace subword
