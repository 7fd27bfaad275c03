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

#ifndef SUBWORD_CORPUS_H_
#define SUBWORD_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace subword {

// U+2581 LOWER ONE EIGHTH BLOCK, rendered "▁".
inline constexpr char32_t kDefaultMarker = U'▁';

enum class SplitMode {
  kWhitespace,  // one word per whitespace-delimited unit
  kLine,        // one word per line, internal whitespace dropped
};

SplitMode parse_split_mode(std::string_view name);
std::string_view split_mode_name(SplitMode mode);

// Multiset of marker-prefixed words. Keys are kept sorted by code point so
// every iteration over a WordCounts is deterministic.
class WordCounts {
 public:
  explicit WordCounts(char32_t marker = kDefaultMarker) : marker_(marker) {}

  // `word` must start with exactly one marker and contain no whitespace.
  void add(std::u32string word, std::uint64_t count = 1);

  // Counting is commutative and associative, so shards can be ingested
  // independently and merged in any order.
  void merge(const WordCounts& other);

  const std::map<std::u32string, std::uint64_t>& entries() const {
    return entries_;
  }
  char32_t marker() const { return marker_; }
  std::uint64_t total_words() const { return total_words_; }
  std::size_t total_word_types() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const WordCounts&, const WordCounts&) = default;

 private:
  char32_t marker_;
  std::map<std::u32string, std::uint64_t> entries_;
  std::uint64_t total_words_ = 0;
};

using CharInventory = std::set<char32_t>;

// Splits one NFC-normalized line into marker-prefixed words.
std::vector<std::u32string> split_words(std::u32string_view line,
                                        char32_t marker, SplitMode mode);

// Reads UTF-8 text line by line, NFC-normalizes, splits and counts.
// Fails with kMarkerCollision if the marker occurs in the input and with
// kInvalidUtf8 (carrying the byte offset) on malformed input.
WordCounts ingest(std::istream& in, char32_t marker = kDefaultMarker,
                  SplitMode mode = SplitMode::kWhitespace);
WordCounts ingest(std::string_view text, char32_t marker = kDefaultMarker,
                  SplitMode mode = SplitMode::kWhitespace);

// Whole-file read; ".gz" files are decompressed transparently and "-"
// reads standard input.
std::string read_text(const std::filesystem::path& path);

WordCounts ingest_file(const std::filesystem::path& path,
                       char32_t marker = kDefaultMarker,
                       SplitMode mode = SplitMode::kWhitespace);

CharInventory char_inventory(const WordCounts& counts);

// Hex SHA-256 over the sorted (word, count) entries and the marker.
std::string corpus_digest(const WordCounts& counts);

}  // namespace subword

#endif  // SUBWORD_CORPUS_H_
