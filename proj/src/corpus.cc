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

#include "subword/corpus.h"

#include <openssl/evp.h>
#include <zlib.h>

#include <array>
#include <fstream>
#include <iostream>
#include <istream>
#include <memory>
#include <sstream>

#include "subword/error.h"
#include "subword/unicode.h"

namespace subword {
namespace {

// Accumulates counts one raw line at a time, tracking the byte offset so
// UTF-8 errors can point into the whole stream.
class LineIngester {
 public:
  LineIngester(char32_t marker, SplitMode mode)
      : counts_(marker), marker_(marker), mode_(mode) {}

  void consume(std::string_view raw_line) {
    const std::u32string decoded = decode_utf8(raw_line, offset_);
    for (std::size_t i = 0; i < decoded.size(); ++i) {
      if (decoded[i] == marker_) {
        throw Error(ErrorCode::kMarkerCollision,
                    "boundary marker U+" + hex(marker_) +
                        " occurs in the input text (line " +
                        std::to_string(line_ + 1) + ")");
      }
    }
    for (auto& word : split_words(nfc(decoded), marker_, mode_)) {
      counts_.add(std::move(word));
    }
    offset_ += raw_line.size() + 1;
    ++line_;
  }

  WordCounts take() { return std::move(counts_); }

 private:
  static std::string hex(char32_t c) {
    std::ostringstream os;
    os << std::uppercase << std::hex << static_cast<std::uint32_t>(c);
    std::string s = os.str();
    return std::string(s.size() < 4 ? 4 - s.size() : 0, '0') + s;
  }

  WordCounts counts_;
  char32_t marker_;
  SplitMode mode_;
  std::size_t offset_ = 0;
  std::size_t line_ = 0;
};

std::string read_gzip(const std::filesystem::path& path) {
  gzFile file = gzopen(path.c_str(), "rb");
  if (file == nullptr) {
    throw Error(ErrorCode::kIo, "cannot open " + path.string());
  }
  std::unique_ptr<gzFile_s, decltype(&gzclose)> guard(file, &gzclose);
  std::string out;
  std::array<char, 1 << 16> buf;
  for (;;) {
    const int n = gzread(file, buf.data(), static_cast<unsigned>(buf.size()));
    if (n < 0) {
      int errnum = 0;
      throw Error(ErrorCode::kIo, "gzip read failed for " + path.string() +
                                      ": " + gzerror(file, &errnum));
    }
    if (n == 0) break;
    out.append(buf.data(), static_cast<std::size_t>(n));
  }
  return out;
}

}  // namespace

SplitMode parse_split_mode(std::string_view name) {
  if (name == "whitespace") return SplitMode::kWhitespace;
  if (name == "line") return SplitMode::kLine;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown split mode '" + std::string(name) + "'");
}

std::string_view split_mode_name(SplitMode mode) {
  return mode == SplitMode::kLine ? "line" : "whitespace";
}

void WordCounts::add(std::u32string word, std::uint64_t count) {
  if (word.size() < 2 || word.front() != marker_) {
    throw Error(ErrorCode::kInvalidArgument,
                "word must be a marker followed by at least one character");
  }
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (word[i] == marker_ || is_whitespace(word[i])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "word contains whitespace or an inner marker: " +
                      encode_utf8(word));
    }
  }
  if (count == 0) return;
  entries_[std::move(word)] += count;
  total_words_ += count;
}

void WordCounts::merge(const WordCounts& other) {
  if (other.marker_ != marker_) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot merge word counts with different markers");
  }
  for (const auto& [word, count] : other.entries_) entries_[word] += count;
  total_words_ += other.total_words_;
}

std::vector<std::u32string> split_words(std::u32string_view line,
                                        char32_t marker, SplitMode mode) {
  std::vector<std::u32string> words;
  if (mode == SplitMode::kLine) {
    std::u32string word(1, marker);
    for (char32_t c : line) {
      if (!is_whitespace(c)) word.push_back(c);
    }
    if (word.size() > 1) words.push_back(std::move(word));
    return words;
  }
  std::u32string current;
  for (char32_t c : line) {
    if (is_whitespace(c)) {
      if (!current.empty()) {
        words.push_back(marker + current);
        current.clear();
      }
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) words.push_back(marker + current);
  return words;
}

WordCounts ingest(std::istream& in, char32_t marker, SplitMode mode) {
  LineIngester ingester(marker, mode);
  std::string line;
  while (std::getline(in, line)) ingester.consume(line);
  if (in.bad()) throw Error(ErrorCode::kIo, "read error on input stream");
  return ingester.take();
}

WordCounts ingest(std::string_view text, char32_t marker, SplitMode mode) {
  LineIngester ingester(marker, mode);
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    ingester.consume(text.substr(0, eol));
    if (eol == std::string_view::npos) break;
    text.remove_prefix(eol + 1);
  }
  return ingester.take();
}

std::string read_text(const std::filesystem::path& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  if (path.extension() == ".gz") return read_gzip(path);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "read error on " + path.string());
  return os.str();
}

WordCounts ingest_file(const std::filesystem::path& path, char32_t marker,
                       SplitMode mode) {
  if (path != "-" && path.extension() != ".gz") {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
    return ingest(in, marker, mode);
  }
  const std::string text = read_text(path);
  return ingest(std::string_view(text), marker, mode);
}

CharInventory char_inventory(const WordCounts& counts) {
  CharInventory chars;
  for (const auto& [word, count] : counts.entries()) {
    chars.insert(word.begin(), word.end());
  }
  return chars;
}

std::string corpus_digest(const WordCounts& counts) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(
      EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  auto feed = [&](std::string_view s) {
    EVP_DigestUpdate(ctx.get(), s.data(), s.size());
  };
  feed(encode_utf8(counts.marker()));
  feed("\n");
  for (const auto& [word, count] : counts.entries()) {
    feed(encode_utf8(word));
    feed("\t");
    feed(std::to_string(count));
    feed("\n");
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int size = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &size);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < size; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

}  // namespace subword
