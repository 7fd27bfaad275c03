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

#include "subword/model_io.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "subword/error.h"
#include "subword/unicode.h"

namespace subword {
namespace {

using nlohmann::json;

[[noreturn]] void corrupt(const std::string& what) {
  throw Error(ErrorCode::kCorruptModel, "corrupt model file: " + what);
}

std::u32string to_u32(const json& value, const char* field) {
  if (!value.is_string()) corrupt(std::string(field) + " must be a string");
  try {
    return decode_utf8(value.get_ref<const std::string&>());
  } catch (const Error&) {
    corrupt(std::string(field) + " is not valid UTF-8");
  }
}

const json& require(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) corrupt(std::string("missing field '") + key + "'");
  return *it;
}

json metadata_to_json(const TrainingMetadata& meta) {
  json out = json::object();
  if (meta.vocab_size) out["vocab_size"] = *meta.vocab_size;
  if (meta.alpha) out["alpha"] = *meta.alpha;
  if (meta.em_iterations) out["em_iterations"] = *meta.em_iterations;
  out["split_mode"] = meta.split_mode;
  out["corpus_digest"] = meta.corpus_digest;
  out["tool_version"] = meta.tool_version;
  return out;
}

TrainingMetadata metadata_from_json(const json& doc) {
  if (!doc.is_object()) corrupt("training must be an object");
  TrainingMetadata meta;
  try {
    if (doc.contains("vocab_size") && !doc["vocab_size"].is_null()) {
      meta.vocab_size = doc["vocab_size"].get<std::uint64_t>();
    }
    if (doc.contains("alpha") && !doc["alpha"].is_null()) {
      meta.alpha = doc["alpha"].get<double>();
    }
    if (doc.contains("em_iterations") && !doc["em_iterations"].is_null()) {
      meta.em_iterations = doc["em_iterations"].get<int>();
    }
    meta.split_mode = doc.value("split_mode", std::string("whitespace"));
    meta.corpus_digest = doc.value("corpus_digest", std::string());
    meta.tool_version = doc.value("tool_version", std::string());
  } catch (const json::exception& e) {
    corrupt(std::string("bad training metadata: ") + e.what());
  }
  return meta;
}

}  // namespace

std::string serialize_model(const ModelFile& file) {
  const Model& model = file.model;
  json doc = json::object();
  doc["format_version"] = ModelFile::kFormatVersion;
  doc["kind"] = std::string(model_kind_name(model.kind()));
  doc["marker"] = encode_utf8(model.marker());
  doc["unk_token"] = encode_utf8(model.unk_token());
  doc["training"] = metadata_to_json(file.training);
  if (const BpeModel* bpe = model.bpe()) {
    json chars = json::array();
    for (char32_t c : bpe->characters()) chars.push_back(encode_utf8(c));
    doc["characters"] = std::move(chars);
    json merges = json::array();
    for (const Merge& m : bpe->merges()) {
      merges.push_back(json::array({encode_utf8(m.left), encode_utf8(m.right)}));
    }
    doc["merges"] = std::move(merges);
  } else {
    const UnigramModel& uni = *model.unigram();
    json pieces = json::array();
    for (const auto& token : model.id_order()) {
      const auto it = uni.logprobs().find(token);
      if (it == uni.logprobs().end()) continue;
      pieces.push_back(json::array({encode_utf8(token), it->second}));
    }
    doc["pieces"] = std::move(pieces);
  }
  return doc.dump(2, ' ', false, json::error_handler_t::strict) + "\n";
}

ModelFile parse_model(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    corrupt(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) corrupt("top level must be an object");

  const json& version = require(doc, "format_version");
  if (!version.is_number_integer() || version.get<int>() != ModelFile::kFormatVersion) {
    corrupt("unsupported format_version");
  }
  const std::u32string marker = to_u32(require(doc, "marker"), "marker");
  if (marker.size() != 1) corrupt("marker must be exactly one code point");
  const std::u32string unk = to_u32(require(doc, "unk_token"), "unk_token");
  if (unk.empty()) corrupt("unk_token must be non-empty");
  const TrainingMetadata training =
      doc.contains("training") ? metadata_from_json(doc["training"]) : TrainingMetadata{};

  const json& kind = require(doc, "kind");
  if (kind == "bpe") {
    if (doc.contains("pieces")) corrupt("bpe model must not carry unigram pieces");
    const json& chars_json = require(doc, "characters");
    const json& merges_json = require(doc, "merges");
    if (!chars_json.is_array() || !merges_json.is_array()) {
      corrupt("characters and merges must be arrays");
    }
    CharInventory chars;
    for (const json& c : chars_json) {
      const std::u32string s = to_u32(c, "character");
      if (s.size() != 1) corrupt("characters must be single code points");
      if (!chars.insert(s[0]).second) corrupt("duplicate character");
    }
    std::vector<Merge> merges;
    merges.reserve(merges_json.size());
    for (const json& m : merges_json) {
      if (!m.is_array() || m.size() != 2) corrupt("each merge must be a [left, right] pair");
      merges.push_back(Merge{to_u32(m[0], "merge operand"), to_u32(m[1], "merge operand")});
    }
    return ModelFile{Model(BpeModel(marker[0], std::move(chars), std::move(merges), unk)),
                     training};
  }
  if (kind == "unigram") {
    if (doc.contains("merges")) corrupt("unigram model must not carry merges");
    const json& pieces_json = require(doc, "pieces");
    if (!pieces_json.is_array()) corrupt("pieces must be an array");
    std::map<std::u32string, double> logprobs;
    for (const json& p : pieces_json) {
      if (!p.is_array() || p.size() != 2 || !p[1].is_number()) {
        corrupt("each piece must be a [token, logprob] pair");
      }
      std::u32string token = to_u32(p[0], "piece");
      if (!logprobs.emplace(std::move(token), p[1].get<double>()).second) {
        corrupt("duplicate piece");
      }
    }
    UnigramModel model(marker[0], std::move(logprobs), unk);
    model.validate(Model(model).characters());
    return ModelFile{Model(std::move(model)), training};
  }
  corrupt("kind must be \"bpe\" or \"unigram\"");
}

void save_model(const ModelFile& file, const std::filesystem::path& path) {
  const std::string text = serialize_model(file);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

ModelFile load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return parse_model(os.str());
}

}  // namespace subword
