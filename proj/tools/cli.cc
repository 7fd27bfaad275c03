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

#include "cli.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "CLI11.hpp"
#include "json.hpp"
#include "subword/bpe.h"
#include "subword/corpus.h"
#include "subword/error.h"
#include "subword/model.h"
#include "subword/model_io.h"
#include "subword/morpho.h"
#include "subword/profile.h"
#include "subword/unicode.h"
#include "subword/unigram.h"

namespace subword::cli {
namespace {

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

char32_t parse_marker(const std::string& text) {
  const std::u32string decoded = decode_utf8(text);
  if (decoded.size() != 1) {
    throw Error(ErrorCode::kInvalidArgument, "--marker must be exactly one code point");
  }
  return decoded[0];
}

// Writes to the file named by `path`, or to `fallback` when path is empty
// or "-".
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw Error(ErrorCode::kIo, "cannot write " + path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }
  void finish() {
    stream_->flush();
    if (!*stream_) throw Error(ErrorCode::kIo, "write failed");
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

SplitMode mode_for(const std::string& flag, const ModelFile& file) {
  return parse_split_mode(flag.empty() ? file.training.split_mode : flag);
}

struct TrainArgs {
  std::string corpus;
  std::string output;
  std::string method = "unigram";
  std::size_t vocab_size = 20000;
  double alpha = 0.25;
  std::string marker = encode_utf8(kDefaultMarker);
  std::string mode = "whitespace";
  int em_iterations = 2;
  std::size_t max_token_len = 16;
  std::size_t max_seed = 0;
};

void cmd_train(const TrainArgs& args, std::ostream& err) {
  const char32_t marker = parse_marker(args.marker);
  const SplitMode mode = parse_split_mode(args.mode);
  const WordCounts counts = ingest_file(args.corpus, marker, mode);
  if (counts.empty()) throw Error(ErrorCode::kInvalidArgument, "corpus has no words");

  TrainingMetadata meta;
  meta.vocab_size = args.vocab_size;
  meta.split_mode = std::string(split_mode_name(mode));
  meta.corpus_digest = corpus_digest(counts);
  if (args.method == "bpe") {
    ModelFile file{Model(train_bpe(counts, args.vocab_size)), meta};
    save_model(file, args.output);
    err << "trained bpe: " << file.model.bpe()->merges().size() << " merges, "
        << file.model.bpe()->vocab().size() << " tokens\n";
    return;
  }
  UnigramTrainerOptions options;
  options.vocab_size = args.vocab_size;
  options.alpha = args.alpha;
  options.em_iterations = args.em_iterations;
  options.max_token_len = args.max_token_len;
  options.max_seed = args.max_seed;
  meta.alpha = args.alpha;
  meta.em_iterations = args.em_iterations;
  ModelFile file{Model(train_unigram(counts, options)), meta};
  save_model(file, args.output);
  err << "trained unigram: " << file.model.unigram()->size() << " tokens\n";
}

struct TokenizeArgs {
  std::string model;
  std::string input = "-";
  std::string output_kind = "tokens";
  std::string output;
  std::string mode;
};

void cmd_tokenize(const TokenizeArgs& args, std::istream& in, std::ostream& out) {
  const ModelFile file = load_model(args.model);
  const Model& model = file.model;
  const SplitMode mode = mode_for(args.mode, file);
  const bool ids = args.output_kind == "ids";

  std::unordered_map<std::u32string, std::size_t> id_of;
  if (ids) {
    const auto order = model.id_order();
    for (std::size_t i = 0; i < order.size(); ++i) id_of.emplace(order[i], i);
  }
  std::unordered_map<std::u32string, std::string> cache;
  auto render = [&](const std::u32string& word) -> const std::string& {
    auto it = cache.find(word);
    if (it != cache.end()) return it->second;
    const Segmentation seg = model.tokenize(word);
    std::string text;
    for (std::size_t i = 0; i < seg.tokens.size(); ++i) {
      if (i > 0) text.push_back(' ');
      if (ids) {
        const auto id = id_of.find(seg.tokens[i]);
        text += std::to_string(id == id_of.end() ? 0 : id->second);
      } else {
        text += encode_utf8(seg.tokens[i]);
      }
    }
    return cache.emplace(word, std::move(text)).first->second;
  };

  std::ifstream file_in;
  std::istream* source = &in;
  if (args.input != "-") {
    file_in.open(args.input, std::ios::binary);
    if (!file_in) throw Error(ErrorCode::kIo, "cannot open " + args.input);
    source = &file_in;
  }
  Output output(args.output, out);
  std::string line;
  std::size_t offset = 0;
  while (std::getline(*source, line)) {
    const std::u32string text = nfc(decode_utf8(line, offset));
    offset += line.size() + 1;
    bool first = true;
    for (const auto& word : split_words(text, model.marker(), mode)) {
      if (!first) output.get() << ' ';
      output.get() << render(word);
      first = false;
    }
    output.get() << '\n';
  }
  if (source->bad()) throw Error(ErrorCode::kIo, "read error on " + args.input);
  output.finish();
}

struct ProfileArgs {
  std::string model;
  std::string corpus;
  std::string output;
  std::string summary;
  std::string mode;
  double divisor = kDefaultDeadZoneDivisor;
};

void cmd_profile(const ProfileArgs& args, std::ostream& out) {
  const ModelFile file = load_model(args.model);
  const WordCounts counts =
      ingest_file(args.corpus, file.model.marker(), mode_for(args.mode, file));
  const VocabProfile profile = profile_vocab(file.model, counts, args.divisor);

  Output tsv(args.output, out);
  tsv.get() << "rank\ttoken\tlength\tfrequency\n";
  for (std::size_t i = 0; i < profile.rank_frequency.size(); ++i) {
    const auto& row = profile.rank_frequency[i];
    tsv.get() << (i + 1) << '\t' << encode_utf8(row.token) << '\t' << row.token.size()
              << '\t' << row.frequency << '\n';
  }
  tsv.finish();

  if (args.summary.empty()) return;
  nlohmann::json doc;
  doc["kind"] = std::string(model_kind_name(file.model.kind()));
  doc["vocabulary_size"] = profile.rank_frequency.size();
  doc["mean_token_length"] = profile.mean_token_length;
  nlohmann::json lengths = nlohmann::json::object();
  for (const auto& [len, n] : profile.length_histogram) lengths[std::to_string(len)] = n;
  doc["length_histogram"] = lengths;
  nlohmann::json bins = nlohmann::json::array();
  for (const auto& [bin, n] : profile.frequency_bins) {
    const std::uint64_t low = bin == 0 ? 0 : std::uint64_t{1} << (bin - 1);
    const std::uint64_t high = bin == 0 ? 1 : std::uint64_t{1} << bin;
    bins.push_back({{"min_frequency", low}, {"max_frequency_exclusive", high}, {"tokens", n}});
  }
  doc["frequency_bins"] = bins;
  doc["median_frequency"] = profile.median_frequency;
  doc["dead_zone_threshold"] = profile.dead_zone_threshold;
  doc["dead_zone_count"] = profile.dead_zone_count;
  doc["tokens_per_word"] = profile.tokens_per_word;
  doc["tokens_per_word_type"] = profile.tokens_per_word_type;
  doc["unknown_tokens"] = profile.unknown_tokens;
  Output summary(args.summary, out);
  summary.get() << doc.dump(2) << '\n';
  summary.finish();
}

struct DiffArgs {
  std::string model_a;
  std::string model_b;
  std::string corpus;
  std::string output;
  std::string direction = "both";
  std::string mode;
  std::size_t top = 20;
};

void cmd_diff(const DiffArgs& args, std::ostream& out) {
  const ModelFile a = load_model(args.model_a);
  const ModelFile b = load_model(args.model_b);
  if (a.model.marker() != b.model.marker()) {
    throw Error(ErrorCode::kInvalidData, "models use different boundary markers");
  }
  DiffDirection direction = DiffDirection::kBoth;
  if (args.direction == "a") {
    direction = DiffDirection::kMoreInA;
  } else if (args.direction == "b") {
    direction = DiffDirection::kMoreInB;
  }
  const WordCounts counts =
      ingest_file(args.corpus, a.model.marker(), mode_for(args.mode, a));
  Output tsv(args.output, out);
  tsv.get() << "token\tfrequency_a\tfrequency_b\tdifference\n";
  for (const auto& row : frequency_diff(a.model, b.model, counts, args.top, direction)) {
    tsv.get() << encode_utf8(row.token) << '\t' << row.frequency_a << '\t'
              << row.frequency_b << '\t' << row.difference << '\n';
  }
  tsv.finish();
}

struct EvalMorphArgs {
  std::string model;
  std::string references;
  std::string output;
};

void cmd_eval_morph(const EvalMorphArgs& args, std::ostream& out) {
  const ModelFile file = load_model(args.model);
  const auto refs = read_references_file(args.references);
  const BoundaryReport r = boundary_prf(file.model, refs);
  Output tsv(args.output, out);
  tsv.get() << "precision\trecall\tf1\tcandidate_boundaries\treference_boundaries\t"
               "matches\twords\tskipped_unknown\n";
  tsv.get() << format_double(r.precision) << '\t' << format_double(r.recall) << '\t'
            << format_double(r.f1) << '\t' << format_double(r.weighted_candidate_boundaries)
            << '\t' << format_double(r.weighted_reference_boundaries) << '\t'
            << format_double(r.weighted_matches) << '\t' << r.evaluated_words << '\t'
            << r.skipped_unknown << '\n';
  tsv.finish();
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return kUsage;
    case ErrorCode::kIo:
      return kIoError;
    case ErrorCode::kInfeasible:
      return kInfeasible;
    case ErrorCode::kCorruptModel:
      return kCorruptModel;
    case ErrorCode::kMarkerCollision:
      return kMarkerCollision;
    case ErrorCode::kInvalidUtf8:
    case ErrorCode::kInvalidData:
      return kInvalidInput;
  }
  return kInternal;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Subword tokenizer training, tokenization and analysis"};
  app.name("subword");
  app.require_subcommand(1);

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "Train a BPE or unigram-LM model");
  train_cmd->add_option("corpus", train.corpus, "Training text (.gz ok, - for stdin)")
      ->required();
  train_cmd->add_option("-o,--output", train.output, "Model file to write")->required();
  train_cmd->add_option("--method", train.method)
      ->check(CLI::IsMember({"bpe", "unigram"}))
      ->capture_default_str();
  train_cmd->add_option("--vocab-size", train.vocab_size)->capture_default_str();
  train_cmd->add_option("--alpha", train.alpha, "Unigram pruning fraction per round")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  train_cmd->add_option("--marker", train.marker, "Word-boundary marker")
      ->capture_default_str();
  train_cmd->add_option("--mode", train.mode)
      ->check(CLI::IsMember({"whitespace", "line"}))
      ->capture_default_str();
  train_cmd->add_option("--em-iterations", train.em_iterations)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train_cmd->add_option("--max-token-len", train.max_token_len)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train_cmd->add_option("--max-seed", train.max_seed, "Seed vocabulary cap (0: 100 x k)")
      ->capture_default_str();

  TokenizeArgs tok;
  auto* tok_cmd = app.add_subcommand("tokenize", "Tokenize text line by line");
  tok_cmd->add_option("model", tok.model)->required();
  tok_cmd->add_option("input", tok.input, "Input text (- for stdin)")->capture_default_str();
  tok_cmd->add_option("--output", tok.output_kind)
      ->check(CLI::IsMember({"tokens", "ids"}))
      ->capture_default_str();
  tok_cmd->add_option("-o,--output-file", tok.output);
  tok_cmd->add_option("--mode", tok.mode, "Overrides the model's split mode")
      ->check(CLI::IsMember({"whitespace", "line"}));

  ProfileArgs prof;
  auto* prof_cmd = app.add_subcommand("profile", "Vocabulary and corpus profile");
  prof_cmd->add_option("model", prof.model)->required();
  prof_cmd->add_option("corpus", prof.corpus)->required();
  prof_cmd->add_option("-o,--output", prof.output, "Rank-frequency TSV");
  prof_cmd->add_option("--summary", prof.summary, "Summary JSON");
  prof_cmd->add_option("--dead-zone-divisor", prof.divisor)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  prof_cmd->add_option("--mode", prof.mode)->check(CLI::IsMember({"whitespace", "line"}));

  DiffArgs diff;
  auto* diff_cmd = app.add_subcommand("diff", "Token frequency differences");
  diff_cmd->add_option("model_a", diff.model_a)->required();
  diff_cmd->add_option("model_b", diff.model_b)->required();
  diff_cmd->add_option("corpus", diff.corpus)->required();
  diff_cmd->add_option("-o,--output", diff.output);
  diff_cmd->add_option("--top", diff.top, "Rows to keep (0: all)")->capture_default_str();
  diff_cmd->add_option("--direction", diff.direction)
      ->check(CLI::IsMember({"both", "a", "b"}))
      ->capture_default_str();
  diff_cmd->add_option("--mode", diff.mode)->check(CLI::IsMember({"whitespace", "line"}));

  EvalMorphArgs morph;
  auto* morph_cmd =
      app.add_subcommand("eval-morph", "Boundary P/R/F1 against reference morphs");
  morph_cmd->add_option("model", morph.model)->required();
  morph_cmd->add_option("references", morph.references)->required();
  morph_cmd->add_option("-o,--output", morph.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*train_cmd) {
      cmd_train(train, err);
    } else if (*tok_cmd) {
      cmd_tokenize(tok, in, out);
    } else if (*prof_cmd) {
      cmd_profile(prof, out);
    } else if (*diff_cmd) {
      cmd_diff(diff, out);
    } else if (*morph_cmd) {
      cmd_eval_morph(morph, out);
    }
  } catch (const Error& e) {
    err << "subword: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "subword: internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}

}  // namespace subword::cli
