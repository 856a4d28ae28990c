// Copyright 2026 The hsdkit Authors
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

#pragma once

// The `hsd` command-line tool. run() is the whole program; main() only
// forwards to it, so tests can drive every subcommand in-process.
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hsd/hsd.hpp"
#include "json.hpp"

namespace hsd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

namespace internal {

struct Common {
  bool strict = false;
  bool quiet = false;
  std::uint64_t progress_every = 100000;
  std::vector<std::string> columns;  // field=column overrides
};

// Data goes to a file when given, otherwise to the caller's stdout.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
      if (!*file_) throw Error(ErrorCode::kIo, "cannot write " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& stream() { return *stream_; }
  void finish() {
    stream_->flush();
    if (!*stream_) throw Error(ErrorCode::kIo, "write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

class Progress {
 public:
  Progress(const Common& c, std::ostream& err, std::string what)
      : every_(c.quiet ? 0 : c.progress_every), err_(err), what_(std::move(what)) {}

  void tick(std::uint64_t n) {
    if (every_ == 0 || n < next_) return;
    err_ << "[hsd] " << what_ << ": " << n << " records\n";
    next_ = (n / every_ + 1) * every_;
  }

 private:
  std::uint64_t every_;
  std::uint64_t next_ = 0;
  std::ostream& err_;
  std::string what_;
};

inline void note(const Common& c, std::ostream& err, const std::string& msg) {
  if (!c.quiet) err << "[hsd] " << msg << '\n';
}

inline DatasetSchema make_schema(const std::string& name, const Common& c,
                                 std::optional<Task> task = std::nullopt) {
  DatasetSchema schema;
  if (!name.empty()) {
    const auto n = parse_dataset_name(name);
    if (!n) throw CLI::ValidationError("--schema", "unknown schema " + name);
    schema = DatasetSchema::for_name(*n);
  } else if (task) {
    schema = DatasetSchema::for_task(*task);
  } else {
    schema = DatasetSchema::for_name(DatasetName::kPretrain);
  }
  for (const std::string& kv : c.columns) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos ||
        !schema.csv_columns.set(kv.substr(0, eq), kv.substr(eq + 1)) ||
        !schema.jsonl_columns.set(kv.substr(0, eq), kv.substr(eq + 1))) {
      throw CLI::ValidationError("--column", "expected field=column, got " + kv);
    }
  }
  return schema;
}

inline void report_skips(const Common& c, std::ostream& err,
                         const std::string& path, const ReadStats& stats) {
  if (c.quiet) return;
  err << "[hsd] " << path << ": " << stats.records << " records";
  if (stats.skipped > 0) err << ", " << stats.skipped << " malformed rows skipped";
  err << " (train " << stats.split_count(Split::kTrain) << ", dev "
      << stats.split_count(Split::kDev) << ", test "
      << stats.split_count(Split::kTest) << ", unsplit "
      << stats.split_count(Split::kUnsplit) << ")\n";
  for (const std::string& e : stats.errors) err << "[hsd]   " << e << '\n';
}

inline Task require_task(const std::string& s) {
  const auto t = parse_task(s);
  if (!t) throw CLI::ValidationError("--task", "unknown task " + s);
  return *t;
}

// Reads a JSONL file line by line as JSON objects.
template <typename Fn>
void for_each_json_line(const std::string& path, const Common& c, std::ostream& err,
                        Fn&& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::string line;
  std::uint64_t lineno = 0;
  std::uint64_t skipped = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto j = nlohmann::json::parse(line, nullptr, false);
    try {
      if (j.is_discarded() || !j.is_object()) {
        throw Error(ErrorCode::kMalformedRecord, "invalid JSON");
      }
      fn(j, lineno);
    } catch (const Error& e) {
      if (c.strict) {
        throw Error(e.code(), path + " line " + std::to_string(lineno) + ": " +
                                  e.message());
      }
      ++skipped;
      if (!c.quiet) {
        err << "[hsd] " << path << " line " << lineno << " skipped: " << e.what()
            << '\n';
      }
    } catch (const nlohmann::json::exception& e) {
      if (c.strict) {
        throw Error(ErrorCode::kMalformedRecord,
                    path + " line " + std::to_string(lineno) + ": " + e.what());
      }
      ++skipped;
    }
  }
  if (skipped > 0) note(c, err, std::to_string(skipped) + " lines skipped in " + path);
}

inline std::string string_field(const nlohmann::json& j, const char* key,
                                bool required = true) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) {
    if (required) {
      throw Error(ErrorCode::kMalformedRecord, std::string("missing ") + key);
    }
    return {};
  }
  return it->is_string() ? it->get<std::string>() : it->dump();
}

// ---------------------------------------------------------------------------
// Subcommands.

struct NormalizeArgs {
  std::string input, output;
  NormalizeConfig config;
  bool keep_empty = false;
};

inline int run_normalize(const NormalizeArgs& a, const Common& c,
                         std::ostream& out, std::ostream& err) {
  Output o(a.output, out);
  JsonlWriter writer(o.stream());
  std::uint64_t dropped = 0;
  Progress progress(c, err, "normalize");
  for_each_json_line(a.input, c, err, [&](const nlohmann::json& j, std::uint64_t lineno) {
    RawComment raw;
    raw.id = string_field(j, "id", false);
    if (raw.id.empty()) raw.id = std::to_string(lineno);
    raw.body = string_field(j, "body", false);
    if (raw.body.empty()) raw.body = string_field(j, "text");
    if (j.contains("quoted_block") && j["quoted_block"].is_string()) {
      raw.quoted_block = j["quoted_block"].get<std::string>();
    }
    if (j.contains("topic") && j["topic"].is_string()) {
      raw.topic = j["topic"].get<std::string>();
    }
    LabeledRecord r;
    r.id = raw.id;
    r.text = normalize(raw, a.config);
    r.topic = raw.topic;
    if (!a.keep_empty && is_effectively_empty(r.text)) {
      ++dropped;
      return;
    }
    writer.write(r);
    progress.tick(writer.count());
  });
  o.finish();
  note(c, err, "normalized " + std::to_string(writer.count()) + " comments, dropped " +
                   std::to_string(dropped) + " empty");
  return kExitOk;
}

struct EncodeArgs {
  std::string task, input, output, schema, format = "tsv";
  bool table_spelling = false;
};

inline int run_encode(const EncodeArgs& a, const Common& c, std::ostream& out,
                      std::ostream& err) {
  const Task task = require_task(a.task);
  DatasetReader reader(a.input, make_schema(a.schema, c, task), {c.strict});
  Output o(a.output, out);
  PairWriter writer(o.stream(), a.format == "jsonl" ? PairFormat::kJsonl : PairFormat::kTsv);
  const auto spelling = a.table_spelling ? PrefixSpelling::kTablePrinted
                                         : PrefixSpelling::kCanonical;
  Progress progress(c, err, "encode");
  while (auto r = reader.next()) {
    writer.write(make_t5_pair(*r, task, spelling));
    progress.tick(writer.count());
  }
  o.finish();
  report_skips(c, err, a.input, reader.stats());
  return kExitOk;
}

struct DecodeArgs {
  std::string task, input, output, schema;
};

inline int run_decode(const DecodeArgs& a, const Common& c, std::ostream& out,
                      std::ostream& err) {
  const Task task = require_task(a.task);
  std::optional<LabelSet> set;
  if (is_classification(task)) set = make_schema(a.schema, c, task).label_set;
  Output o(a.output, out);
  std::map<ParseStatus, std::uint64_t> status_counts;
  for_each_json_line(a.input, c, err, [&](const nlohmann::json& j, std::uint64_t lineno) {
    const CleanText original(string_field(j, "text"));
    const std::string model_output = string_field(j, "output");
    const Prediction p = decode_prediction(task, model_output, original, set);
    nlohmann::ordered_json line;
    std::string id = string_field(j, "id", false);
    line["id"] = id.empty() ? std::to_string(lineno) : id;
    line["text"] = original.text();
    if (p.label) line["label"] = p.label->name();
    if (p.spans) line["spans"] = hsd::internal::spans_to_json(*p.spans);
    line["parse_status"] = to_string(p.parse_status);
    o.stream() << line.dump() << '\n';
    ++status_counts[p.parse_status];
  });
  o.finish();
  note(c, err, "decoded: " + std::to_string(status_counts[ParseStatus::kExact]) +
                   " exact, " + std::to_string(status_counts[ParseStatus::kRepaired]) +
                   " repaired, " + std::to_string(status_counts[ParseStatus::kFallback]) +
                   " fallback");
  return kExitOk;
}

struct EvalArgs {
  std::vector<std::string> tasks, golds, preds;
  std::string json_out;
  bool hsd_binary = false;
};

inline EvalReport eval_one(Task task, const std::string& gold_path,
                           const std::string& pred_path, bool hsd_binary,
                           const Common& c, std::ostream& err) {
  const DatasetName name = hsd_binary && task == Task::kHateSpeech
                               ? DatasetName::kViHsdBinary
                               : DatasetSchema::for_task(task).name;
  const DatasetSchema schema = make_schema(std::string(to_string(name)), c);
  DatasetSchema pred_schema = schema;
  pred_schema.requires_label = false;
  pred_schema.requires_spans = false;
  DatasetReader gold(gold_path, schema, {c.strict});
  DatasetReader pred(pred_path, pred_schema, {c.strict});

  std::vector<ClassLabel> gold_labels, pred_labels;
  std::vector<SpanSet> gold_spans, pred_spans;
  std::vector<CleanText> texts;
  for (;;) {
    auto g = gold.next();
    auto p = pred.next();
    if (!g && !p) break;
    if (!g || !p) {
      throw Error(ErrorCode::kTaskMismatch,
                  "gold and prediction files differ in record count");
    }
    if (g->id != p->id) {
      throw Error(ErrorCode::kTaskMismatch,
                  "record id mismatch: gold '" + g->id + "' vs pred '" + p->id + "'");
    }
    if (task == Task::kHateSpans) {
      SpanSet ps = p->spans.value_or(SpanSet());
      ps.validate(g->text.char_len());
      gold_spans.push_back(*g->spans);
      pred_spans.push_back(std::move(ps));
      texts.push_back(g->text);
    } else {
      if (!p->label) {
        throw Error(ErrorCode::kMalformedRecord, "prediction " + p->id + " has no label");
      }
      gold_labels.push_back(*g->label);
      pred_labels.push_back(*p->label);
    }
  }
  report_skips(c, err, gold_path, gold.stats());
  report_skips(c, err, pred_path, pred.stats());
  if (task == Task::kHateSpans) return span_eval(gold_spans, pred_spans, texts);
  EvalReport r = classification_eval(gold_labels, pred_labels);
  r.task = task;
  return r;
}

inline int run_eval(const EvalArgs& a, const Common& c, std::ostream& out,
                    std::ostream& err) {
  if (a.tasks.size() != a.golds.size() || a.tasks.size() != a.preds.size()) {
    throw CLI::ValidationError("eval", "--task, --gold and --pred must be given the same number of times");
  }
  std::vector<EvalReport> reports;
  for (std::size_t i = 0; i < a.tasks.size(); ++i) {
    reports.push_back(eval_one(require_task(a.tasks[i]), a.golds[i], a.preds[i],
                               a.hsd_binary, c, err));
  }
  std::optional<double> average;
  nlohmann::ordered_json j;
  if (reports.size() == kAllTasks.size()) {
    const SummaryReport s = summarize(reports);
    average = s.average_mf1;
    j = to_json(s);
  } else if (reports.size() == 1) {
    j = to_json(reports.front());
  } else {
    j["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) j["reports"].push_back(to_json(r));
  }
  print_table(out, reports, average);
  if (!a.json_out.empty()) {
    Output o(a.json_out, out);
    o.stream() << j.dump(2) << '\n';
    o.finish();
  }
  return kExitOk;
}

struct WeakLabelArgs {
  std::string input, output, train, train_schema = "vihsd", model, save_model;
  std::string annotator = "builtin", endpoint, checkpoint, schema;
  std::size_t batch_size = 256;
  std::size_t jobs = 1;
  long timeout_ms = 30000;
  bool resume = false;
  NaiveBayesConfig nb;
};

inline std::unique_ptr<Annotator> make_annotator(const WeakLabelArgs& a,
                                                 const Common& c, std::ostream& err) {
  if (a.annotator == "remote") {
    std::string endpoint = a.endpoint;
    if (endpoint.empty()) endpoint = RemoteAnnotator::endpoint_from_env().value_or("");
    if (endpoint.empty()) {
      throw CLI::ValidationError("--endpoint", std::string("remote annotator needs --endpoint or ") +
                                                   kAnnotatorUrlEnv);
    }
    RemoteOptions opts;
    opts.timeout = std::chrono::milliseconds(a.timeout_ms);
    return std::make_unique<RemoteAnnotator>(endpoint, opts);
  }
  if (a.annotator != "builtin") {
    throw CLI::ValidationError("--annotator", "expected builtin or remote");
  }
  BaselineModel model;
  if (!a.model.empty()) {
    std::ifstream in(a.model);
    if (!in) throw Error(ErrorCode::kIo, "cannot open " + a.model);
    const auto j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded()) throw Error(ErrorCode::kMalformedRecord, "model is not JSON");
    model = BaselineModel::from_json(j);
  } else {
    if (a.train.empty()) {
      throw CLI::ValidationError("--train", "builtin annotator needs --train or --model");
    }
    DatasetReader reader(a.train, make_schema(a.train_schema, c), {c.strict});
    std::vector<TrainingExample> examples;
    while (auto r = reader.next()) {
      if (!r->label) continue;
      examples.push_back({r->text, collapse_to_binary(*r->label)});
    }
    report_skips(c, err, a.train, reader.stats());
    model = BaselineModel::train(examples, a.nb);
    note(c, err, "trained naive Bayes on " + std::to_string(examples.size()) +
                     " examples, " + std::to_string(model.vocabulary_size()) + " n-grams");
  }
  if (!a.save_model.empty()) {
    std::ofstream out(a.save_model, std::ios::trunc);
    out << model.to_json().dump() << '\n';
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + a.save_model);
  }
  return std::make_unique<NaiveBayesAnnotator>(std::move(model));
}

inline int run_weaklabel(const WeakLabelArgs& a, const Common& c, std::ostream& err) {
  const auto annotator = make_annotator(a, c, err);
  DatasetSchema schema = make_schema(a.schema, c);
  schema.requires_label = false;
  DatasetReader reader(a.input, schema, {c.strict});
  Progress progress(c, err, "weaklabel");
  LabelOptions opts;
  opts.batch_size = a.batch_size;
  opts.jobs = a.jobs;
  if (!a.checkpoint.empty()) opts.checkpoint = a.checkpoint;
  opts.resume = a.resume;
  opts.on_progress = [&](std::uint64_t n) { progress.tick(n); };
  const LabelSummary s = label_corpus(reader, *annotator, a.output, opts);
  report_skips(c, err, a.input, reader.stats());
  note(c, err, "labeled " + std::to_string(s.records) + " records (" +
                   std::to_string(s.hate) + " HATE this run, resumed from " +
                   std::to_string(s.resumed_from) + ")");
  return kExitOk;
}

struct ResampleArgs {
  std::string input, output, condition, schema;
  std::uint64_t seed = 0;
};

inline int run_resample(const ResampleArgs& a, const Common& c, std::ostream& out,
                        std::ostream& err) {
  const auto condition = parse_ratio_condition(a.condition);
  if (!condition) {
    throw CLI::ValidationError("--condition", "expected full, balanced or hate_only");
  }
  DatasetReader reader(a.input, make_schema(a.schema, c), {c.strict});
  Output o(a.output, out);
  JsonlWriter writer(o.stream());
  const ResampleSummary s = resample(reader, *condition, a.seed, writer);
  o.finish();
  report_skips(c, err, a.input, reader.stats());
  note(c, err, std::string(to_string(*condition)) + ": " + std::to_string(s.hate_out) +
                   " hate + " + std::to_string(s.clean_out) + " clean = " +
                   std::to_string(s.total_out()) + " records");
  return kExitOk;
}

struct StatsArgs {
  std::string input, manifest, output, schema;
};

inline int run_stats(const StatsArgs& a, const Common& c, std::ostream& out,
                     std::ostream& err) {
  if (a.input.empty() && a.manifest.empty()) {
    throw CLI::ValidationError("stats", "give --input and/or --manifest");
  }
  StatsAccumulator acc;
  if (!a.input.empty()) {
    DatasetSchema schema = make_schema(a.schema, c);
    schema.requires_label = false;
    schema.requires_spans = false;
    DatasetReader reader(a.input, schema, {c.strict});
    while (auto r = reader.next()) acc.add(*r);
    report_skips(c, err, a.input, reader.stats());
  }
  if (!a.manifest.empty()) add_manifest(acc, a.manifest);
  Output o(a.output, out);
  o.stream() << to_json(acc.report()).dump(2) << '\n';
  o.finish();
  return kExitOk;
}

struct IobArgs {
  std::string to = "iob", input, output, schema;
};

inline int run_iob(const IobArgs& a, const Common& c, std::ostream& out,
                   std::ostream& err) {
  Output o(a.output, out);
  if (a.to == "iob") {
    DatasetReader reader(a.input, make_schema(a.schema, c, Task::kHateSpans), {c.strict});
    while (auto r = reader.next()) {
      const IobSequence seq = spans_to_iob(r->text, r->spans.value_or(SpanSet()));
      nlohmann::ordered_json j;
      j["id"] = r->id;
      j["text"] = r->text.text();
      j["tokens"] = nlohmann::ordered_json::array();
      j["tags"] = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < seq.tokens.size(); ++i) {
        j["tokens"].push_back(seq.tokens[i].text);
        j["tags"].push_back(to_string(seq.tags[i]));
      }
      o.stream() << j.dump() << '\n';
    }
    report_skips(c, err, a.input, reader.stats());
  } else if (a.to == "spans") {
    JsonlWriter writer(o.stream());
    std::uint64_t repaired = 0;
    for_each_json_line(a.input, c, err, [&](const nlohmann::json& j, std::uint64_t lineno) {
      LabeledRecord r;
      r.id = string_field(j, "id", false);
      if (r.id.empty()) r.id = std::to_string(lineno);
      r.text = CleanText(string_field(j, "text"));
      std::vector<IobTag> tags;
      const auto& t = j.at("tags");
      if (t.is_string()) {
        tags = parse_iob_tags(t.get<std::string>());
      } else {
        for (const auto& e : t) {
          const auto tag = parse_iob_tag(e.get<std::string>());
          if (!tag) throw Error(ErrorCode::kMalformedIob, "unknown tag " + e.dump());
          tags.push_back(*tag);
        }
      }
      IobDecodeResult d = iob_to_spans(r.text, tags);
      if (d.repaired > 0) {
        repaired += d.repaired;
        if (!c.quiet) {
          err << "[hsd] warning: " << r.id << ": I-T after O read as B-T ("
              << d.repaired << "x)\n";
        }
      }
      r.spans = std::move(d.spans);
      writer.write(r);
    });
    if (repaired > 0) note(c, err, std::to_string(repaired) + " IOB tags repaired");
  } else {
    throw CLI::ValidationError("--to", "expected iob or spans");
  }
  o.finish();
  return kExitOk;
}

// Accepts a path whose parent directory exists.
inline const CLI::Validator kWritablePath(
    [](std::string& path) -> std::string {
      if (path.empty() || path == "-") return {};
      const std::filesystem::path parent = std::filesystem::path(path).parent_path();
      if (!parent.empty() && !std::filesystem::is_directory(parent)) {
        return "directory " + parent.string() + " does not exist";
      }
      return {};
    },
    "PATH");

}  // namespace internal

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  using namespace internal;
  CLI::App app{"hsd: Vietnamese hate-speech data toolkit (normalize, encode, "
               "decode, eval, weaklabel, resample, stats, iob)"};
  app.set_config("--config", "", "TOML config file; command-line flags win");
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--strict", common.strict, "Fail on the first malformed row");
    sub->add_flag("--quiet,-q", common.quiet, "No progress or summaries on stderr");
    sub->add_option("--progress-every", common.progress_every,
                    "Progress line every N records (0 disables)");
    sub->add_option("--column", common.columns,
                    "Column override field=name (e.g. text=free_text)");
  };

  NormalizeArgs norm;
  auto* s_norm = app.add_subcommand("normalize", "Clean raw comments into JSONL records");
  s_norm->add_option("--input,-i", norm.input, "Raw comment JSONL")->required()->check(CLI::ExistingFile);
  s_norm->add_option("--output,-o", norm.output, "Output JSONL (default stdout)")->check(kWritablePath);
  s_norm->add_flag("--url-removal,!--no-url-removal", norm.config.url_removal, "Remove links");
  s_norm->add_flag("--username-removal,!--no-username-removal", norm.config.username_removal,
                   "Remove @mentions");
  s_norm->add_flag("--quote-removal,!--no-quote-removal", norm.config.quote_removal,
                   "Drop quoted blocks");
  s_norm->add_flag("--keep-empty", norm.keep_empty, "Keep comments that clean to nothing");
  add_common(s_norm);

  EncodeArgs enc;
  auto* s_enc = app.add_subcommand("encode", "Build T5 source/target pairs");
  s_enc->add_option("--task,-t", enc.task, "vihsd | victsd | vihos")->required();
  s_enc->add_option("--input,-i", enc.input, "Dataset (CSV or JSONL)")->required()->check(CLI::ExistingFile);
  s_enc->add_option("--output,-o", enc.output, "Output (default stdout)")->check(kWritablePath);
  s_enc->add_option("--schema", enc.schema, "Dataset schema (default per task)");
  s_enc->add_option("--format", enc.format, "tsv | jsonl")->check(CLI::IsMember({"tsv", "jsonl"}));
  s_enc->add_flag("--table-spelling", enc.table_spelling,
                  "Use the 'toxic-speech-detecion' prefix spelling");
  add_common(s_enc);

  DecodeArgs dec;
  auto* s_dec = app.add_subcommand("decode", "Parse model outputs into predictions");
  s_dec->add_option("--task,-t", dec.task, "vihsd | victsd | vihos")->required();
  s_dec->add_option("--input,-i", dec.input, "JSONL with id, text, output")->required()->check(CLI::ExistingFile);
  s_dec->add_option("--output,-o", dec.output, "Prediction JSONL (default stdout)")->check(kWritablePath);
  s_dec->add_option("--schema", dec.schema, "Label alphabet via schema (e.g. vihsd_binary)");
  add_common(s_dec);

  EvalArgs ev;
  auto* s_eval = app.add_subcommand("eval", "Accuracy / weighted F1 / macro F1");
  s_eval->add_option("--task,-t", ev.tasks, "Task per gold/pred pair (repeatable)")->required();
  s_eval->add_option("--gold,-g", ev.golds, "Gold file (repeatable)")->required()->check(CLI::ExistingFile);
  s_eval->add_option("--pred,-p", ev.preds, "Prediction file (repeatable)")->required()->check(CLI::ExistingFile);
  s_eval->add_option("--json", ev.json_out, "Also write the report as JSON")->check(kWritablePath);
  s_eval->add_flag("--hsd-binary", ev.hsd_binary, "Score vihsd with NONE/HATE labels");
  add_common(s_eval);

  WeakLabelArgs wl;
  auto* s_wl = app.add_subcommand("weaklabel", "Label a corpus with a hate classifier");
  s_wl->add_option("--input,-i", wl.input, "Normalized corpus")->required()->check(CLI::ExistingFile);
  s_wl->add_option("--output,-o", wl.output, "Labeled JSONL")->required()->check(kWritablePath);
  s_wl->add_option("--schema", wl.schema, "Corpus schema (default pretrain)");
  s_wl->add_option("--train", wl.train, "Training data for the builtin model")->check(CLI::ExistingFile);
  s_wl->add_option("--train-schema", wl.train_schema, "Training schema (labels collapse to binary)");
  s_wl->add_option("--model", wl.model, "Load a saved builtin model")->check(CLI::ExistingFile);
  s_wl->add_option("--save-model", wl.save_model, "Save the trained model")->check(kWritablePath);
  s_wl->add_option("--annotator", wl.annotator, "builtin | remote")->check(CLI::IsMember({"builtin", "remote"}));
  s_wl->add_option("--endpoint", wl.endpoint, std::string("Remote endpoint (default $") + kAnnotatorUrlEnv + ")");
  s_wl->add_option("--timeout-ms", wl.timeout_ms, "Remote request timeout");
  s_wl->add_option("--batch-size", wl.batch_size, "Records per batch")->check(CLI::PositiveNumber);
  s_wl->add_option("--jobs,-j", wl.jobs, "Batches in flight")->check(CLI::PositiveNumber);
  s_wl->add_option("--checkpoint", wl.checkpoint, "Checkpoint file")->check(kWritablePath);
  s_wl->add_flag("--resume", wl.resume, "Continue from --checkpoint");
  s_wl->add_option("--alpha", wl.nb.alpha, "Additive smoothing");
  s_wl->add_option("--ngram-min", wl.nb.min_n, "Smallest n-gram")->check(CLI::Range(1, 3));
  s_wl->add_option("--ngram-max", wl.nb.max_n, "Largest n-gram")->check(CLI::Range(1, 3));
  add_common(s_wl);

  ResampleArgs rs;
  auto* s_rs = app.add_subcommand("resample", "Resample by label ratio");
  s_rs->add_option("--input,-i", rs.input, "Labeled corpus")->required()->check(CLI::ExistingFile);
  s_rs->add_option("--output,-o", rs.output, "Output JSONL (default stdout)")->check(kWritablePath);
  s_rs->add_option("--condition,-c", rs.condition, "full | balanced | hate_only")->required();
  s_rs->add_option("--seed", rs.seed, "Sampling seed")->required();
  s_rs->add_option("--schema", rs.schema, "Corpus schema (default pretrain)");
  add_common(s_rs);

  StatsArgs st;
  auto* s_st = app.add_subcommand("stats", "Corpus statistics");
  s_st->add_option("--input,-i", st.input, "Records")->check(CLI::ExistingFile);
  s_st->add_option("--manifest,-m", st.manifest, "Topic manifest JSONL")->check(CLI::ExistingFile);
  s_st->add_option("--output,-o", st.output, "Output JSON (default stdout)")->check(kWritablePath);
  s_st->add_option("--schema", st.schema, "Record schema (default pretrain)");
  add_common(s_st);

  IobArgs iob;
  auto* s_iob = app.add_subcommand("iob", "Convert between spans and IOB tags");
  s_iob->add_option("--to", iob.to, "iob | spans")->check(CLI::IsMember({"iob", "spans"}));
  s_iob->add_option("--input,-i", iob.input, "Input file")->required()->check(CLI::ExistingFile);
  s_iob->add_option("--output,-o", iob.output, "Output JSONL (default stdout)")->check(kWritablePath);
  s_iob->add_option("--schema", iob.schema, "Span dataset schema (default vihos)");
  add_common(s_iob);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "hsd: " << e.what() << "\n";
    const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kExitUsage;
  }

  try {
    if (*s_norm) return run_normalize(norm, common, out, err);
    if (*s_enc) return run_encode(enc, common, out, err);
    if (*s_dec) return run_decode(dec, common, out, err);
    if (*s_eval) return run_eval(ev, common, out, err);
    if (*s_wl) return run_weaklabel(wl, common, err);
    if (*s_rs) return run_resample(rs, common, out, err);
    if (*s_st) return run_stats(st, common, out, err);
    if (*s_iob) return run_iob(iob, common, out, err);
  } catch (const CLI::ValidationError& e) {
    err << "hsd: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "hsd: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    err << "hsd: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace hsd::cli
