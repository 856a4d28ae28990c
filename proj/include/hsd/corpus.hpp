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

// Dataset ingestion (CSV or JSONL) and the canonical JSONL record format.

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hsd/csv.hpp"
#include "hsd/error.hpp"
#include "hsd/records.hpp"
#include "hsd/spans.hpp"
#include "hsd/tasks.hpp"
#include "hsd/text.hpp"
#include "json.hpp"

namespace hsd {

enum class DatasetName { kViHsd, kViHsdBinary, kViCtsd, kViHos, kPretrain };

inline std::string_view to_string(DatasetName n) {
  switch (n) {
    case DatasetName::kViHsd: return "vihsd";
    case DatasetName::kViHsdBinary: return "vihsd_binary";
    case DatasetName::kViCtsd: return "victsd";
    case DatasetName::kViHos: return "vihos";
    case DatasetName::kPretrain: return "pretrain";
  }
  return "";
}

inline std::optional<DatasetName> parse_dataset_name(std::string_view s) {
  for (auto n : {DatasetName::kViHsd, DatasetName::kViHsdBinary,
                 DatasetName::kViCtsd, DatasetName::kViHos,
                 DatasetName::kPretrain}) {
    if (s == to_string(n)) return n;
  }
  return std::nullopt;
}

enum class FileFormat { kCsv, kJsonl };

inline FileFormat format_for(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  return (ext == ".csv" || ext == ".CSV") ? FileFormat::kCsv
                                          : FileFormat::kJsonl;
}

// Logical field -> source column name. Empty means "not mapped".
struct ColumnMap {
  std::string id = "id";
  std::string text = "text";
  std::string label = "label";
  std::string spans = "spans";
  std::string score = "score";
  std::string topic = "topic";
  std::string split = "split";
  std::string annotator = "annotator";

  // Sets a field by logical name; returns false for unknown fields.
  bool set(std::string_view field, std::string column) {
    std::string* slot = nullptr;
    if (field == "id") slot = &id;
    if (field == "text") slot = &text;
    if (field == "label") slot = &label;
    if (field == "spans") slot = &spans;
    if (field == "score") slot = &score;
    if (field == "topic") slot = &topic;
    if (field == "split") slot = &split;
    if (field == "annotator") slot = &annotator;
    if (slot == nullptr) return false;
    *slot = std::move(column);
    return true;
  }
};

struct DatasetSchema {
  DatasetName name = DatasetName::kPretrain;
  std::optional<LabelSet> label_set;  // nullopt for span datasets
  bool requires_label = false;
  bool requires_spans = false;
  ColumnMap csv_columns;
  ColumnMap jsonl_columns;  // logical names unless overridden

  // Default CSV headers: ViHSD free_text/label_id, ViCTSD Comment/Toxicity,
  // ViHOS content/index_spans. Override with ColumnMap::set.
  static DatasetSchema for_name(DatasetName name) {
    DatasetSchema s;
    s.name = name;
    switch (name) {
      case DatasetName::kViHsd:
        s.label_set = LabelSet::kViHsd;
        s.requires_label = true;
        s.csv_columns.text = "free_text";
        s.csv_columns.label = "label_id";
        break;
      case DatasetName::kViHsdBinary:
        s.label_set = LabelSet::kBinary;
        s.requires_label = true;
        s.csv_columns.text = "free_text";
        s.csv_columns.label = "label_id";
        break;
      case DatasetName::kViCtsd:
        s.label_set = LabelSet::kViCtsd;
        s.requires_label = true;
        s.csv_columns.text = "Comment";
        s.csv_columns.label = "Toxicity";
        break;
      case DatasetName::kViHos:
        s.requires_spans = true;
        s.csv_columns.text = "content";
        s.csv_columns.spans = "index_spans";
        break;
      case DatasetName::kPretrain:
        s.label_set = LabelSet::kBinary;
        break;
    }
    return s;
  }

  static DatasetSchema for_task(Task task) {
    switch (task) {
      case Task::kHateSpeech: return for_name(DatasetName::kViHsd);
      case Task::kToxicSpeech: return for_name(DatasetName::kViCtsd);
      case Task::kHateSpans: return for_name(DatasetName::kViHos);
    }
    return for_name(DatasetName::kPretrain);
  }
};

// ---------------------------------------------------------------------------
// Field parsing shared by both formats.

namespace internal {

inline std::optional<ClassLabel> parse_label(const nlohmann::json& v,
                                             LabelSet set) {
  auto from_id = [&](long long id) -> std::optional<ClassLabel> {
    if (set == LabelSet::kBinary && id >= 0 && id <= 2) {
      // ViHSD ids (0..2) collapse onto the binary alphabet as well.
      return collapse_to_binary(ClassLabel(LabelSet::kViHsd, static_cast<int>(id)));
    }
    if (id < 0 || static_cast<std::size_t>(id) >= label_count(set)) {
      return std::nullopt;
    }
    return ClassLabel(set, static_cast<int>(id));
  };
  if (v.is_number_integer()) return from_id(v.get<long long>());
  if (!v.is_string()) return std::nullopt;
  const std::string s = v.get<std::string>();
  if (auto l = ClassLabel::from_name(set, s)) return l;
  if (set == LabelSet::kBinary) {
    if (auto l = ClassLabel::from_name(LabelSet::kViHsd, s)) {
      return collapse_to_binary(*l);
    }
  }
  if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos &&
      s.size() < 10) {
    return from_id(std::stoll(s));
  }
  return std::nullopt;
}

// Accepts a flat index list [0,1,2] or a pair list [[0,2]].
inline std::optional<SpanSet> parse_spans(const nlohmann::json& v) {
  if (!v.is_array()) return std::nullopt;
  std::vector<std::size_t> flat;
  std::vector<Span> pairs;
  for (const auto& e : v) {
    if (e.is_number_unsigned() || (e.is_number_integer() && e.get<long long>() >= 0)) {
      flat.push_back(e.get<std::size_t>());
    } else if (e.is_array() && e.size() == 2 && e[0].is_number_integer() &&
               e[1].is_number_integer() && e[0].get<long long>() >= 0 &&
               e[1].get<long long>() >= 0) {
      pairs.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>()});
    } else {
      return std::nullopt;
    }
  }
  if (!flat.empty() && !pairs.empty()) return std::nullopt;
  if (!pairs.empty()) return SpanSet::from_pairs(std::move(pairs));
  return SpanSet::from_indices(flat);
}

inline nlohmann::json spans_to_json(const SpanSet& spans) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Span& s : spans.spans()) arr.push_back({s.start, s.end});
  return arr;
}

}  // namespace internal

struct ReadStats {
  std::uint64_t rows = 0;
  std::uint64_t records = 0;
  std::uint64_t skipped = 0;
  std::map<Split, std::uint64_t> per_split;
  std::vector<std::string> errors;  // first few skip reasons

  std::uint64_t split_count(Split s) const {
    const auto it = per_split.find(s);
    return it == per_split.end() ? 0 : it->second;
  }
};

struct ReadOptions {
  bool strict = false;
};

// Streams LabeledRecords out of a CSV or JSONL file. Malformed rows are
// counted and skipped, or raise MalformedRecord in strict mode.
class DatasetReader {
 public:
  DatasetReader(std::filesystem::path path, DatasetSchema schema,
                ReadOptions options = {})
      : path_(std::move(path)),
        schema_(std::move(schema)),
        options_(options),
        format_(format_for(path_)) {
    open();
  }

  std::optional<LabeledRecord> next() {
    for (;;) {
      std::optional<nlohmann::json> row = next_row();
      if (!row) return std::nullopt;
      ++stats_.rows;
      try {
        LabeledRecord r = to_record(*row);
        ++stats_.records;
        ++stats_.per_split[r.split];
        return r;
      } catch (const Error& e) {
        if (options_.strict) {
          throw Error(ErrorCode::kMalformedRecord,
                      path_.string() + " row " + std::to_string(stats_.rows) +
                          ": " + e.what());
        }
        skip(e.what());
      }
    }
  }

  void rewind() {
    stats_ = ReadStats();
    open();
  }

  const ReadStats& stats() const { return stats_; }

 private:
  static constexpr std::size_t kMaxRecordedErrors = 20;

  void open() {
    in_ = std::make_unique<std::ifstream>(path_, std::ios::binary);
    if (!*in_) throw Error(ErrorCode::kIo, "cannot open " + path_.string());
    header_.clear();
    if (format_ == FileFormat::kCsv) {
      csv_ = std::make_unique<CsvReader>(*in_);
      const auto r = csv_->read_row(header_);
      if (r == CsvReader::Result::kEof) return;
      if (r == CsvReader::Result::kMalformed) {
        throw Error(ErrorCode::kSchemaMismatch, "unreadable CSV header");
      }
      if (!header_.empty() && header_[0].starts_with("\xEF\xBB\xBF")) {
        header_[0].erase(0, 3);
      }
      check_columns();
    }
  }

  void check_columns() const {
    auto require = [&](const std::string& col, std::string_view field) {
      for (const auto& h : header_) {
        if (h == col) return;
      }
      throw Error(ErrorCode::kSchemaMismatch,
                  path_.string() + " lacks column '" + col + "' for " +
                      std::string(field));
    };
    require(schema_.csv_columns.text, "text");
    if (schema_.requires_label) require(schema_.csv_columns.label, "label");
    if (schema_.requires_spans) require(schema_.csv_columns.spans, "spans");
  }

  void skip(const std::string& why) {
    ++stats_.skipped;
    if (stats_.errors.size() < kMaxRecordedErrors) {
      stats_.errors.push_back("row " + std::to_string(stats_.rows) + ": " +
                              why);
    }
  }

  // Produces one row as a JSON object keyed by source column name.
  std::optional<nlohmann::json> next_row() {
    if (format_ == FileFormat::kCsv) {
      if (header_.empty()) return std::nullopt;
      std::vector<std::string> fields;
      for (;;) {
        const auto r = csv_->read_row(fields);
        if (r == CsvReader::Result::kEof) return std::nullopt;
        if (r == CsvReader::Result::kMalformed || fields.size() != header_.size()) {
          if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
          ++stats_.rows;
          if (options_.strict) {
            throw Error(ErrorCode::kMalformedRecord,
                        path_.string() + " row " + std::to_string(stats_.rows) +
                            ": field count mismatch");
          }
          skip("field count mismatch");
          continue;
        }
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < fields.size(); ++i) {
          obj[header_[i]] = std::move(fields[i]);
        }
        return obj;
      }
    }
    std::string line;
    while (std::getline(*in_, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
      if (obj.is_discarded() || !obj.is_object()) {
        ++stats_.rows;
        if (options_.strict) {
          throw Error(ErrorCode::kMalformedRecord,
                      path_.string() + " row " + std::to_string(stats_.rows) +
                          ": invalid JSON");
        }
        skip("invalid JSON");
        continue;
      }
      return obj;
    }
    return std::nullopt;
  }

  LabeledRecord to_record(const nlohmann::json& row) const {
    const bool csv = format_ == FileFormat::kCsv;
    const ColumnMap& cols = csv ? schema_.csv_columns : schema_.jsonl_columns;
    auto field = [&](const std::string& col) -> const nlohmann::json* {
      if (col.empty()) return nullptr;
      const auto it = row.find(col);
      if (it == row.end() || it->is_null()) return nullptr;
      if (csv && it->is_string() && it->get_ref<const std::string&>().empty() &&
          col != cols.text) {
        return nullptr;
      }
      return &*it;
    };
    auto as_string = [](const nlohmann::json& v) {
      return v.is_string() ? v.get<std::string>() : v.dump();
    };

    LabeledRecord r;
    const nlohmann::json* text = field(cols.text);
    if (text == nullptr || !text->is_string()) {
      throw Error(ErrorCode::kMalformedRecord, "missing text");
    }
    r.text = CleanText(text->get<std::string>());
    if (const auto* id = field(cols.id)) {
      r.id = as_string(*id);
    } else {
      r.id = std::to_string(stats_.rows);
    }

    if (const auto* v = field(cols.label)) {
      if (!schema_.label_set) {
        throw Error(ErrorCode::kMalformedRecord, "label in span dataset");
      }
      r.label = internal::parse_label(*v, *schema_.label_set);
      if (!r.label) {
        throw Error(ErrorCode::kMalformedRecord,
                    "label " + as_string(*v) + " not in alphabet");
      }
    } else if (schema_.requires_label) {
      throw Error(ErrorCode::kMalformedRecord, "missing label");
    }

    if (const auto* v = field(cols.spans)) {
      nlohmann::json parsed = *v;
      if (v->is_string()) {
        parsed = nlohmann::json::parse(v->get<std::string>(), nullptr, false);
      }
      r.spans = internal::parse_spans(parsed);
      if (!r.spans) {
        throw Error(ErrorCode::kMalformedRecord,
                    "unparseable spans " + as_string(*v));
      }
      r.spans->validate(r.text.char_len());
    } else if (schema_.requires_spans) {
      throw Error(ErrorCode::kMalformedRecord, "missing spans");
    }

    if (const auto* v = field(cols.score)) {
      double score;
      if (v->is_number()) {
        score = v->get<double>();
      } else {
        try {
          score = std::stod(as_string(*v));
        } catch (const std::exception&) {
          throw Error(ErrorCode::kMalformedRecord, "bad score");
        }
      }
      if (!(score >= 0.0 && score <= 1.0)) {
        throw Error(ErrorCode::kMalformedRecord, "score outside [0,1]");
      }
      r.score = score;
    }
    if (const auto* v = field(cols.topic)) r.topic = as_string(*v);
    if (const auto* v = field(cols.split)) {
      const auto split = parse_split(as_string(*v));
      if (!split) throw Error(ErrorCode::kMalformedRecord, "unknown split");
      r.split = *split;
    }
    if (const auto* v = field(cols.annotator)) r.annotator = as_string(*v);
    return r;
  }

  std::filesystem::path path_;
  DatasetSchema schema_;
  ReadOptions options_;
  FileFormat format_;
  std::unique_ptr<std::ifstream> in_;
  std::unique_ptr<CsvReader> csv_;
  std::vector<std::string> header_;
  ReadStats stats_;
};

// ---------------------------------------------------------------------------
// JSONL output. Field order is fixed: id, text, label, spans, score, topic,
// split, annotator. Absent optional fields are omitted.

inline std::string to_jsonl_line(const LabeledRecord& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["text"] = r.text.text();
  if (r.label) j["label"] = r.label->name();
  if (r.spans) j["spans"] = internal::spans_to_json(*r.spans);
  if (r.score) j["score"] = *r.score;
  if (r.topic) j["topic"] = *r.topic;
  j["split"] = to_string(r.split);
  if (r.annotator) j["annotator"] = *r.annotator;
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::strict);
}

class JsonlWriter {
 public:
  explicit JsonlWriter(std::ostream& out) : out_(&out) {}
  explicit JsonlWriter(const std::filesystem::path& path,
                       std::ios::openmode mode = std::ios::trunc)
      : file_(std::make_unique<std::ofstream>(
            path, std::ios::binary | std::ios::out | mode)),
        out_(file_.get()) {
    if (!*file_) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  }

  void write(const LabeledRecord& r) {
    const std::string line = to_jsonl_line(r);
    *out_ << line << '\n';
    bytes_ += line.size() + 1;
    ++count_;
  }

  void flush() {
    out_->flush();
    if (!*out_) throw Error(ErrorCode::kIo, "write failed");
  }

  std::uint64_t count() const { return count_; }
  // Bytes written through this writer.
  std::uint64_t bytes() const { return bytes_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_;
  std::uint64_t count_ = 0;
  std::uint64_t bytes_ = 0;
};

template <RecordSource Source>
std::uint64_t write_jsonl(Source& records, const std::filesystem::path& path) {
  JsonlWriter writer(path);
  while (auto r = records.next()) writer.write(*r);
  writer.flush();
  return writer.count();
}

// ---------------------------------------------------------------------------
// T5 source/target pairs.

struct T5Pair {
  std::string source;
  std::string target;
};

inline T5Pair make_t5_pair(const LabeledRecord& r, Task task,
                           PrefixSpelling spelling = PrefixSpelling::kCanonical) {
  T5Pair p{encode_source(task, r.text, spelling), ""};
  if (task == Task::kHateSpans) {
    p.target = encode_target(task, r.spans.value_or(SpanSet()), r.text);
  } else {
    if (!r.label) {
      throw Error(ErrorCode::kLabelTaskMismatch, "record " + r.id + " has no label");
    }
    p.target = encode_target(task, *r.label, r.text);
  }
  return p;
}

enum class PairFormat { kTsv, kJsonl };

class PairWriter {
 public:
  PairWriter(std::ostream& out, PairFormat format) : out_(out), format_(format) {}

  void write(const T5Pair& p) {
    if (format_ == PairFormat::kTsv) {
      out_ << flatten(p.source) << '\t' << flatten(p.target) << '\n';
    } else {
      nlohmann::ordered_json j;
      j["source"] = p.source;
      j["target"] = p.target;
      out_ << j.dump() << '\n';
    }
    ++count_;
  }

  std::uint64_t count() const { return count_; }

 private:
  // TSV has no quoting; tabs and newlines become spaces.
  static std::string flatten(std::string s) {
    for (char& c : s) {
      if (c == '\t' || c == '\n' || c == '\r') c = ' ';
    }
    return s;
  }

  std::ostream& out_;
  PairFormat format_;
  std::uint64_t count_ = 0;
};

template <RecordSource Source>
std::uint64_t make_t5_pairs(Source& records, Task task, PairWriter& out,
                            PrefixSpelling spelling = PrefixSpelling::kCanonical) {
  while (auto r = records.next()) out.write(make_t5_pair(*r, task, spelling));
  return out.count();
}

}  // namespace hsd
