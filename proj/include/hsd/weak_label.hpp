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

// Streaming weak labeling: records flow through an Annotator in batches and
// come out, in input order, carrying label, score and annotator id. Output is
// committed batch by batch so an interrupted run can resume where the last
// checkpoint left off.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsd/annotator.hpp"
#include "hsd/corpus.hpp"
#include "hsd/error.hpp"
#include "hsd/records.hpp"
#include "json.hpp"

namespace hsd {

struct LabelOptions {
  std::size_t batch_size = 256;
  std::size_t jobs = 1;  // batches in flight at once
  std::optional<std::filesystem::path> checkpoint;
  bool resume = false;
  // Called after each committed batch with the running record count.
  std::function<void(std::uint64_t)> on_progress;
};

struct LabelSummary {
  std::uint64_t records = 0;  // total committed, including resumed prefix
  std::uint64_t hate = 0;     // HATE labels assigned in this run
  std::uint64_t resumed_from = 0;
  std::string last_id;
};

struct Checkpoint {
  std::uint64_t committed_records = 0;
  std::string last_id;
  std::uint64_t output_bytes = 0;
  std::string annotator;

  static std::optional<Checkpoint> load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    const auto j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded()) {
      throw Error(ErrorCode::kIo, "corrupt checkpoint " + path.string());
    }
    Checkpoint c;
    c.committed_records = j.value("committed_records", std::uint64_t{0});
    c.last_id = j.value("last_id", std::string());
    c.output_bytes = j.value("output_bytes", std::uint64_t{0});
    c.annotator = j.value("annotator", std::string());
    return c;
  }

  // Written to a sibling file and renamed into place.
  void save(const std::filesystem::path& path) const {
    nlohmann::ordered_json j;
    j["committed_records"] = committed_records;
    j["last_id"] = last_id;
    j["output_bytes"] = output_bytes;
    j["annotator"] = annotator;
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      out << j.dump() << '\n';
      if (!out) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
  }
};

namespace internal {

inline std::vector<LabeledRecord> read_batch(auto& source, std::size_t n) {
  std::vector<LabeledRecord> batch;
  batch.reserve(n);
  while (batch.size() < n) {
    auto r = source.next();
    if (!r) break;
    batch.push_back(std::move(*r));
  }
  return batch;
}

inline std::vector<Annotation> annotate(const Annotator& annotator,
                                        const std::vector<LabeledRecord>& batch) {
  std::vector<CleanText> texts;
  texts.reserve(batch.size());
  for (const LabeledRecord& r : batch) texts.push_back(r.text);
  std::vector<Annotation> out = annotator.classify_batch(texts);
  if (out.size() != batch.size()) {
    throw Error(ErrorCode::kMalformedRecord,
                "annotator returned " + std::to_string(out.size()) +
                    " results for " + std::to_string(batch.size()) + " texts");
  }
  return out;
}

}  // namespace internal

// Core loop over any source and sink. `on_commit(last_record)` runs after each
// batch is written. Up to options.jobs batches are annotated concurrently and
// emitted in input order, so output does not depend on jobs.
template <RecordSource Source, RecordSink Sink, typename OnCommit>
LabelSummary label_stream(Source& source, const Annotator& annotator,
                          Sink& sink, const LabelOptions& options,
                          OnCommit&& on_commit) {
  if (options.batch_size == 0) {
    throw Error(ErrorCode::kEmptyInput, "batch size must be positive");
  }
  const std::size_t jobs = options.jobs == 0 ? 1 : options.jobs;
  const std::string annotator_id = annotator.id();
  LabelSummary summary;
  for (;;) {
    std::vector<std::vector<LabeledRecord>> group;
    for (std::size_t j = 0; j < jobs; ++j) {
      auto batch = internal::read_batch(source, options.batch_size);
      if (batch.empty()) break;
      group.push_back(std::move(batch));
    }
    if (group.empty()) break;

    std::vector<std::future<std::vector<Annotation>>> pending;
    if (group.size() > 1) {
      for (const auto& batch : group) {
        pending.push_back(std::async(std::launch::async, [&annotator, &batch] {
          return internal::annotate(annotator, batch);
        }));
      }
    }
    for (std::size_t k = 0; k < group.size(); ++k) {
      std::vector<Annotation> ann = pending.empty()
                                        ? internal::annotate(annotator, group[k])
                                        : pending[k].get();
      for (std::size_t i = 0; i < group[k].size(); ++i) {
        LabeledRecord& r = group[k][i];
        r.label = ann[i].label;
        r.score = ann[i].score;
        r.annotator = annotator_id;
        if (ann[i].label == labels::kBinaryHate) ++summary.hate;
        sink.write(r);
      }
      summary.records += group[k].size();
      summary.last_id = group[k].back().id;
      on_commit(summary);
      if (options.on_progress) options.on_progress(summary.records);
    }
  }
  return summary;
}

// Labels `source` into a JSONL file. With a checkpoint path, progress is
// committed after every batch; with resume set, a previous partial run is
// continued from its checkpoint and yields the same file as an uninterrupted
// run. On annotator failure the error is rethrown as RemoteUnavailable naming
// the last committed record.
template <RecordSource Source>
LabelSummary label_corpus(Source& source, const Annotator& annotator,
                          const std::filesystem::path& output,
                          const LabelOptions& options = {}) {
  Checkpoint start;
  if (options.resume) {
    if (!options.checkpoint) {
      throw Error(ErrorCode::kIo, "resume requires a checkpoint path");
    }
    if (auto c = Checkpoint::load(*options.checkpoint)) start = *c;
  }
  if (start.committed_records > 0) {
    std::filesystem::resize_file(output, start.output_bytes);
    for (std::uint64_t i = 0; i < start.committed_records; ++i) {
      if (!source.next()) {
        throw Error(ErrorCode::kIo, "input shorter than checkpoint");
      }
    }
  }
  JsonlWriter writer(output, start.committed_records > 0 ? std::ios::app
                                                         : std::ios::trunc);
  Checkpoint current = start;
  current.annotator = annotator.id();

  auto commit = [&](const LabelSummary& s) {
    writer.flush();
    current.committed_records = start.committed_records + s.records;
    current.last_id = s.last_id;
    current.output_bytes = start.output_bytes + writer.bytes();
    if (options.checkpoint) current.save(*options.checkpoint);
  };

  LabelSummary summary;
  try {
    summary = label_stream(source, annotator, writer, options, commit);
  } catch (const Error& e) {
    writer.flush();
    const std::string where =
        " (committed " + std::to_string(current.committed_records) +
        " records, last id '" + current.last_id + "')";
    if (e.code() == ErrorCode::kRemoteUnavailable) {
      throw Error(ErrorCode::kRemoteUnavailable, e.message() + where);
    }
    throw;
  }
  writer.flush();
  summary.resumed_from = start.committed_records;
  summary.records += start.committed_records;
  if (summary.last_id.empty()) summary.last_id = start.last_id;
  return summary;
}

}  // namespace hsd
