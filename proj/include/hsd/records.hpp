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

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hsd/spans.hpp"
#include "hsd/tasks.hpp"
#include "hsd/text.hpp"

namespace hsd {

enum class Split { kTrain, kDev, kTest, kUnsplit };

inline std::string_view to_string(Split s) {
  switch (s) {
    case Split::kTrain: return "train";
    case Split::kDev: return "dev";
    case Split::kTest: return "test";
    case Split::kUnsplit: return "unsplit";
  }
  return "unsplit";
}

inline std::optional<Split> parse_split(std::string_view s) {
  if (s == "train") return Split::kTrain;
  if (s == "dev" || s == "val" || s == "valid" || s == "validation") {
    return Split::kDev;
  }
  if (s == "test") return Split::kTest;
  if (s == "unsplit" || s.empty()) return Split::kUnsplit;
  return std::nullopt;
}

struct LabeledRecord {
  std::string id;
  CleanText text;
  std::optional<ClassLabel> label;
  std::optional<SpanSet> spans;
  std::optional<double> score;
  std::optional<std::string> topic;
  Split split = Split::kUnsplit;
  std::optional<std::string> annotator;

  friend bool operator==(const LabeledRecord&, const LabeledRecord&) = default;
};

// Pull-based record stream. next() returns nullopt once exhausted.
template <typename S>
concept RecordSource = requires(S s) {
  { s.next() } -> std::same_as<std::optional<LabeledRecord>>;
};

// A source that can be replayed from the start.
template <typename S>
concept RewindableSource = RecordSource<S> && requires(S s) { s.rewind(); };

template <typename S>
concept RecordSink = requires(S s, const LabeledRecord& r) { s.write(r); };

class VectorSource {
 public:
  explicit VectorSource(std::vector<LabeledRecord> records)
      : records_(std::move(records)) {}

  std::optional<LabeledRecord> next() {
    if (pos_ >= records_.size()) return std::nullopt;
    return records_[pos_++];
  }
  void rewind() { pos_ = 0; }

 private:
  std::vector<LabeledRecord> records_;
  std::size_t pos_ = 0;
};

class VectorSink {
 public:
  void write(const LabeledRecord& r) { records.push_back(r); }
  std::vector<LabeledRecord> records;
};

}  // namespace hsd
