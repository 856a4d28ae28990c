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

// Corpus statistics: counts per label, topic and split, the hate fraction,
// and topic manifests (one line per topic with thread and comment counts).

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>

#include "hsd/error.hpp"
#include "hsd/records.hpp"
#include "hsd/tasks.hpp"
#include "json.hpp"

namespace hsd {

struct StatsReport {
  std::uint64_t total = 0;
  std::uint64_t threads = 0;  // known only from manifests
  std::uint64_t hate = 0;
  std::uint64_t labeled = 0;
  std::map<std::string, std::uint64_t> per_label;
  std::map<std::string, std::uint64_t> per_topic;
  std::map<std::string, std::uint64_t> per_split;

  // hate / labeled; undefined (and reported as 0) when nothing is labeled.
  bool hate_fraction_defined() const { return labeled > 0; }
  double hate_fraction() const {
    return labeled == 0 ? 0.0
                        : static_cast<double>(hate) / static_cast<double>(labeled);
  }
  // Rounded to 4 decimal places for reporting.
  double hate_fraction_rounded() const {
    return std::round(hate_fraction() * 1e4) / 1e4;
  }
};

class StatsAccumulator {
 public:
  void add(const LabeledRecord& r) {
    ++report_.total;
    if (r.label) {
      ++report_.per_label[std::string(r.label->name())];
      if (r.label->set() != LabelSet::kViCtsd) {
        ++report_.labeled;
        if (collapse_to_binary(*r.label) == labels::kBinaryHate) ++report_.hate;
      }
    }
    if (r.topic) ++report_.per_topic[*r.topic];
    ++report_.per_split[std::string(to_string(r.split))];
  }

  // One manifest line: a topic with its thread and comment counts, and
  // optionally how many of those comments are labeled HATE.
  void add_topic(const std::string& topic, std::uint64_t threads,
                 std::uint64_t comments, std::optional<std::uint64_t> hate) {
    report_.total += comments;
    report_.threads += threads;
    report_.per_topic[topic] += comments;
    if (hate) {
      if (*hate > comments) {
        throw Error(ErrorCode::kMalformedRecord,
                    "topic '" + topic + "' has more hate than comments");
      }
      report_.hate += *hate;
      report_.labeled += comments;
      report_.per_label["HATE"] += *hate;
      report_.per_label["NONE"] += comments - *hate;
    }
  }

  const StatsReport& report() const { return report_; }

 private:
  StatsReport report_;
};

template <RecordSource Source>
StatsReport corpus_stats(Source& source) {
  StatsAccumulator acc;
  while (auto r = source.next()) acc.add(*r);
  return acc.report();
}

// Manifest lines: {"topic": "...", "threads": N, "comments": M, "hate": K?}
inline void add_manifest(StatsAccumulator& acc, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::string line;
  std::uint64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto j = nlohmann::json::parse(line, nullptr, false);
    try {
      if (j.is_discarded()) throw std::runtime_error("invalid JSON");
      std::optional<std::uint64_t> hate;
      if (j.contains("hate")) hate = j.at("hate").get<std::uint64_t>();
      acc.add_topic(j.at("topic").get<std::string>(),
                    j.at("threads").get<std::uint64_t>(),
                    j.at("comments").get<std::uint64_t>(), hate);
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      throw Error(ErrorCode::kMalformedRecord, path.string() + " line " +
                                                   std::to_string(lineno) +
                                                   ": " + e.what());
    }
  }
}

inline nlohmann::ordered_json to_json(const StatsReport& r) {
  nlohmann::ordered_json j;
  j["total"] = r.total;
  j["threads"] = r.threads;
  j["labeled"] = r.labeled;
  j["hate"] = r.hate;
  j["hate_fraction"] = r.hate_fraction_rounded();
  j["hate_fraction_defined"] = r.hate_fraction_defined();
  j["per_label"] = r.per_label;
  j["per_topic"] = r.per_topic;
  j["per_split"] = r.per_split;
  return j;
}

}  // namespace hsd
