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

// Accuracy, weighted F1 and macro F1 for the classification tasks, the
// character-mask evaluation for hate spans, and the cross-task average MF1.
//
// Zero-division convention: precision, recall or F1 with a zero denominator is
// 0, and such a class still counts toward the macro mean. Every class of the
// gold alphabet is scored, whether or not it occurs in the data.

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hsd/error.hpp"
#include "hsd/spans.hpp"
#include "hsd/tasks.hpp"
#include "hsd/text.hpp"
#include "json.hpp"

namespace hsd {

class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(std::size_t classes)
      : classes_(classes), counts_(classes * classes, 0) {}

  void add(std::size_t gold, std::size_t pred, std::uint64_t n = 1) {
    counts_[gold * classes_ + pred] += n;
  }

  // Shards may be counted independently and merged in any order.
  void merge(const ConfusionMatrix& other) {
    if (other.classes_ != classes_) {
      throw Error(ErrorCode::kTaskMismatch, "confusion matrix shape differs");
    }
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      counts_[i] += other.counts_[i];
    }
  }

  std::uint64_t at(std::size_t gold, std::size_t pred) const {
    return counts_[gold * classes_ + pred];
  }
  std::size_t classes() const { return classes_; }

  std::uint64_t total() const {
    std::uint64_t n = 0;
    for (auto c : counts_) n += c;
    return n;
  }

 private:
  std::size_t classes_;
  std::vector<std::uint64_t> counts_;
};

struct ClassScore {
  std::string label;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  std::uint64_t support = 0;
};

struct EvalReport {
  Task task = Task::kHateSpeech;
  double accuracy = 0;
  double weighted_f1 = 0;
  double macro_f1 = 0;
  std::vector<ClassScore> per_class;
  std::uint64_t n_examples = 0;
};

struct SummaryReport {
  std::vector<EvalReport> reports;
  double average_mf1 = 0;
};

namespace internal {

inline double safe_div(double num, double den) {
  return den == 0 ? 0.0 : num / den;
}

}  // namespace internal

inline EvalReport report_from_confusion(
    Task task, const ConfusionMatrix& cm,
    std::span<const std::string_view> class_names, std::uint64_t n_examples) {
  const std::size_t k = cm.classes();
  EvalReport report;
  report.task = task;
  report.n_examples = n_examples;
  const auto total = static_cast<double>(cm.total());
  double correct = 0;
  double f1_sum = 0;
  double weighted = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::uint64_t tp = cm.at(c, c);
    std::uint64_t gold = 0;
    std::uint64_t pred = 0;
    for (std::size_t j = 0; j < k; ++j) {
      gold += cm.at(c, j);
      pred += cm.at(j, c);
    }
    ClassScore s{.label = std::string(class_names[c]), .support = gold};
    s.precision = internal::safe_div(static_cast<double>(tp),
                                     static_cast<double>(pred));
    s.recall = internal::safe_div(static_cast<double>(tp),
                                  static_cast<double>(gold));
    s.f1 = internal::safe_div(2 * s.precision * s.recall,
                              s.precision + s.recall);
    correct += static_cast<double>(tp);
    f1_sum += s.f1;
    weighted += s.f1 * static_cast<double>(gold);
    report.per_class.push_back(std::move(s));
  }
  report.accuracy = internal::safe_div(correct, total);
  report.macro_f1 = f1_sum / static_cast<double>(k);
  report.weighted_f1 = internal::safe_div(weighted, total);
  return report;
}

inline EvalReport classification_eval(std::span<const ClassLabel> golds,
                                      std::span<const ClassLabel> preds) {
  if (golds.empty()) throw Error(ErrorCode::kEmptyInput, "no examples");
  if (golds.size() != preds.size()) {
    throw Error(ErrorCode::kTaskMismatch,
                std::to_string(golds.size()) + " golds vs " +
                    std::to_string(preds.size()) + " predictions");
  }
  const LabelSet set = golds.front().set();
  ConfusionMatrix cm(label_count(set));
  for (std::size_t i = 0; i < golds.size(); ++i) {
    if (golds[i].set() != set || preds[i].set() != set) {
      throw Error(ErrorCode::kTaskMismatch,
                  "mixed label alphabets at example " + std::to_string(i));
    }
    cm.add(static_cast<std::size_t>(golds[i].id()),
           static_cast<std::size_t>(preds[i].id()));
  }
  return report_from_confusion(task_for(set), cm, label_names(set),
                               golds.size());
}

// Character-level confusion counts for one text.
inline void count_span_chars(ConfusionMatrix& cm, const SpanSet& gold,
                             const SpanSet& pred, const CleanText& text) {
  const BinaryMask g = spans_to_mask(gold, text);
  const BinaryMask p = spans_to_mask(pred, text);
  for (std::size_t i = 0; i < g.size(); ++i) cm.add(g.bits[i], p.bits[i]);
}

inline constexpr std::array<std::string_view, 2> kMaskClassNames = {"0", "1"};

// Masks of all texts are concatenated and scored as one binary stream.
inline EvalReport span_eval(std::span<const SpanSet> golds,
                            std::span<const SpanSet> preds,
                            std::span<const CleanText> texts) {
  if (golds.empty()) throw Error(ErrorCode::kEmptyInput, "no examples");
  if (golds.size() != preds.size() || golds.size() != texts.size()) {
    throw Error(ErrorCode::kTaskMismatch, "gold/pred/text counts differ");
  }
  ConfusionMatrix cm(2);
  for (std::size_t i = 0; i < golds.size(); ++i) {
    count_span_chars(cm, golds[i], preds[i], texts[i]);
  }
  return report_from_confusion(Task::kHateSpans, cm, kMaskClassNames,
                               golds.size());
}

inline double average_mf1(std::span<const EvalReport> reports) {
  double sum = 0;
  for (Task t : kAllTasks) {
    int seen = 0;
    for (const EvalReport& r : reports) {
      if (r.task == t) {
        ++seen;
        sum += r.macro_f1;
      }
    }
    if (seen != 1) {
      throw Error(ErrorCode::kMissingTask,
                  "need exactly one report for " +
                      std::string(task_alias(t)) + ", got " +
                      std::to_string(seen));
    }
  }
  if (reports.size() != kAllTasks.size()) {
    throw Error(ErrorCode::kMissingTask, "expected three reports");
  }
  return sum / static_cast<double>(kAllTasks.size());
}

inline SummaryReport summarize(std::vector<EvalReport> reports) {
  SummaryReport s;
  s.average_mf1 = average_mf1(reports);
  s.reports = std::move(reports);
  return s;
}

// ---------------------------------------------------------------------------
// Serialization.

inline nlohmann::ordered_json to_json(const EvalReport& r) {
  nlohmann::ordered_json j;
  j["task"] = task_alias(r.task);
  j["accuracy"] = r.accuracy;
  j["weighted_f1"] = r.weighted_f1;
  j["macro_f1"] = r.macro_f1;
  nlohmann::ordered_json per = nlohmann::ordered_json::object();
  for (const ClassScore& c : r.per_class) {
    per[c.label] = {{"precision", c.precision},
                    {"recall", c.recall},
                    {"f1", c.f1},
                    {"support", c.support}};
  }
  j["per_class"] = std::move(per);
  j["n_examples"] = r.n_examples;
  return j;
}

inline nlohmann::ordered_json to_json(const SummaryReport& s) {
  nlohmann::ordered_json j;
  j["average_mf1"] = s.average_mf1;
  j["reports"] = nlohmann::ordered_json::array();
  for (const EvalReport& r : s.reports) j["reports"].push_back(to_json(r));
  return j;
}

// Fixed-width table: Average MF1, then Acc/WF1/MF1 for hate speech, toxic
// speech and hate spans. Missing cells print as "-".
inline void print_table(std::ostream& os, std::span<const EvalReport> reports,
                        std::optional<double> average = std::nullopt) {
  auto cell = [](std::optional<double> v) {
    char buf[16];
    if (!v) return std::string("     -");
    std::snprintf(buf, sizeof(buf), "%6.4f", *v);
    return std::string(buf);
  };
  os << "Average MF1 | HSD Acc  WF1    MF1    | TSD Acc  WF1    MF1    "
        "| HOS Acc  WF1    MF1\n";
  os << "     " << cell(average) << " |";
  for (Task t : kAllTasks) {
    const EvalReport* found = nullptr;
    for (const EvalReport& r : reports) {
      if (r.task == t) found = &r;
    }
    os << "  " << cell(found ? std::optional(found->accuracy) : std::nullopt)
       << " " << cell(found ? std::optional(found->weighted_f1) : std::nullopt)
       << " " << cell(found ? std::optional(found->macro_f1) : std::nullopt)
       << (t == Task::kHateSpans ? "\n" : " |");
  }
}

}  // namespace hsd
