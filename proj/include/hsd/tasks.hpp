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

// Text-to-text task encoding: task prefixes, label alphabets, target
// construction and parsing of (untrusted) model output.

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "hsd/error.hpp"
#include "hsd/spans.hpp"
#include "hsd/text.hpp"

namespace hsd {

enum class Task { kHateSpeech, kToxicSpeech, kHateSpans };

inline constexpr std::array<Task, 3> kAllTasks = {
    Task::kHateSpeech, Task::kToxicSpeech, Task::kHateSpans};

// kTablePrinted reproduces the misspelled "toxic-speech-detecion" prefix found
// in published sample tables, for byte-exact replication of those rows.
enum class PrefixSpelling { kCanonical, kTablePrinted };

inline std::string_view task_prefix(
    Task task, PrefixSpelling spelling = PrefixSpelling::kCanonical) {
  switch (task) {
    case Task::kHateSpeech: return "hate-speech-detection";
    case Task::kToxicSpeech:
      return spelling == PrefixSpelling::kCanonical ? "toxic-speech-detection"
                                                    : "toxic-speech-detecion";
    case Task::kHateSpans: return "hate-spans-detection";
  }
  return "";
}

// Dataset aliases used on the command line.
inline std::string_view task_alias(Task task) {
  switch (task) {
    case Task::kHateSpeech: return "vihsd";
    case Task::kToxicSpeech: return "victsd";
    case Task::kHateSpans: return "vihos";
  }
  return "";
}

inline std::optional<Task> parse_task(std::string_view s) {
  for (Task t : kAllTasks) {
    if (s == task_alias(t) || s == task_prefix(t)) return t;
  }
  return std::nullopt;
}

inline bool is_classification(Task task) { return task != Task::kHateSpans; }

// ---------------------------------------------------------------------------
// Label alphabets.

enum class LabelSet {
  kViHsd,   // CLEAN=0, OFFENSIVE=1, HATE=2
  kViCtsd,  // NONE=0, TOXIC=1
  kBinary,  // NONE=0, HATE=1
};

inline std::span<const std::string_view> label_names(LabelSet set) {
  static constexpr std::array<std::string_view, 3> kViHsd = {
      "CLEAN", "OFFENSIVE", "HATE"};
  static constexpr std::array<std::string_view, 2> kViCtsd = {"NONE", "TOXIC"};
  static constexpr std::array<std::string_view, 2> kBinary = {"NONE", "HATE"};
  switch (set) {
    case LabelSet::kViHsd: return kViHsd;
    case LabelSet::kViCtsd: return kViCtsd;
    case LabelSet::kBinary: return kBinary;
  }
  return {};
}

inline std::size_t label_count(LabelSet set) { return label_names(set).size(); }

// Default alphabet for a classification task.
inline LabelSet default_label_set(Task task) {
  return task == Task::kToxicSpeech ? LabelSet::kViCtsd : LabelSet::kViHsd;
}

inline bool label_set_fits(Task task, LabelSet set) {
  switch (task) {
    case Task::kHateSpeech:
      return set == LabelSet::kViHsd || set == LabelSet::kBinary;
    case Task::kToxicSpeech: return set == LabelSet::kViCtsd;
    case Task::kHateSpans: return false;
  }
  return false;
}

inline Task task_for(LabelSet set) {
  return set == LabelSet::kViCtsd ? Task::kToxicSpeech : Task::kHateSpeech;
}

class ClassLabel {
 public:
  ClassLabel(LabelSet set, int id) : set_(set), id_(id) {
    if (id < 0 || static_cast<std::size_t>(id) >= label_count(set)) {
      throw Error(ErrorCode::kLabelTaskMismatch,
                  "label id " + std::to_string(id) + " outside alphabet");
    }
  }

  static std::optional<ClassLabel> from_name(LabelSet set,
                                             std::string_view name) {
    const auto names = label_names(set);
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return ClassLabel(set, static_cast<int>(it - names.begin()));
  }

  LabelSet set() const { return set_; }
  int id() const { return id_; }
  std::string_view name() const {
    return label_names(set_)[static_cast<std::size_t>(id_)];
  }

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;

 private:
  LabelSet set_;
  int id_;
};

namespace labels {
inline const ClassLabel kClean{LabelSet::kViHsd, 0};
inline const ClassLabel kOffensive{LabelSet::kViHsd, 1};
inline const ClassLabel kHate{LabelSet::kViHsd, 2};
inline const ClassLabel kCtsdNone{LabelSet::kViCtsd, 0};
inline const ClassLabel kToxic{LabelSet::kViCtsd, 1};
inline const ClassLabel kBinaryNone{LabelSet::kBinary, 0};
inline const ClassLabel kBinaryHate{LabelSet::kBinary, 1};
}  // namespace labels

// CLEAN -> NONE; OFFENSIVE, HATE -> HATE. Binary labels pass through.
inline ClassLabel collapse_to_binary(const ClassLabel& label) {
  switch (label.set()) {
    case LabelSet::kViHsd:
      return label.id() == 0 ? labels::kBinaryNone : labels::kBinaryHate;
    case LabelSet::kBinary:
      return label;
    case LabelSet::kViCtsd:
      break;
  }
  throw Error(ErrorCode::kLabelTaskMismatch,
              "only ViHSD labels collapse to binary, got " +
                  std::string(label.name()));
}

// Non-harmful class used when classifier output cannot be parsed.
inline ClassLabel fallback_label(LabelSet set) { return ClassLabel(set, 0); }

// ---------------------------------------------------------------------------
// Source / target strings.

inline std::string encode_source(
    Task task, const CleanText& text,
    PrefixSpelling spelling = PrefixSpelling::kCanonical) {
  std::string out(task_prefix(task, spelling));
  out += ": ";
  out += text.text();
  return out;
}

using Gold = std::variant<ClassLabel, SpanSet>;

inline std::string encode_target(Task task, const Gold& gold,
                                 const CleanText& original) {
  if (const auto* label = std::get_if<ClassLabel>(&gold)) {
    if (!label_set_fits(task, label->set())) {
      throw Error(ErrorCode::kLabelTaskMismatch,
                  "label " + std::string(label->name()) + " for task " +
                      std::string(task_alias(task)));
    }
    return std::string(label->name());
  }
  if (task != Task::kHateSpans) {
    throw Error(ErrorCode::kLabelTaskMismatch,
                "spans given for classification task " +
                    std::string(task_alias(task)));
  }
  return encode_tags(original, std::get<SpanSet>(gold)).text;
}

enum class ParseStatus { kExact, kRepaired, kFallback };

inline std::string_view to_string(ParseStatus s) {
  switch (s) {
    case ParseStatus::kExact: return "exact";
    case ParseStatus::kRepaired: return "repaired";
    case ParseStatus::kFallback: return "fallback";
  }
  return "";
}

struct Prediction {
  Task task = Task::kHateSpeech;
  std::optional<ClassLabel> label;
  std::optional<SpanSet> spans;
  ParseStatus parse_status = ParseStatus::kExact;
};

namespace internal {

inline std::string_view trim(std::string_view s) {
  auto is_ws = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
  };
  while (!s.empty() && is_ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_ws(s.back())) s.remove_suffix(1);
  return s;
}

inline bool iequals_ascii(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::toupper(static_cast<unsigned char>(x)) ==
                  std::toupper(static_cast<unsigned char>(y));
         });
}

}  // namespace internal

// Total: any output string yields a Prediction.
inline Prediction decode_prediction(Task task, std::string_view model_output,
                                    const CleanText& original,
                                    std::optional<LabelSet> label_set = {}) {
  Prediction p;
  p.task = task;
  if (!is_classification(task)) {
    DecodeResult r = decode_tags(TaggedText{std::string(model_output)},
                                 original);
    p.spans = std::move(r.spans);
    switch (r.status) {
      case DecodeStatus::kExact: p.parse_status = ParseStatus::kExact; break;
      case DecodeStatus::kRepaired:
        p.parse_status = ParseStatus::kRepaired;
        break;
      case DecodeStatus::kAlignmentFailure:
        p.parse_status = ParseStatus::kFallback;
        break;
    }
    return p;
  }

  const LabelSet set = label_set.value_or(default_label_set(task));
  if (!label_set_fits(task, set)) {
    throw Error(ErrorCode::kLabelTaskMismatch, "label set does not fit task");
  }
  if (auto exact = ClassLabel::from_name(set, model_output)) {
    p.label = *exact;
    return p;
  }
  const std::string_view trimmed = internal::trim(model_output);
  const auto names = label_names(set);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (internal::iequals_ascii(trimmed, names[i])) {
      p.label = ClassLabel(set, static_cast<int>(i));
      p.parse_status = ParseStatus::kRepaired;
      return p;
    }
  }
  p.label = fallback_label(set);
  p.parse_status = ParseStatus::kFallback;
  return p;
}

}  // namespace hsd
