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

// Label-ratio resampling of a weakly labeled corpus:
//   full       every record, unchanged
//   hate_only  HATE records only
//   balanced   every HATE record plus an equally sized uniform sample of
//              NONE records, drawn without replacement
//
// Balanced mode reads the source twice: once to count, once to emit. The
// second pass uses selection sampling, so output keeps input order and only
// O(1) state is held regardless of corpus size.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "hsd/error.hpp"
#include "hsd/records.hpp"
#include "hsd/tasks.hpp"

namespace hsd {

enum class RatioCondition { kFull, kBalanced, kHateOnly };

inline std::string_view to_string(RatioCondition c) {
  switch (c) {
    case RatioCondition::kFull: return "full";
    case RatioCondition::kBalanced: return "balanced";
    case RatioCondition::kHateOnly: return "hate_only";
  }
  return "";
}

inline std::optional<RatioCondition> parse_ratio_condition(std::string_view s) {
  if (s == "full") return RatioCondition::kFull;
  if (s == "balanced") return RatioCondition::kBalanced;
  if (s == "hate_only" || s == "hate-only") return RatioCondition::kHateOnly;
  return std::nullopt;
}

struct ResampleSummary {
  std::uint64_t hate_in = 0;
  std::uint64_t clean_in = 0;
  std::uint64_t hate_out = 0;
  std::uint64_t clean_out = 0;

  std::uint64_t total_out() const { return hate_out + clean_out; }
};

// True for binary HATE (ViHSD labels are collapsed first).
inline bool is_hate_record(const LabeledRecord& r) {
  if (!r.label) {
    throw Error(ErrorCode::kMalformedRecord, "record " + r.id + " is unlabeled");
  }
  return collapse_to_binary(*r.label) == labels::kBinaryHate;
}

// Unbiased integer in [0, bound) by rejection; bound > 0.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

template <RewindableSource Source, RecordSink Sink>
ResampleSummary resample(Source& source, RatioCondition condition,
                         std::uint64_t seed, Sink& sink) {
  ResampleSummary s;
  if (condition != RatioCondition::kBalanced) {
    while (auto r = source.next()) {
      const bool hate = is_hate_record(*r);
      (hate ? s.hate_in : s.clean_in) += 1;
      if (hate || condition == RatioCondition::kFull) {
        (hate ? s.hate_out : s.clean_out) += 1;
        sink.write(*r);
      }
    }
    return s;
  }

  while (auto r = source.next()) (is_hate_record(*r) ? s.hate_in : s.clean_in) += 1;
  if (s.clean_in < s.hate_in) {
    throw Error(ErrorCode::kInsufficientClean,
                std::to_string(s.clean_in) + " clean records for " +
                    std::to_string(s.hate_in) + " hate records");
  }
  source.rewind();

  std::mt19937_64 rng(seed);
  std::uint64_t clean_left = s.clean_in;
  std::uint64_t needed = s.hate_in;
  while (auto r = source.next()) {
    if (is_hate_record(*r)) {
      ++s.hate_out;
      sink.write(*r);
      continue;
    }
    if (needed > 0 && uniform_below(rng, clean_left) < needed) {
      --needed;
      ++s.clean_out;
      sink.write(*r);
    }
    --clean_left;
  }
  return s;
}

}  // namespace hsd
