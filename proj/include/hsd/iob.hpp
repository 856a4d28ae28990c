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

// Syllable-level IOB tagging (O, B-T, I-T) for token-classification
// baselines, and the way back to character spans.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hsd/error.hpp"
#include "hsd/spans.hpp"
#include "hsd/text.hpp"
#include "hsd/utf8.hpp"

namespace hsd {

enum class IobTag { kOutside, kBegin, kInside };

inline std::string_view to_string(IobTag tag) {
  switch (tag) {
    case IobTag::kOutside: return "O";
    case IobTag::kBegin: return "B-T";
    case IobTag::kInside: return "I-T";
  }
  return "O";
}

inline std::optional<IobTag> parse_iob_tag(std::string_view s) {
  if (s == "O") return IobTag::kOutside;
  if (s == "B-T") return IobTag::kBegin;
  if (s == "I-T") return IobTag::kInside;
  return std::nullopt;
}

// Parses "O B-T I-T" or "O, B-T, I-T".
inline std::vector<IobTag> parse_iob_tags(std::string_view s) {
  std::vector<IobTag> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == ',' || s[i] == '\t')) ++i;
    const std::size_t b = i;
    while (i < s.size() && s[i] != ' ' && s[i] != ',' && s[i] != '\t') ++i;
    if (b == i) break;
    const auto tag = parse_iob_tag(s.substr(b, i - b));
    if (!tag) {
      throw Error(ErrorCode::kMalformedIob,
                  "unknown tag '" + std::string(s.substr(b, i - b)) + "'");
    }
    out.push_back(*tag);
  }
  return out;
}

// A whitespace-delimited syllable with inclusive character offsets.
struct Token {
  std::string text;
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

inline std::vector<Token> tokenize_syllables(const CleanText& text) {
  const std::u32string cps = utf8::decode(text.text());
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && is_unicode_space(cps[i])) ++i;
    const std::size_t b = i;
    while (i < cps.size() && !is_unicode_space(cps[i])) ++i;
    if (b == i) break;
    tokens.push_back(
        {utf8::encode(std::u32string_view(cps).substr(b, i - b)), b, i - 1});
  }
  return tokens;
}

struct IobSequence {
  std::vector<Token> tokens;
  std::vector<IobTag> tags;
};

// A token is a target if any of its characters is covered. Within a run of
// consecutive target tokens the first gets B-T and the rest I-T.
inline IobSequence spans_to_iob(const CleanText& original,
                                const SpanSet& spans) {
  const BinaryMask mask = spans_to_mask(spans, original);
  IobSequence seq;
  seq.tokens = tokenize_syllables(original);
  seq.tags.reserve(seq.tokens.size());
  bool prev_target = false;
  for (const Token& tok : seq.tokens) {
    bool target = false;
    for (std::size_t i = tok.start; i <= tok.end && !target; ++i) {
      target = mask.bits[i] != 0;
    }
    if (!target) {
      seq.tags.push_back(IobTag::kOutside);
    } else {
      seq.tags.push_back(prev_target ? IobTag::kInside : IobTag::kBegin);
    }
    prev_target = target;
  }
  return seq;
}

struct IobDecodeResult {
  SpanSet spans;
  std::size_t repaired = 0;  // I-T tags that had to be read as B-T
};

// Each B-T/I-T run becomes one span from its first token's start to its last
// token's end, so the spaces between the run's tokens are covered.
inline IobDecodeResult iob_to_spans(std::span<const Token> tokens,
                                    std::span<const IobTag> tags) {
  if (tokens.size() != tags.size()) {
    throw Error(ErrorCode::kMalformedIob,
                std::to_string(tags.size()) + " tags for " +
                    std::to_string(tokens.size()) + " tokens");
  }
  IobDecodeResult result;
  std::vector<Span> spans;
  bool in_run = false;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    switch (tags[i]) {
      case IobTag::kOutside:
        in_run = false;
        break;
      case IobTag::kInside:
        if (in_run) {
          spans.back().end = tokens[i].end;
          break;
        }
        ++result.repaired;
        [[fallthrough]];
      case IobTag::kBegin:
        spans.push_back({tokens[i].start, tokens[i].end});
        in_run = true;
        break;
    }
  }
  result.spans = SpanSet::from_pairs(std::move(spans));
  return result;
}

inline IobDecodeResult iob_to_spans(const CleanText& original,
                                    std::span<const IobTag> tags) {
  const std::vector<Token> tokens = tokenize_syllables(original);
  return iob_to_spans(tokens, tags);
}

}  // namespace hsd
