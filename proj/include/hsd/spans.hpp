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

// Hate-span representations and the conversions between them:
//   SpanSet     inclusive (start, end) character ranges
//   TaggedText  text with literal "[HATE]" markers around each span
//   BinaryMask  one 0/1 entry per character, the evaluation form
//
// All indices count Unicode scalar values of the original text.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hsd/error.hpp"
#include "hsd/text.hpp"
#include "hsd/utf8.hpp"

namespace hsd {

inline constexpr std::string_view kHateTag = "[HATE]";

struct Span {
  std::size_t start = 0;
  std::size_t end = 0;  // inclusive

  std::size_t length() const { return end - start + 1; }
  friend bool operator==(const Span&, const Span&) = default;
};

// Canonical set of spans: sorted, non-overlapping, and separated by at least
// one uncovered character (touching spans are merged on construction).
class SpanSet {
 public:
  SpanSet() = default;

  // Throws InvalidSpan when start > end or two spans share a character.
  static SpanSet from_pairs(std::vector<Span> spans) {
    for (const Span& s : spans) {
      if (s.start > s.end) {
        throw Error(ErrorCode::kInvalidSpan,
                    "span start " + std::to_string(s.start) + " > end " +
                        std::to_string(s.end));
      }
    }
    std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) {
      return a.start < b.start;
    });
    SpanSet out;
    for (const Span& s : spans) {
      if (!out.spans_.empty()) {
        Span& last = out.spans_.back();
        if (s.start <= last.end) {
          throw Error(ErrorCode::kInvalidSpan,
                      "overlapping spans at index " + std::to_string(s.start));
        }
        if (s.start == last.end + 1) {
          last.end = s.end;
          continue;
        }
      }
      out.spans_.push_back(s);
    }
    return out;
  }

  // Accepts a flat index list in any order; duplicates are ignored.
  static SpanSet from_indices(std::span<const std::size_t> indices) {
    std::vector<std::size_t> sorted(indices.begin(), indices.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    SpanSet out;
    for (std::size_t i : sorted) {
      if (!out.spans_.empty() && out.spans_.back().end + 1 == i) {
        out.spans_.back().end = i;
      } else {
        out.spans_.push_back({i, i});
      }
    }
    return out;
  }

  const std::vector<Span>& spans() const { return spans_; }
  bool empty() const { return spans_.empty(); }
  std::size_t size() const { return spans_.size(); }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (const Span& s : spans_) {
      for (std::size_t i = s.start; i <= s.end; ++i) out.push_back(i);
    }
    return out;
  }

  std::size_t covered() const {
    std::size_t n = 0;
    for (const Span& s : spans_) n += s.length();
    return n;
  }

  void validate(std::size_t char_len) const {
    if (!spans_.empty() && spans_.back().end >= char_len) {
      throw Error(ErrorCode::kInvalidSpan,
                  "index " + std::to_string(spans_.back().end) +
                      " outside text of length " + std::to_string(char_len));
    }
  }

  friend bool operator==(const SpanSet&, const SpanSet&) = default;

 private:
  std::vector<Span> spans_;
};

struct TaggedText {
  std::string text;
};

struct BinaryMask {
  std::vector<std::uint8_t> bits;

  std::size_t size() const { return bits.size(); }
  friend bool operator==(const BinaryMask&, const BinaryMask&) = default;
};

inline TaggedText encode_tags(const CleanText& original, const SpanSet& spans) {
  spans.validate(original.char_len());
  const std::string& text = original.text();
  const std::vector<std::size_t> offs = utf8::offsets(text);
  std::string out;
  out.reserve(text.size() + 2 * kHateTag.size() * spans.size());
  std::size_t cursor = 0;
  for (const Span& s : spans.spans()) {
    const std::size_t b = offs[s.start];
    const std::size_t e = offs[s.end + 1];
    out.append(text, cursor, b - cursor);
    out.append(kHateTag);
    out.append(text, b, e - b);
    out.append(kHateTag);
    cursor = e;
  }
  out.append(text, cursor, std::string::npos);
  return {std::move(out)};
}

enum class DecodeStatus {
  kExact,             // well-formed output
  kRepaired,          // odd marker count; the last marker was dropped
  kAlignmentFailure,  // an enclosed substring was not found; spans are empty
};

struct DecodeResult {
  SpanSet spans;
  DecodeStatus status = DecodeStatus::kExact;
};

// Recovers index spans from "[HATE]"-tagged model output.
//
// The substrings enclosed by consecutive marker pairs are located in the
// original text. When the output with markers stripped reproduces the original
// exactly, positions are read off directly. Otherwise each substring is
// matched at its first occurrence at or after a cursor that only moves
// forward, so earlier text is never rescanned. Never throws on bad output.
inline DecodeResult decode_tags(const TaggedText& tagged,
                                const CleanText& original) {
  DecodeResult result;
  const std::string_view out = tagged.text;

  std::vector<std::size_t> markers;
  for (std::size_t pos = out.find(kHateTag); pos != std::string_view::npos;
       pos = out.find(kHateTag, pos + kHateTag.size())) {
    markers.push_back(pos);
  }
  if (markers.size() % 2 != 0) {
    markers.pop_back();
    result.status = DecodeStatus::kRepaired;
  }
  if (markers.empty()) return result;

  // Strip paired markers; the odd one out, if any, stays as literal text and
  // is removed below together with any other unpaired occurrence.
  std::string stripped;
  std::vector<std::pair<std::size_t, std::size_t>> enclosed;  // byte [b, e)
  std::size_t cursor = 0;
  for (std::size_t k = 0; k < markers.size(); k += 2) {
    stripped.append(out.substr(cursor, markers[k] - cursor));
    const std::size_t inner = markers[k] + kHateTag.size();
    const std::size_t b = stripped.size();
    stripped.append(out.substr(inner, markers[k + 1] - inner));
    enclosed.emplace_back(b, stripped.size());
    cursor = markers[k + 1] + kHateTag.size();
  }
  std::string tail(out.substr(cursor));
  for (std::size_t p = tail.find(kHateTag); p != std::string::npos;
       p = tail.find(kHateTag, p)) {
    tail.erase(p, kHateTag.size());
  }
  stripped += tail;

  const std::string& text = original.text();
  const std::vector<std::size_t> offs = utf8::offsets(text);
  std::vector<Span> found;
  auto add_range = [&](std::size_t b, std::size_t e) {
    if (b == e) return;
    found.push_back(
        {utf8::char_index(offs, b), utf8::char_index(offs, e) - 1});
  };

  // A marker wedged inside a multi-byte character cannot be mapped back.
  for (const auto& [b, e] : enclosed) {
    if (!utf8::is_valid(std::string_view(stripped).substr(b, e - b))) {
      return {SpanSet(), DecodeStatus::kAlignmentFailure};
    }
  }
  if (stripped == text) {
    for (const auto& [b, e] : enclosed) add_range(b, e);
  } else {
    if (!utf8::is_valid(stripped)) {
      return {SpanSet(), DecodeStatus::kAlignmentFailure};
    }
    std::size_t scan = 0;
    for (const auto& [b, e] : enclosed) {
      if (b == e) continue;
      const std::string_view needle(stripped.data() + b, e - b);
      const std::size_t pos = text.find(needle, scan);
      if (pos == std::string::npos) {
        return {SpanSet(), DecodeStatus::kAlignmentFailure};
      }
      add_range(pos, pos + needle.size());
      scan = pos + needle.size();
    }
  }

  // Touching or repeated ranges collapse into canonical form.
  std::vector<std::size_t> idx;
  for (const Span& s : found) {
    for (std::size_t i = s.start; i <= s.end; ++i) idx.push_back(i);
  }
  result.spans = SpanSet::from_indices(idx);
  return result;
}

// Strict variant: OddTagCount and AlignmentFailure become exceptions.
inline SpanSet decode_tags_strict(const TaggedText& tagged,
                                  const CleanText& original) {
  DecodeResult r = decode_tags(tagged, original);
  switch (r.status) {
    case DecodeStatus::kExact:
      return std::move(r.spans);
    case DecodeStatus::kRepaired:
      throw Error(ErrorCode::kOddTagCount, "unpaired [HATE] marker");
    case DecodeStatus::kAlignmentFailure:
      break;
  }
  throw Error(ErrorCode::kAlignmentFailure,
              "tagged substring not found in original text");
}

inline BinaryMask spans_to_mask(const SpanSet& spans,
                                const CleanText& original) {
  spans.validate(original.char_len());
  BinaryMask mask;
  mask.bits.assign(original.char_len(), 0);
  for (const Span& s : spans.spans()) {
    std::fill(mask.bits.begin() + static_cast<std::ptrdiff_t>(s.start),
              mask.bits.begin() + static_cast<std::ptrdiff_t>(s.end) + 1, 1);
  }
  return mask;
}

inline SpanSet mask_to_spans(const BinaryMask& mask) {
  std::vector<Span> out;
  for (std::size_t i = 0; i < mask.bits.size(); ++i) {
    const std::uint8_t bit = mask.bits[i];
    if (bit > 1) {
      throw Error(ErrorCode::kInvalidSpan,
                  "mask value " + std::to_string(bit) + " at index " +
                      std::to_string(i));
    }
    if (bit == 0) continue;
    if (!out.empty() && out.back().end + 1 == i) {
      out.back().end = i;
    } else {
      out.push_back({i, i});
    }
  }
  return SpanSet::from_pairs(std::move(out));
}

}  // namespace hsd
