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

// Minimal UTF-8 helpers. Every index in this library counts Unicode scalar
// values, so byte <-> scalar conversions live here.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hsd/error.hpp"

namespace hsd::utf8 {

namespace internal {

// Returns the sequence length for a lead byte, or 0 if it cannot start one.
inline int sequence_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 0;
}

// Decodes one scalar at `pos`. Returns false on malformed input.
inline bool decode_one(std::string_view s, std::size_t pos, char32_t& out,
                       int& len) {
  const auto lead = static_cast<unsigned char>(s[pos]);
  len = sequence_length(lead);
  if (len == 0 || pos + len > s.size()) return false;
  if (len == 1) {
    out = lead;
    return true;
  }
  char32_t cp = lead & (0xFF >> (len + 1));
  for (int i = 1; i < len; ++i) {
    const auto c = static_cast<unsigned char>(s[pos + i]);
    if ((c & 0xC0) != 0x80) return false;
    cp = (cp << 6) | (c & 0x3F);
  }
  // Reject overlongs, surrogates and out-of-range values.
  static constexpr char32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    return false;
  }
  out = cp;
  return true;
}

}  // namespace internal

inline bool is_valid(std::string_view s) {
  std::size_t pos = 0;
  while (pos < s.size()) {
    char32_t cp;
    int len;
    if (!internal::decode_one(s, pos, cp, len)) return false;
    pos += len;
  }
  return true;
}

inline std::u32string decode(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  while (pos < s.size()) {
    char32_t cp;
    int len;
    if (!internal::decode_one(s, pos, cp, len)) {
      throw Error(ErrorCode::kInvalidUtf8,
                  "malformed sequence at byte " + std::to_string(pos));
    }
    out.push_back(cp);
    pos += len;
  }
  return out;
}

inline void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::string encode(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) append(out, cp);
  return out;
}

// Number of scalar values. Assumes valid input; counts non-continuation bytes.
inline std::size_t length(std::string_view s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

// Byte offset of every scalar value plus a trailing entry equal to s.size(),
// so scalar i occupies bytes [offsets[i], offsets[i + 1]).
inline std::vector<std::size_t> offsets(std::string_view s) {
  std::vector<std::size_t> out;
  out.reserve(s.size() + 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) out.push_back(i);
  }
  out.push_back(s.size());
  return out;
}

// Maps a byte offset that lies on a scalar boundary back to a scalar index.
inline std::size_t char_index(const std::vector<std::size_t>& offs,
                              std::size_t byte_offset) {
  return static_cast<std::size_t>(
      std::lower_bound(offs.begin(), offs.end(), byte_offset) - offs.begin());
}

}  // namespace hsd::utf8
