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

// Social-media comment cleaning: drops forum quotes, links and @mentions,
// collapses whitespace and leaves everything else (emoji, emoticons,
// teencode) byte-identical after NFC.

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hsd/error.hpp"
#include "hsd/text.hpp"
#include "hsd/utf8.hpp"

namespace hsd {

struct RawComment {
  std::string id;
  std::string body;
  std::optional<std::string> quoted_block;
  std::optional<std::string> topic;
};

struct NormalizeConfig {
  bool url_removal = true;
  bool username_removal = true;
  bool quote_removal = true;
};

// Longest username (excluding the '@') that is treated as a mention.
inline constexpr std::size_t kMaxUsernameLength = 64;

namespace internal {

inline std::string to_nfc(std::string_view s) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::kIo, "ICU NFC data unavailable");
  }
  const icu::UnicodeString in = icu::UnicodeString::fromUTF8(
      icu::StringPiece(s.data(), static_cast<int32_t>(s.size())));
  if (nfc->isNormalized(in, status) && U_SUCCESS(status)) {
    return std::string(s);
  }
  status = U_ZERO_ERROR;
  const icu::UnicodeString out = nfc->normalize(in, status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::kInvalidUtf8, "NFC normalization failed");
  }
  std::string result;
  out.toUTF8String(result);
  return result;
}

inline bool is_alnum(char32_t c) {
  return u_isalnum(static_cast<UChar32>(c)) != 0;
}

inline bool starts_with_ci(std::u32string_view s, std::size_t pos,
                           std::string_view ascii_prefix) {
  if (s.size() - pos < ascii_prefix.size()) return false;
  for (std::size_t i = 0; i < ascii_prefix.size(); ++i) {
    char32_t c = s[pos + i];
    if (c >= U'A' && c <= U'Z') c += U'a' - U'A';
    if (c != static_cast<char32_t>(ascii_prefix[i])) return false;
  }
  return true;
}

// Position where a link starts inside a whitespace-free token, or npos.
// "www." only counts when it does not continue a word ("awww." is not a link).
inline std::size_t find_url(std::u32string_view token) {
  for (std::size_t i = 0; i < token.size(); ++i) {
    if (starts_with_ci(token, i, "http://") ||
        starts_with_ci(token, i, "https://")) {
      return i;
    }
    if (starts_with_ci(token, i, "www.") &&
        (i == 0 || !is_alnum(token[i - 1]))) {
      return i;
    }
  }
  return std::u32string_view::npos;
}

inline bool is_username(std::u32string_view token) {
  return token.size() >= 2 && token.size() - 1 <= kMaxUsernameLength &&
         token.front() == U'@';
}

}  // namespace internal

// Cleans one comment. Output is NFC, single-spaced, trimmed. Links run from
// their scheme (or "www.") to the next whitespace and are deleted; a
// whitespace-delimited "@name" token is deleted. Idempotent.
inline CleanText normalize(const RawComment& raw,
                           const NormalizeConfig& config = {}) {
  std::string source;
  if (!config.quote_removal && raw.quoted_block) {
    source = *raw.quoted_block + " ";
  }
  source += raw.body;
  if (!utf8::is_valid(source)) {
    throw Error(ErrorCode::kInvalidUtf8, "comment " + raw.id);
  }
  const std::u32string text = utf8::decode(internal::to_nfc(source));

  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_unicode_space(text[i])) ++i;
    const std::size_t begin = i;
    while (i < text.size() && !is_unicode_space(text[i])) ++i;
    std::u32string_view token(text.data() + begin, i - begin);
    if (token.empty()) break;
    if (config.url_removal) {
      const std::size_t url = internal::find_url(token);
      if (url != std::u32string_view::npos) token = token.substr(0, url);
    }
    if (config.username_removal && internal::is_username(token)) continue;
    if (token.empty()) continue;
    if (!out.empty()) out.push_back(U' ');
    out.append(token);
  }
  return CleanText(internal::to_nfc(utf8::encode(out)));
}

inline CleanText normalize(std::string_view body,
                           const NormalizeConfig& config = {}) {
  RawComment raw;
  raw.body = std::string(body);
  return normalize(raw, config);
}

inline bool is_effectively_empty(const CleanText& clean) {
  for (char32_t c : utf8::decode(clean.text())) {
    if (!is_unicode_space(c)) return false;
  }
  return true;
}

}  // namespace hsd
