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

#include <unicode/uchar.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "hsd/error.hpp"
#include "hsd/utf8.hpp"

namespace hsd {

// Unicode White_Space property; separates tokens and syllables.
inline bool is_unicode_space(char32_t c) {
  return u_isUWhiteSpace(static_cast<UChar32>(c)) != 0;
}

// Normalized comment text. char_len() counts Unicode scalar values and is the
// index domain for spans and masks.
class CleanText {
 public:
  CleanText() = default;
  explicit CleanText(std::string text) : text_(std::move(text)) {
    if (!utf8::is_valid(text_)) {
      throw Error(ErrorCode::kInvalidUtf8, "text is not valid UTF-8");
    }
    char_len_ = utf8::length(text_);
  }

  const std::string& text() const { return text_; }
  std::size_t char_len() const { return char_len_; }
  bool empty() const { return text_.empty(); }

  friend bool operator==(const CleanText&, const CleanText&) = default;

 private:
  std::string text_;
  std::size_t char_len_ = 0;
};

}  // namespace hsd
