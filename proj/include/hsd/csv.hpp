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

// Streaming RFC 4180 reader: quoted fields may contain commas, doubled
// quotes and newlines.

#include <istream>
#include <string>
#include <vector>

namespace hsd {

class CsvReader {
 public:
  enum class Result { kRow, kEof, kMalformed };

  explicit CsvReader(std::istream& in, char delimiter = ',')
      : in_(in), delimiter_(delimiter) {}

  Result read_row(std::vector<std::string>& fields) {
    fields.clear();
    std::string field;
    bool quoted = false;
    bool any = false;
    bool after_quote = false;
    for (;;) {
      const int c = in_.get();
      if (c == std::char_traits<char>::eof()) {
        if (quoted) return Result::kMalformed;
        if (!any) return Result::kEof;
        fields.push_back(std::move(field));
        return Result::kRow;
      }
      any = true;
      const char ch = static_cast<char>(c);
      if (quoted) {
        if (ch != '"') {
          field.push_back(ch);
        } else if (in_.peek() == '"') {
          in_.get();
          field.push_back('"');
        } else {
          quoted = false;
          after_quote = true;
        }
        continue;
      }
      if (ch == delimiter_) {
        fields.push_back(std::move(field));
        field.clear();
        after_quote = false;
      } else if (ch == '\n' || ch == '\r') {
        if (ch == '\r' && in_.peek() == '\n') in_.get();
        fields.push_back(std::move(field));
        return Result::kRow;
      } else if (ch == '"' && field.empty() && !after_quote) {
        quoted = true;
      } else if (after_quote) {
        // Text after a closing quote: consume the rest of the line.
        skip_line();
        return Result::kMalformed;
      } else {
        field.push_back(ch);
      }
    }
  }

 private:
  void skip_line() {
    for (int c = in_.get(); c != std::char_traits<char>::eof() && c != '\n';
         c = in_.get()) {
    }
  }

  std::istream& in_;
  char delimiter_;
};

}  // namespace hsd
