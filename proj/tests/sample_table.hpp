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

#include <string>
#include <vector>

#include "hsd/hsd.hpp"

namespace hsd::testing {

// Sample rows: text, task, gold, T5 source, T5 target.
struct SampleRow {
  Task task;
  std::string text;
  Gold gold;
  std::string source;
  std::string target;
  PrefixSpelling spelling = PrefixSpelling::kCanonical;
};

inline std::vector<SampleRow> sample_rows() {
  return {
      {Task::kHateSpeech, "Từ lý thuyết đến thực hành là cả 1 câu chuyện dài =))",
       labels::kClean,
       "hate-speech-detection: Từ lý thuyết đến thực hành là cả 1 câu chuyện dài =))",
       "CLEAN"},
      {Task::kHateSpeech,
       "Giống nhau như 2 giọt nước. Mà mỗi cái là 1 giọt nước mắt với 1 giọt nước sh!t thôi ạ",
       labels::kOffensive,
       "hate-speech-detection: Giống nhau như 2 giọt nước. Mà mỗi cái là 1 giọt "
       "nước mắt với 1 giọt nước sh!t thôi ạ",
       "OFFENSIVE"},
      {Task::kHateSpeech, "Im mẹ đi thằng mặt lon", labels::kHate,
       "hate-speech-detection: Im mẹ đi thằng mặt lon", "HATE"},
      {Task::kToxicSpeech, "Một thời để nhớ, bao kỷ niệm gắn liền với những ca khúc của anh.",
       labels::kCtsdNone,
       "toxic-speech-detecion: Một thời để nhớ, bao kỷ niệm gắn liền với những ca khúc của anh.",
       "NONE", PrefixSpelling::kTablePrinted},
      {Task::kToxicSpeech,
       "nghe xong máu điên trong người nổi lên. muốn đánh cho thằng cha một trận quá.....",
       labels::kToxic,
       "toxic-speech-detecion: nghe xong máu điên trong người nổi lên. muốn đánh "
       "cho thằng cha một trận quá.....",
       "TOXIC", PrefixSpelling::kTablePrinted},
      {Task::kHateSpans, "Hãnh diện về ng thầy có tâm nhất của năm.", SpanSet(),
       "hate-spans-detection: Hãnh diện về ng thầy có tâm nhất của năm.",
       "Hãnh diện về ng thầy có tâm nhất của năm."},
      {Task::kHateSpans, "Chương trình ln gì vậy ? :D :)))",
       SpanSet::from_pairs({{13, 14}}),
       "hate-spans-detection: Chương trình ln gì vậy ? :D :)))",
       "Chương trình [HATE]ln[HATE] gì vậy ? :D :)))"},
      {Task::kHateSpans, "t deo hieu no cuoi cl me gi nua",
       SpanSet::from_pairs({{2, 4}, {19, 23}}),
       "hate-spans-detection: t deo hieu no cuoi cl me gi nua",
       "t [HATE]deo[HATE] hieu no cuoi [HATE]cl me[HATE] gi nua"},
  };
}

}  // namespace hsd::testing
