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

// Walks one comment through the pipeline: clean it, build the T5 training
// pair for the span task, decode a model reply and score it.

#include <iostream>
#include <vector>

#include "hsd/hsd.hpp"

int main() {
  const hsd::CleanText text = hsd::normalize(
      "@mod123 vcl   thật. Chịu luôn đm m!!! https://voz.vn/t/abc");
  const hsd::SpanSet gold = hsd::SpanSet::from_pairs({{0, 2}, {20, 23}});

  std::cout << "clean : " << text.text() << '\n'
            << "source: " << hsd::encode_source(hsd::Task::kHateSpans, text) << '\n'
            << "target: " << hsd::encode_target(hsd::Task::kHateSpans, gold, text)
            << "\n";

  // A model that found only the first span.
  const hsd::Prediction p = hsd::decode_prediction(
      hsd::Task::kHateSpans, "[HATE]vcl[HATE] thật. Chịu luôn đm m!!!", text);
  std::cout << "parse : " << hsd::to_string(p.parse_status) << '\n';

  const std::vector<hsd::SpanSet> golds = {gold};
  const std::vector<hsd::SpanSet> preds = {*p.spans};
  const std::vector<hsd::CleanText> texts = {text};
  const hsd::EvalReport r = hsd::span_eval(golds, preds, texts);
  std::cout << "char MF1 " << r.macro_f1 << ", accuracy " << r.accuracy << '\n';

  const hsd::IobSequence iob = hsd::spans_to_iob(text, gold);
  for (std::size_t i = 0; i < iob.tokens.size(); ++i) {
    std::cout << iob.tokens[i].text << '/' << hsd::to_string(iob.tags[i]) << ' ';
  }
  std::cout << '\n';
  return 0;
}
