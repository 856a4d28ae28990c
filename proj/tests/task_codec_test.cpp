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

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "hsd/hsd.hpp"
#include "sample_table.hpp"
#include "test_support.hpp"

namespace hsd {
namespace {

TEST(TaskTest, PrefixesAndAliases) {
  EXPECT_EQ(task_prefix(Task::kHateSpeech), "hate-speech-detection");
  EXPECT_EQ(task_prefix(Task::kToxicSpeech), "toxic-speech-detection");
  EXPECT_EQ(task_prefix(Task::kHateSpans), "hate-spans-detection");
  EXPECT_EQ(task_prefix(Task::kToxicSpeech, PrefixSpelling::kTablePrinted),
            "toxic-speech-detecion");
  EXPECT_EQ(parse_task("vihsd"), Task::kHateSpeech);
  EXPECT_EQ(parse_task("victsd"), Task::kToxicSpeech);
  EXPECT_EQ(parse_task("vihos"), Task::kHateSpans);
  EXPECT_FALSE(parse_task("nope").has_value());
}

TEST(ClassLabelTest, IdNameBijection) {
  for (LabelSet set : {LabelSet::kViHsd, LabelSet::kViCtsd, LabelSet::kBinary}) {
    for (std::size_t i = 0; i < label_count(set); ++i) {
      const ClassLabel l(set, static_cast<int>(i));
      const auto back = ClassLabel::from_name(set, l.name());
      ASSERT_TRUE(back.has_value());
      EXPECT_EQ(*back, l);
    }
    EXPECT_THROW(ClassLabel(set, static_cast<int>(label_count(set))), Error);
  }
  EXPECT_EQ(labels::kClean.id(), 0);
  EXPECT_EQ(labels::kOffensive.id(), 1);
  EXPECT_EQ(labels::kHate.id(), 2);
  EXPECT_EQ(labels::kCtsdNone.id(), 0);
  EXPECT_EQ(labels::kToxic.id(), 1);
}

TEST(CollapseTest, ExhaustiveOverThreeLabels) {
  EXPECT_EQ(collapse_to_binary(labels::kClean), labels::kBinaryNone);
  EXPECT_EQ(collapse_to_binary(labels::kOffensive), labels::kBinaryHate);
  EXPECT_EQ(collapse_to_binary(labels::kHate), labels::kBinaryHate);
  // Surjective and monotone in severity.
  int prev = -1;
  for (int id = 0; id < 3; ++id) {
    const int b = collapse_to_binary(ClassLabel(LabelSet::kViHsd, id)).id();
    EXPECT_GE(b, prev);
    prev = b;
  }
  try {
    collapse_to_binary(labels::kToxic);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLabelTaskMismatch);
  }
}

TEST(SampleTableTest, SourcesAndTargetsAreByteExact) {
  for (const testing::SampleRow& row : testing::sample_rows()) {
    const CleanText text(row.text);
    EXPECT_EQ(encode_source(row.task, text, row.spelling), row.source);
    EXPECT_EQ(encode_target(row.task, row.gold, text), row.target);
  }
}

TEST(SampleTableTest, CanonicalToxicPrefix) {
  EXPECT_EQ(encode_source(Task::kToxicSpeech, CleanText("Một thời để nhớ, ...")),
            "toxic-speech-detection: Một thời để nhớ, ...");
}

TEST(SampleTableTest, NumericTargetsForClassifierBaselines) {
  EXPECT_EQ(labels::kClean.id(), 0);
  EXPECT_EQ(ClassLabel::from_name(LabelSet::kViHsd, "OFFENSIVE")->id(), 1);
  EXPECT_EQ(ClassLabel::from_name(LabelSet::kViCtsd, "TOXIC")->id(), 1);
}

TEST(EncodeTargetTest, MismatchedGoldIsRejected) {
  const CleanText t("x");
  EXPECT_THROW(encode_target(Task::kHateSpeech, labels::kToxic, t), Error);
  EXPECT_THROW(encode_target(Task::kHateSpans, labels::kHate, t), Error);
  EXPECT_THROW(encode_target(Task::kToxicSpeech, SpanSet(), t), Error);
}

TEST(DecodePredictionTest, ClassificationStatuses) {
  const CleanText t("x");
  Prediction p = decode_prediction(Task::kHateSpeech, "HATE", t);
  EXPECT_EQ(p.label, labels::kHate);
  EXPECT_EQ(p.parse_status, ParseStatus::kExact);
  EXPECT_FALSE(p.spans.has_value());

  p = decode_prediction(Task::kHateSpeech, "hate ", t);
  EXPECT_EQ(p.label, labels::kHate);
  EXPECT_EQ(p.parse_status, ParseStatus::kRepaired);

  p = decode_prediction(Task::kHateSpeech, "xyzzy", t);
  EXPECT_EQ(p.label, labels::kClean);
  EXPECT_EQ(p.parse_status, ParseStatus::kFallback);

  p = decode_prediction(Task::kToxicSpeech, "", t);
  EXPECT_EQ(p.label, labels::kCtsdNone);
  EXPECT_EQ(p.parse_status, ParseStatus::kFallback);
}

TEST(DecodePredictionTest, SpanStatuses) {
  const CleanText t("vcl thật. Chịu luôn đm m!!!");
  Prediction p = decode_prediction(
      Task::kHateSpans, "[HATE]vcl[HATE] thật. Chịu luôn [HATE]đm m[HATE]!!!", t);
  EXPECT_FALSE(p.label.has_value());
  EXPECT_EQ(p.spans->spans(), (std::vector<Span>{{0, 2}, {20, 23}}));
  EXPECT_EQ(p.parse_status, ParseStatus::kExact);

  p = decode_prediction(Task::kHateSpans, "[HATE]vcl", t);
  EXPECT_EQ(p.parse_status, ParseStatus::kRepaired);
  p = decode_prediction(Task::kHateSpans, "[HATE]qqq[HATE]", t);
  EXPECT_EQ(p.parse_status, ParseStatus::kFallback);
  EXPECT_TRUE(p.spans->empty());
}

TEST(CodecPropertyTest, DecodeInvertsEncodeForEveryLabel) {
  const CleanText t("văn bản");
  for (Task task : {Task::kHateSpeech, Task::kToxicSpeech}) {
    const LabelSet set = default_label_set(task);
    for (std::size_t i = 0; i < label_count(set); ++i) {
      const ClassLabel l(set, static_cast<int>(i));
      const Prediction p = decode_prediction(task, encode_target(task, l, t), t);
      EXPECT_EQ(p.label, l);
      EXPECT_EQ(p.parse_status, ParseStatus::kExact);
    }
  }
  // Binary labels under the hate-speech task.
  for (const ClassLabel& l : {labels::kBinaryNone, labels::kBinaryHate}) {
    const Prediction p = decode_prediction(Task::kHateSpeech,
                                           encode_target(Task::kHateSpeech, l, t),
                                           t, LabelSet::kBinary);
    EXPECT_EQ(p.label, l);
  }
}

TEST(CodecPropertyTest, DecodeInvertsEncodeForRandomSpans) {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 3000; ++iter) {
    const CleanText t(testing::random_text(rng, 40));
    const SpanSet s = testing::random_spans(rng, t.char_len());
    const std::string src = encode_source(Task::kHateSpans, t);
    ASSERT_TRUE(src.starts_with("hate-spans-detection: "));
    const Prediction p =
        decode_prediction(Task::kHateSpans, encode_target(Task::kHateSpans, s, t), t);
    ASSERT_EQ(p.parse_status, ParseStatus::kExact);
    ASSERT_EQ(*p.spans, s);
  }
}

}  // namespace
}  // namespace hsd
