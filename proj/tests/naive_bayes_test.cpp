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

#include <vector>

#include "hsd/hsd.hpp"
#include "test_support.hpp"

namespace hsd {
namespace {

using testing::SyntheticCorpus;

BaselineModel train_on(std::uint64_t seed, std::uint64_t n) {
  SyntheticCorpus corpus(seed, n, 0.3, true);
  const auto examples = testing::training_examples(corpus);
  return BaselineModel::train(examples);
}

TEST(BaselineModelTest, PlantedLexiconIsSeparable) {
  const BaselineModel model = train_on(1, 2000);
  SyntheticCorpus held_out(2, 2000, 0.3, true);
  std::vector<ClassLabel> gold, pred;
  while (auto r = held_out.next()) {
    gold.push_back(*r->label);
    pred.push_back(model.classify(r->text).label);
  }
  const EvalReport rep = classification_eval(gold, pred);
  EXPECT_GE(rep.macro_f1, 0.95);
}

TEST(BaselineModelTest, PlantedTextScoresAboveHalf) {
  const BaselineModel model = train_on(1, 2000);
  const BinaryPosterior p = model.classify(CleanText("hôm nay đéo đi làm"));
  EXPECT_EQ(p.label, labels::kBinaryHate);
  EXPECT_GT(p.score, 0.5);
  const BinaryPosterior q = model.classify(CleanText("hôm nay trời đẹp quá"));
  EXPECT_EQ(q.label, labels::kBinaryNone);
  EXPECT_GE(q.score, 0.5);
  EXPECT_LE(q.score, 1.0);
}

TEST(BaselineModelTest, TrainingIsDeterministic) {
  const BaselineModel a = train_on(9, 300);
  const BaselineModel b = train_on(9, 300);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
}

TEST(BaselineModelTest, JsonRoundTripPreservesScores) {
  const BaselineModel a = train_on(4, 200);
  const BaselineModel b = BaselineModel::from_json(nlohmann::json::parse(a.to_json().dump()));
  EXPECT_EQ(a, b);
  SyntheticCorpus probe(5, 50, 0.5, false);
  while (auto r = probe.next()) {
    EXPECT_DOUBLE_EQ(a.hate_probability(r->text), b.hate_probability(r->text));
  }
}

TEST(BaselineModelTest, AcceptsThreeWayLabelsByCollapsing) {
  const std::vector<TrainingExample> ex = {
      {CleanText("chào bạn"), labels::kClean},
      {CleanText("đồ óc chó"), labels::kOffensive},
      {CleanText("thằng ngu"), labels::kHate}};
  const BaselineModel m = BaselineModel::train(ex);
  EXPECT_EQ(m.classify(CleanText("óc chó")).label, labels::kBinaryHate);
}

TEST(BaselineModelTest, DegenerateTrainingSets) {
  const std::vector<TrainingExample> one_class = {
      {CleanText("a"), labels::kBinaryNone}, {CleanText("b"), labels::kBinaryNone}};
  const std::vector<TrainingExample> empty;
  const std::vector<TrainingExample> ok = {{CleanText("a"), labels::kBinaryNone},
                                           {CleanText("b"), labels::kBinaryHate}};
  for (const auto* ex : {&one_class, &empty}) {
    try {
      BaselineModel::train(*ex);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kDegenerateTrainingSet);
    }
  }
  NaiveBayesConfig bad;
  bad.max_n = 4;
  EXPECT_THROW(BaselineModel::train(ok, bad), Error);
  bad = NaiveBayesConfig();
  bad.alpha = 0;
  EXPECT_THROW(BaselineModel::train(ok, bad), Error);
}

TEST(BaselineModelTest, UnseenTextFallsBackToPrior) {
  const std::vector<TrainingExample> ex = {{CleanText("a"), labels::kBinaryNone},
                                           {CleanText("a"), labels::kBinaryNone},
                                           {CleanText("b"), labels::kBinaryHate}};
  const BaselineModel m = BaselineModel::train(ex);
  EXPECT_NEAR(m.hate_probability(CleanText("zzz")), 1.0 / 3.0, 1e-12);
}

TEST(NaiveBayesAnnotatorTest, TotalAndOrderPreserving) {
  const NaiveBayesAnnotator ann(train_on(1, 200));
  EXPECT_EQ(ann.kind(), AnnotatorKind::kBuiltin);
  EXPECT_EQ(ann.id(), "builtin:char-nb-1-3");
  EXPECT_TRUE(ann.classify_batch({}).empty());
  std::mt19937_64 rng(6);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<CleanText> batch;
    const int n = static_cast<int>(rng() % 40);
    for (int i = 0; i < n; ++i) batch.emplace_back(testing::random_text(rng, 20));
    const auto out = ann.classify_batch(batch);
    ASSERT_EQ(out.size(), batch.size());
    for (std::size_t i = 0; i < batch.size(); ++i) {
      const auto single = ann.classify_batch(std::span(&batch[i], 1));
      EXPECT_EQ(out[i].label, single[0].label);
      EXPECT_DOUBLE_EQ(out[i].score, single[0].score);
      EXPECT_GE(out[i].score, 0.5);
    }
  }
}

}  // namespace
}  // namespace hsd
