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

#include <cstdint>

#include "alloc_tracker.hpp"
#include "hsd/hsd.hpp"
#include "test_support.hpp"

namespace hsd {
namespace {

namespace alloc = testing::alloc;
using testing::SyntheticCorpus;
using testing::TempDir;

constexpr std::int64_t kBudget = 8 << 20;  // bytes above the starting heap

// Peak heap growth while `fn` runs.
template <typename Fn>
std::int64_t peak_growth(Fn&& fn) {
  const std::int64_t base = alloc::reset_peak();
  fn();
  return alloc::peak() - base;
}

TEST(StreamingMemoryTest, TrackerSeesAllocations) {
  const std::int64_t g = peak_growth([] {
    std::vector<char> v(1 << 20);
    v[0] = 1;
  });
  EXPECT_GE(g, 1 << 20);
}

TEST(StreamingMemoryTest, WriteAndReadJsonlInBoundedMemory) {
  TempDir dir;
  std::int64_t peaks[2];
  const std::uint64_t sizes[2] = {100'000, 1'000'000};
  for (int k = 0; k < 2; ++k) {
    peaks[k] = peak_growth([&] {
      SyntheticCorpus src(1, sizes[k], 0.1, true);
      EXPECT_EQ(write_jsonl(src, dir / "c.jsonl"), sizes[k]);
      DatasetReader reader(dir / "c.jsonl", DatasetSchema::for_name(DatasetName::kPretrain));
      std::uint64_t n = 0;
      while (reader.next()) ++n;
      EXPECT_EQ(n, sizes[k]);
    });
    EXPECT_LT(peaks[k], kBudget) << sizes[k] << " records";
  }
  // Ten times the records may not cost more than a little slack.
  EXPECT_LT(peaks[1], peaks[0] + (256 << 10));
}

TEST(StreamingMemoryTest, LabelCorpusInBoundedMemory) {
  TempDir dir;
  SyntheticCorpus train(1, 2000, 0.3, true);
  const NaiveBayesAnnotator ann(BaselineModel::train(testing::training_examples(train)));
  LabelOptions opt;
  opt.batch_size = 256;
  opt.jobs = 4;
  opt.checkpoint = dir / "ck.json";
  std::int64_t peaks[2];
  const std::uint64_t sizes[2] = {100'000, 1'000'000};
  for (int k = 0; k < 2; ++k) {
    peaks[k] = peak_growth([&] {
      SyntheticCorpus src(2, sizes[k], 0.1, false);
      EXPECT_EQ(label_corpus(src, ann, dir / "o.jsonl", opt).records, sizes[k]);
    });
    EXPECT_LT(peaks[k], kBudget) << sizes[k] << " records";
  }
  EXPECT_LT(peaks[1], peaks[0] + (256 << 10));
}

TEST(StreamingMemoryTest, ResampleInBoundedMemory) {
  testing::FixedRatioSource src(1'000'000, 54'321);
  testing::CountingSink sink;
  const std::int64_t g = peak_growth([&] { resample(src, RatioCondition::kBalanced, 1, sink); });
  EXPECT_EQ(sink.total(), 108'642u);
  EXPECT_LT(g, 1 << 20);
}

}  // namespace
}  // namespace hsd
