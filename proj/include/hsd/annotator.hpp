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

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hsd/naive_bayes.hpp"
#include "hsd/tasks.hpp"
#include "hsd/text.hpp"

namespace hsd {

enum class AnnotatorKind { kBuiltin, kRemote };

struct Annotation {
  ClassLabel label = labels::kBinaryNone;  // NONE or HATE
  double score = 1.0;
};

// Binary hate classifier used to label a corpus. Implementations must be
// total and order-preserving: one Annotation per input text, same order.
// classify_batch may be called concurrently from several threads.
class Annotator {
 public:
  virtual ~Annotator() = default;

  virtual std::vector<Annotation> classify_batch(
      std::span<const CleanText> texts) const = 0;
  virtual AnnotatorKind kind() const = 0;
  virtual std::string id() const = 0;
};

class NaiveBayesAnnotator final : public Annotator {
 public:
  explicit NaiveBayesAnnotator(BaselineModel model) : model_(std::move(model)) {}

  std::vector<Annotation> classify_batch(
      std::span<const CleanText> texts) const override {
    std::vector<Annotation> out;
    out.reserve(texts.size());
    for (const CleanText& t : texts) {
      const BinaryPosterior p = model_.classify(t);
      out.push_back({p.label, p.score});
    }
    return out;
  }

  AnnotatorKind kind() const override { return AnnotatorKind::kBuiltin; }

  std::string id() const override {
    const auto& c = model_.config();
    return "builtin:char-nb-" + std::to_string(c.min_n) + "-" +
           std::to_string(c.max_n);
  }

  const BaselineModel& model() const { return model_; }

 private:
  BaselineModel model_;
};

}  // namespace hsd
