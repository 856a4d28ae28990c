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

// Multinomial naive Bayes over character n-grams: the built-in binary
// NONE/HATE classifier used for weak labeling.

#include <unicode/uchar.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hsd/error.hpp"
#include "hsd/tasks.hpp"
#include "hsd/text.hpp"
#include "hsd/utf8.hpp"
#include "json.hpp"

namespace hsd {

struct NaiveBayesConfig {
  int min_n = 1;
  int max_n = 3;  // at most 3: n-grams are packed into 64-bit keys
  double alpha = 1.0;
  bool lowercase = true;

  friend bool operator==(const NaiveBayesConfig&,
                         const NaiveBayesConfig&) = default;
};

struct TrainingExample {
  CleanText text;
  ClassLabel label;  // binary, or ViHSD (collapsed on the fly)
};

struct BinaryPosterior {
  ClassLabel label = labels::kBinaryNone;
  double score = 1.0;  // posterior probability of `label`
};

class BaselineModel {
 public:
  using NgramKey = std::uint64_t;

  static BaselineModel train(std::span<const TrainingExample> examples,
                             const NaiveBayesConfig& config = {}) {
    if (config.min_n < 1 || config.max_n > 3 || config.min_n > config.max_n) {
      throw Error(ErrorCode::kDegenerateTrainingSet, "n-gram range must lie in 1..3");
    }
    if (!(config.alpha > 0)) {
      throw Error(ErrorCode::kDegenerateTrainingSet, "alpha must be positive");
    }
    BaselineModel m;
    m.config_ = config;
    std::array<std::uint64_t, 2> docs = {0, 0};
    std::array<double, 2> totals = {0, 0};
    std::vector<std::array<double, 2>> counts;
    std::vector<NgramKey> keys;
    for (const TrainingExample& ex : examples) {
      const auto c = static_cast<std::size_t>(collapse_to_binary(ex.label).id());
      ++docs[c];
      m.for_each_ngram(ex.text, [&](NgramKey key) {
        auto [it, inserted] =
            m.vocab_.try_emplace(key, static_cast<std::uint32_t>(keys.size()));
        if (inserted) {
          keys.push_back(key);
          counts.push_back({0, 0});
        }
        counts[it->second][c] += 1;
        totals[c] += 1;
      });
    }
    if (docs[0] == 0 || docs[1] == 0) {
      throw Error(ErrorCode::kDegenerateTrainingSet,
                  docs[0] == 0 ? "no NONE examples" : "no HATE examples");
    }
    const double n = static_cast<double>(docs[0] + docs[1]);
    const double v = static_cast<double>(keys.size());
    for (std::size_t c = 0; c < 2; ++c) {
      m.log_prior_[c] = std::log(static_cast<double>(docs[c]) / n);
    }
    m.log_likelihood_.resize(keys.size());
    for (std::size_t f = 0; f < keys.size(); ++f) {
      for (std::size_t c = 0; c < 2; ++c) {
        m.log_likelihood_[f][c] = std::log((counts[f][c] + config.alpha) /
                                           (totals[c] + config.alpha * v));
      }
    }
    return m;
  }

  // Joint log scores (NONE, HATE). Unseen n-grams contribute nothing.
  std::array<double, 2> log_scores(const CleanText& text) const {
    std::array<double, 2> s = log_prior_;
    for_each_ngram(text, [&](NgramKey key) {
      const auto it = vocab_.find(key);
      if (it == vocab_.end()) return;
      s[0] += log_likelihood_[it->second][0];
      s[1] += log_likelihood_[it->second][1];
    });
    return s;
  }

  double hate_probability(const CleanText& text) const {
    const auto s = log_scores(text);
    return 1.0 / (1.0 + std::exp(s[0] - s[1]));
  }

  // Argmax decision (threshold 0.5; ties go to NONE).
  BinaryPosterior classify(const CleanText& text) const {
    const double p = hate_probability(text);
    if (p > 0.5) return {labels::kBinaryHate, p};
    return {labels::kBinaryNone, 1.0 - p};
  }

  const NaiveBayesConfig& config() const { return config_; }
  std::size_t vocabulary_size() const { return vocab_.size(); }

  nlohmann::ordered_json to_json() const {
    std::vector<std::pair<NgramKey, std::uint32_t>> entries(vocab_.begin(),
                                                            vocab_.end());
    std::sort(entries.begin(), entries.end());
    nlohmann::ordered_json j;
    j["kind"] = "char-ngram-naive-bayes";
    j["min_n"] = config_.min_n;
    j["max_n"] = config_.max_n;
    j["alpha"] = config_.alpha;
    j["lowercase"] = config_.lowercase;
    j["classes"] = {"NONE", "HATE"};
    j["log_prior"] = log_prior_;
    nlohmann::ordered_json vocab = nlohmann::ordered_json::array();
    for (const auto& [key, index] : entries) {
      vocab.push_back({key_to_string(key), log_likelihood_[index][0],
                       log_likelihood_[index][1]});
    }
    j["vocabulary"] = std::move(vocab);
    return j;
  }

  static BaselineModel from_json(const nlohmann::json& j) {
    BaselineModel m;
    try {
      m.config_.min_n = j.at("min_n").get<int>();
      m.config_.max_n = j.at("max_n").get<int>();
      m.config_.alpha = j.at("alpha").get<double>();
      m.config_.lowercase = j.at("lowercase").get<bool>();
      m.log_prior_ = j.at("log_prior").get<std::array<double, 2>>();
      for (const auto& e : j.at("vocabulary")) {
        const std::u32string cps = utf8::decode(e.at(0).get<std::string>());
        if (cps.empty() || cps.size() > 3) {
          throw Error(ErrorCode::kMalformedRecord, "bad n-gram in model");
        }
        m.vocab_.emplace(pack(cps), static_cast<std::uint32_t>(m.vocab_.size()));
        m.log_likelihood_.push_back({e.at(1).get<double>(), e.at(2).get<double>()});
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kMalformedRecord, std::string("model: ") + e.what());
    }
    return m;
  }

  friend bool operator==(const BaselineModel& a, const BaselineModel& b) {
    return a.to_json() == b.to_json();
  }

 private:
  static constexpr int kBitsPerChar = 21;

  static NgramKey pack(std::u32string_view cps) {
    NgramKey key = 0;
    for (std::size_t i = 0; i < cps.size(); ++i) {
      key |= static_cast<NgramKey>(cps[i] + 1) << (kBitsPerChar * i);
    }
    return key;
  }

  static std::string key_to_string(NgramKey key) {
    std::string out;
    while (key != 0) {
      utf8::append(out, static_cast<char32_t>((key & 0x1FFFFF) - 1));
      key >>= kBitsPerChar;
    }
    return out;
  }

  template <typename Fn>
  void for_each_ngram(const CleanText& text, Fn&& fn) const {
    std::u32string cps = utf8::decode(text.text());
    if (config_.lowercase) {
      for (char32_t& c : cps) {
        c = static_cast<char32_t>(u_tolower(static_cast<UChar32>(c)));
      }
    }
    for (int n = config_.min_n; n <= config_.max_n; ++n) {
      const auto len = static_cast<std::size_t>(n);
      for (std::size_t i = 0; i + len <= cps.size(); ++i) {
        fn(pack(std::u32string_view(cps).substr(i, len)));
      }
    }
  }

  NaiveBayesConfig config_;
  std::unordered_map<NgramKey, std::uint32_t> vocab_;
  std::array<double, 2> log_prior_ = {0, 0};
  std::vector<std::array<double, 2>> log_likelihood_;
};

}  // namespace hsd
