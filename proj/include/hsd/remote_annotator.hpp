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

// Annotator backed by an HTTP classification service.
//
//   POST {endpoint}/classify   {"texts": ["...", ...]}
//   200                        {"labels": ["HATE"|"NONE", ...],
//                               "scores": [0.97, ...]}     (scores optional)
//
// Non-200 replies, unparseable bodies and length mismatches are retried with
// exponential backoff; after the last attempt RemoteUnavailable is thrown.

#include <chrono>
#include <cstdlib>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hsd/annotator.hpp"
#include "hsd/error.hpp"
#include "httplib.h"
#include "json.hpp"

namespace hsd {

inline constexpr const char* kAnnotatorUrlEnv = "HSD_ANNOTATOR_URL";

struct RemoteOptions {
  std::chrono::milliseconds timeout{30000};
  int attempts = 3;
  std::chrono::milliseconds initial_backoff{200};
};

class RemoteAnnotator final : public Annotator {
 public:
  // endpoint: "http://host:port" with an optional path prefix.
  explicit RemoteAnnotator(std::string endpoint, RemoteOptions options = {})
      : endpoint_(std::move(endpoint)), options_(options) {
    const auto scheme_end = endpoint_.find("://");
    if (scheme_end == std::string::npos) {
      throw Error(ErrorCode::kRemoteUnavailable,
                  "endpoint needs a scheme: " + endpoint_);
    }
    const auto path_start = endpoint_.find('/', scheme_end + 3);
    if (path_start == std::string::npos) {
      origin_ = endpoint_;
    } else {
      origin_ = endpoint_.substr(0, path_start);
      path_prefix_ = endpoint_.substr(path_start);
      while (!path_prefix_.empty() && path_prefix_.back() == '/') {
        path_prefix_.pop_back();
      }
    }
    if (!httplib::Client(origin_).is_valid()) {
      throw Error(ErrorCode::kRemoteUnavailable,
                  "unsupported endpoint " + endpoint_);
    }
  }

  // Reads the endpoint from HSD_ANNOTATOR_URL.
  static std::optional<std::string> endpoint_from_env() {
    const char* v = std::getenv(kAnnotatorUrlEnv);
    if (v == nullptr || *v == '\0') return std::nullopt;
    return std::string(v);
  }

  std::vector<Annotation> classify_batch(
      std::span<const CleanText> texts) const override {
    if (texts.empty()) return {};
    nlohmann::json body;
    body["texts"] = nlohmann::json::array();
    for (const CleanText& t : texts) body["texts"].push_back(t.text());
    const std::string payload = body.dump();

    std::string last_error;
    auto backoff = options_.initial_backoff;
    for (int attempt = 1; attempt <= options_.attempts; ++attempt) {
      if (auto out = try_once(payload, texts.size(), last_error)) return *out;
      if (attempt < options_.attempts) {
        std::this_thread::sleep_for(backoff);
        backoff *= 2;
      }
    }
    throw Error(ErrorCode::kRemoteUnavailable,
                endpoint_ + " after " + std::to_string(options_.attempts) +
                    " attempts: " + last_error);
  }

  AnnotatorKind kind() const override { return AnnotatorKind::kRemote; }
  std::string id() const override { return "remote:" + endpoint_; }

 private:
  std::optional<std::vector<Annotation>> try_once(const std::string& payload,
                                                  std::size_t expected,
                                                  std::string& error) const {
    httplib::Client client(origin_);
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(options_.timeout);
    const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(
        options_.timeout - secs);
    client.set_connection_timeout(secs.count(), usecs.count());
    client.set_read_timeout(secs.count(), usecs.count());
    client.set_write_timeout(secs.count(), usecs.count());

    auto res = client.Post(path_prefix_ + "/classify", payload, "application/json");
    if (!res) {
      error = httplib::to_string(res.error());
      return std::nullopt;
    }
    if (res->status != 200) {
      error = "HTTP " + std::to_string(res->status);
      return std::nullopt;
    }
    const auto j = nlohmann::json::parse(res->body, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("labels") ||
        !j["labels"].is_array()) {
      error = "malformed response body";
      return std::nullopt;
    }
    const auto& labels_json = j["labels"];
    const nlohmann::json* scores = nullptr;
    if (j.contains("scores") && !j["scores"].is_null()) {
      scores = &j["scores"];
      if (!scores->is_array() || scores->size() != expected) {
        error = "scores length mismatch";
        return std::nullopt;
      }
    }
    if (labels_json.size() != expected) {
      error = "expected " + std::to_string(expected) + " labels, got " +
              std::to_string(labels_json.size());
      return std::nullopt;
    }
    std::vector<Annotation> out;
    out.reserve(expected);
    for (std::size_t i = 0; i < expected; ++i) {
      const auto& l = labels_json[i];
      const auto label = l.is_string()
                             ? ClassLabel::from_name(LabelSet::kBinary,
                                                     l.get<std::string>())
                             : std::nullopt;
      if (!label) {
        error = "unknown label " + l.dump();
        return std::nullopt;
      }
      double score = 1.0;
      if (scores != nullptr) {
        const auto& s = (*scores)[i];
        if (!s.is_number() || s.get<double>() < 0 || s.get<double>() > 1) {
          error = "bad score " + s.dump();
          return std::nullopt;
        }
        score = s.get<double>();
      }
      out.push_back({*label, score});
    }
    return out;
  }

  std::string endpoint_;
  std::string origin_;
  std::string path_prefix_;
  RemoteOptions options_;
};

}  // namespace hsd
