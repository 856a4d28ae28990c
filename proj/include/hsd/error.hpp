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

#include <stdexcept>
#include <string>
#include <string_view>

namespace hsd {

enum class ErrorCode {
  kInvalidUtf8,
  kInvalidSpan,
  kOddTagCount,
  kAlignmentFailure,
  kMalformedIob,
  kLabelTaskMismatch,
  kTaskMismatch,
  kEmptyInput,
  kMissingTask,
  kDegenerateTrainingSet,
  kRemoteUnavailable,
  kInsufficientClean,
  kSchemaMismatch,
  kMalformedRecord,
  kIo,
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidUtf8: return "InvalidUtf8";
    case ErrorCode::kInvalidSpan: return "InvalidSpan";
    case ErrorCode::kOddTagCount: return "OddTagCount";
    case ErrorCode::kAlignmentFailure: return "AlignmentFailure";
    case ErrorCode::kMalformedIob: return "MalformedIob";
    case ErrorCode::kLabelTaskMismatch: return "LabelTaskMismatch";
    case ErrorCode::kTaskMismatch: return "TaskMismatch";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kMissingTask: return "MissingTask";
    case ErrorCode::kDegenerateTrainingSet: return "DegenerateTrainingSet";
    case ErrorCode::kRemoteUnavailable: return "RemoteUnavailable";
    case ErrorCode::kInsufficientClean: return "InsufficientClean";
    case ErrorCode::kSchemaMismatch: return "SchemaMismatch";
    case ErrorCode::kMalformedRecord: return "MalformedRecord";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

// All library failures surface as hsd::Error carrying a stable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  // The message without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace hsd
