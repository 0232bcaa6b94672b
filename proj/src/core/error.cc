//
// Copyright 2026 The Dialobust Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "core/error.h"

#include <string>

namespace dialobust {

ErrorCategory CategoryOf(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIo:
      return ErrorCategory::kIo;
    case ErrorKind::kInvalidConfig:
    case ErrorKind::kInvalidArgument:
      return ErrorCategory::kConfig;
    default:
      return ErrorCategory::kData;
  }
}

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedLine: return "MalformedLine";
    case ErrorKind::kNonMonotonicIndex: return "NonMonotonicIndex";
    case ErrorKind::kEmptyDialogue: return "EmptyDialogue";
    case ErrorKind::kUnpairedTurn: return "UnpairedTurn";
    case ErrorKind::kSchemaViolation: return "SchemaViolation";
    case ErrorKind::kUnknownTag: return "UnknownTag";
    case ErrorKind::kRetraceOutOfRange: return "RetraceOutOfRange";
    case ErrorKind::kInvalidSequence: return "InvalidSequence";
    case ErrorKind::kOutOfOrder: return "OutOfOrder";
    case ErrorKind::kNoEligibleSlot: return "NoEligibleSlot";
    case ErrorKind::kNoPrepositionFound: return "NoPrepositionFound";
    case ErrorKind::kRestartNotApplicable: return "RestartNotApplicable";
    case ErrorKind::kEmptyUtterance: return "EmptyUtterance";
    case ErrorKind::kNoRatedDialogues: return "NoRatedDialogues";
    case ErrorKind::kShapeMismatch: return "ShapeMismatch";
    case ErrorKind::kMissingApiCall: return "MissingApiCall";
    case ErrorKind::kTooFewCandidates: return "TooFewCandidates";
    case ErrorKind::kZeroCount: return "ZeroCount";
    case ErrorKind::kDegenerateInput: return "DegenerateInput";
    case ErrorKind::kInvalidConfig: return "InvalidConfig";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kIo: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
      kind_(kind) {}

LineError::LineError(ErrorKind kind, std::size_t line_no,
                     const std::string& detail)
    : Error(kind, "line " + std::to_string(line_no) + ": " + detail),
      line_no_(line_no) {}

SchemaViolation::SchemaViolation(std::size_t line_no, std::string path,
                                 const std::string& detail)
    : LineError(ErrorKind::kSchemaViolation, line_no,
                "at " + path + ": " + detail),
      path_(std::move(path)) {}

}  // namespace dialobust
