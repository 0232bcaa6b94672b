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

#ifndef DIALOBUST_CORE_ERROR_H_
#define DIALOBUST_CORE_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dialobust {

enum class ErrorKind {
  // Corpus formats.
  kMalformedLine,
  kNonMonotonicIndex,
  kEmptyDialogue,
  kUnpairedTurn,
  kSchemaViolation,
  // Tags and tag sequences.
  kUnknownTag,
  kRetraceOutOfRange,
  kInvalidSequence,
  kOutOfOrder,
  // Augmentation.
  kNoEligibleSlot,
  kNoPrepositionFound,
  kRestartNotApplicable,
  kEmptyUtterance,
  // Datasets and metrics.
  kNoRatedDialogues,
  kShapeMismatch,
  kMissingApiCall,
  kTooFewCandidates,
  kZeroCount,
  kDegenerateInput,
  // Environment.
  kInvalidConfig,
  kInvalidArgument,
  kIo,
};

// Coarse grouping used for process exit codes and C API status codes.
enum class ErrorCategory { kIo = 2, kConfig = 3, kData = 4 };

ErrorCategory CategoryOf(ErrorKind kind);
std::string_view ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const { return kind_; }
  ErrorCategory category() const { return CategoryOf(kind_); }

 private:
  ErrorKind kind_;
};

// Errors addressed to a line of an input file (1-based).
class LineError : public Error {
 public:
  LineError(ErrorKind kind, std::size_t line_no, const std::string& detail);

  std::size_t line_no() const { return line_no_; }

 private:
  std::size_t line_no_;
};

class SchemaViolation : public LineError {
 public:
  SchemaViolation(std::size_t line_no, std::string path,
                  const std::string& detail);

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace dialobust

#endif  // DIALOBUST_CORE_ERROR_H_
