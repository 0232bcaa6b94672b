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

#ifndef DIALOBUST_CORE_DISFLUENCY_H_
#define DIALOBUST_CORE_DISFLUENCY_H_

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "core/corpus.h"
#include "core/tags.h"

namespace dialobust {

struct TaggedUtterance {
  std::vector<std::string> tokens;
  std::vector<DisfluencyTag> tags;
  std::vector<AugmentationTrace> provenance;

  // All-fluent utterance over `tokens`.
  static TaggedUtterance Fluent(std::vector<std::string> tokens);

  friend bool operator==(const TaggedUtterance&,
                         const TaggedUtterance&) = default;
};

enum class ViolationKind {
  kLengthMismatch,
  kRetracePastStart,  // onset at i retraces n > i tokens
  kUnclosedMid,       // <rpMid/> onset never closed by <rpEndSub>
  kStrayEndSub,       // <rpEndSub> without an open multi-token repair
  kNestedRepair,      // onset while a multi-token repair is open (ends it)
  kEmptyReparandum,   // the retrace span holds only edit tokens
};

struct Violation {
  ViolationKind kind;
  std::size_t position;

  std::string Describe() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string_view ViolationKindName(ViolationKind kind);

// Empty result means the sequence is well formed.
std::vector<Violation> ValidateSequence(std::span<const DisfluencyTag> tags);
std::vector<Violation> ValidateSequence(const TaggedUtterance& utterance);

enum class RepairKind { kSubstitution, kDeletion };

// reparandum < interregnum < repair, contiguous. A deletion has an empty
// repair positioned at its onset token, which is ordinary continuation.
struct RepairStructure {
  IndexRange reparandum;
  IndexRange interregnum;
  IndexRange repair;
  RepairKind kind = RepairKind::kSubstitution;

  // [reparandum.begin, max(repair.end, interregnum.end)).
  IndexRange Extent() const;

  friend bool operator==(const RepairStructure&,
                         const RepairStructure&) = default;
};

// One structure per repair onset, in onset order. For an onset at i with
// retrace n the reparandum starts at i - n; the interregnum is the maximal
// run of edit tokens ending at i - 1 (clipped to the retrace span); the
// reparandum is the rest of the retrace span. Multi-token repairs run to the
// closing <rpEndSub>. Throws kInvalidSequence if validation fails.
std::vector<RepairStructure> ExtractRepairs(std::span<const DisfluencyTag> tags);

// Same rules, but never throws: onsets that retrace past the start or leave
// an empty reparandum are skipped, an unclosed or interrupted multi-token
// repair ends at its onset, stray <rpEndSub> tags are ignored. Used to score
// predicted tag sequences, which need not be well formed.
std::vector<RepairStructure> ExtractRepairsLenient(
    std::span<const DisfluencyTag> tags);

// Removes edit tokens, reparanda and interregna. Throws kInvalidSequence on
// invalid input.
std::vector<std::string> Cleanup(const TaggedUtterance& utterance);

struct OpenRepair {
  std::size_t onset = 0;
  int retrace = 0;

  friend bool operator==(const OpenRepair&, const OpenRepair&) = default;
};

struct TrackerState {
  std::optional<OpenRepair> open_repair;
  std::vector<std::string> cleaned_prefix;
  bool closed_structure = false;
};

// Word-by-word repair tracker. Single owner; not thread-safe.
//
// After every Feed() the cleaned prefix equals Cleanup() of the utterance
// seen so far, with an open multi-token repair's tokens kept. Feeding after
// Finish() throws kOutOfOrder; structurally invalid input throws
// kInvalidSequence.
class IncrementalTracker {
 public:
  const TrackerState& Feed(std::string token, DisfluencyTag tag);
  // Marks the end of the utterance and returns the final cleaned tokens.
  std::vector<std::string> Finish();

  const TrackerState& state() const { return state_; }
  std::size_t size() const { return tags_.size(); }

 private:
  std::vector<std::string> tokens_;
  std::vector<DisfluencyTag> tags_;
  std::vector<std::size_t> kept_;  // raw indices surviving so far
  TrackerState state_;
  bool finished_ = false;
};

struct RepetitionTaggerOptions {
  std::set<std::string> fillers = {"uh", "uhm", "um"};
};

// Rule baseline: filler words are edits; an immediately repeated token block
// (longest first, fillers skipped) is tagged as a repair of its first copy.
std::vector<DisfluencyTag> TagRepetitions(
    std::span<const std::string> tokens,
    const RepetitionTaggerOptions& options = {});

}  // namespace dialobust

#endif  // DIALOBUST_CORE_DISFLUENCY_H_
