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

#ifndef DIALOBUST_CORE_CORPUS_H_
#define DIALOBUST_CORE_CORPUS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/tags.h"

namespace dialobust {

// Half-open index range [begin, end).
struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool empty() const { return begin == end; }
  bool contains(std::size_t i) const { return i >= begin && i < end; }

  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

enum class TraceKind {
  kHesitation,
  kRestart,
  kCorrection,
  kOodTurn,
  kOodSegment,
  kTurnDropout,
  kCounterfeit,
};

inline constexpr TraceKind kAllTraceKinds[] = {
    TraceKind::kHesitation, TraceKind::kRestart,    TraceKind::kCorrection,
    TraceKind::kOodTurn,    TraceKind::kOodSegment, TraceKind::kTurnDropout,
    TraceKind::kCounterfeit,
};

std::string_view TraceKindName(TraceKind kind);
std::optional<TraceKind> ParseTraceKind(std::string_view name);

// Utterance-level kinds edit the tokens of the turn that carries them;
// insertion kinds mark the carrying turn as synthetic.
bool IsUtteranceLevel(TraceKind kind);
bool IsTurnInsertion(TraceKind kind);

// Provenance of one augmentation step applied to a turn.
//
// For utterance-level kinds `span` is the token range inserted into the turn,
// in the coordinates right after the step; `original_tags` holds the previous
// tags of the tokens directly after `span` that the step re-tagged (the
// repair). For turn insertions `span` is the turn's index in the dialogue at
// insertion time. For turn dropout `original` holds the replaced tokens (user
// turn) or the replaced action label (system turn; empty when there was none).
struct AugmentationTrace {
  TraceKind kind = TraceKind::kHesitation;
  IndexRange span;
  std::vector<std::string> original;
  std::vector<std::string> original_tags;
  // Set when the step attached tags to a previously untagged turn.
  bool created_tags = false;

  friend bool operator==(const AugmentationTrace&,
                         const AugmentationTrace&) = default;
};

enum class Speaker { kUser, kSystem };

struct TurnFeatures {
  std::vector<double> context_features;
  std::vector<int> action_mask;
  // Nats per token. Stored, never computed here.
  std::optional<double> reconstruction_score;
  // Previous system action as seen by this turn.
  std::optional<std::string> previous_action;

  friend bool operator==(const TurnFeatures&, const TurnFeatures&) = default;
};

struct Turn {
  Speaker speaker = Speaker::kUser;
  std::vector<std::string> tokens;
  std::optional<std::string> action_label;
  std::optional<std::vector<DisfluencyTag>> tags;
  std::optional<TurnFeatures> features;
  std::vector<AugmentationTrace> provenance;

  bool is_user() const { return speaker == Speaker::kUser; }
  bool is_system() const { return speaker == Speaker::kSystem; }
  bool HasTrace(TraceKind kind) const;

  friend bool operator==(const Turn&, const Turn&) = default;
};

struct Dialogue {
  std::string id;
  std::vector<Turn> turns;
  std::optional<double> rating;
  std::vector<std::vector<std::string>> kb_rows;

  friend bool operator==(const Dialogue&, const Dialogue&) = default;
};

struct Corpus {
  std::vector<Dialogue> dialogues;

  // Sorted, de-duplicated union of all turn tokens.
  std::vector<std::string> Vocab() const;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

// Lowercases ASCII and splits on whitespace.
std::vector<std::string> Tokenize(std::string_view text);
std::string JoinTokens(const std::vector<std::string>& tokens);

// Checks the Turn/Dialogue invariants (tag length, whitespace-free tokens,
// 0/1 action masks, unique dialogue ids). Throws kSchemaViolation-flavoured
// Error on the first problem.
void CheckCorpusInvariants(const Corpus& corpus);

// ---------------------------------------------------------------------------
// Formats.

inline constexpr std::string_view kFormatHeaderPrefix = "# dialobust-format v";
inline constexpr int kFormatVersion = 1;

enum class CorpusFormat { kBabi, kJsonl };

// bAbI dialog text.
//
//   N<SP>user tokens<TAB>system tokens     user turn + system turn
//   N<SP>api_call tokens                   system turn with no user text
//   <blank>                                ends a dialogue
//
// N counts lines from 1 inside each dialogue. Every dialogue, including the
// last one, is followed by exactly one blank line. System utterances whose
// first token is "api_call" carry the whole utterance as their action label.
// Tokens are single-space separated and kept verbatim. A leading
// "# dialobust-format vN" line is accepted and dropped. Dialogue ids are the
// 1-based position in the file.
Corpus ParseBabi(std::string_view text);
std::string WriteBabi(const Corpus& corpus);

// One JSON object per line; lossless.
Corpus ParseJsonl(std::string_view text);
std::string WriteJsonl(const Corpus& corpus);

Corpus ParseCorpus(std::string_view text, CorpusFormat format);
std::string WriteCorpus(const Corpus& corpus, CorpusFormat format);

}  // namespace dialobust

#endif  // DIALOBUST_CORE_CORPUS_H_
