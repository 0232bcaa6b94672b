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

#include <algorithm>
#include <string>
#include <vector>

#include "core/augment.h"
#include "core/error.h"

namespace dialobust {

Turn StripTurn(const Turn& turn) {
  Turn out = turn;
  out.provenance.clear();
  for (auto it = turn.provenance.rbegin(); it != turn.provenance.rend(); ++it) {
    const AugmentationTrace& trace = *it;
    if (IsTurnInsertion(trace.kind)) continue;
    if (trace.kind == TraceKind::kTurnDropout) {
      if (out.is_user()) {
        out.tokens = trace.original;
        if (trace.original_tags.empty()) {
          out.tags.reset();
        } else {
          out.tags = ParseTags(trace.original_tags);
        }
      } else if (trace.original.empty()) {
        out.action_label.reset();
      } else {
        out.action_label = trace.original.front();
      }
      continue;
    }
    // Utterance-level insertion.
    const IndexRange span = trace.span;
    if (span.end > out.tokens.size() ||
        span.end + trace.original_tags.size() > out.tokens.size() ||
        (!trace.original_tags.empty() && !out.tags)) {
      throw Error(ErrorKind::kSchemaViolation,
                  std::string(TraceKindName(trace.kind)) +
                      " trace does not fit its turn");
    }
    const auto first = static_cast<std::ptrdiff_t>(span.begin);
    const auto last = static_cast<std::ptrdiff_t>(span.end);
    out.tokens.erase(out.tokens.begin() + first, out.tokens.begin() + last);
    if (out.tags) {
      out.tags->erase(out.tags->begin() + first, out.tags->begin() + last);
      for (std::size_t k = 0; k < trace.original_tags.size(); ++k) {
        (*out.tags)[span.begin + k] = ParseTag(trace.original_tags[k]);
      }
    }
    if (trace.created_tags) out.tags.reset();
  }
  return out;
}

Corpus StripAugmentations(const Corpus& corpus) {
  Corpus out;
  out.dialogues.reserve(corpus.dialogues.size());
  for (const Dialogue& dialogue : corpus.dialogues) {
    Dialogue stripped = dialogue;
    stripped.turns.clear();
    for (const Turn& turn : dialogue.turns) {
      const bool inserted =
          std::any_of(turn.provenance.begin(), turn.provenance.end(),
                      [](const auto& t) { return IsTurnInsertion(t.kind); });
      if (!inserted) stripped.turns.push_back(StripTurn(turn));
    }
    out.dialogues.push_back(std::move(stripped));
  }
  return out;
}

}  // namespace dialobust
