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

#include "core/corpus.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>

#include "core/error.h"

namespace dialobust {

std::string_view TraceKindName(TraceKind kind) {
  switch (kind) {
    case TraceKind::kHesitation: return "hesitation";
    case TraceKind::kRestart: return "restart";
    case TraceKind::kCorrection: return "correction";
    case TraceKind::kOodTurn: return "ood_turn";
    case TraceKind::kOodSegment: return "ood_segment";
    case TraceKind::kTurnDropout: return "turn_dropout";
    case TraceKind::kCounterfeit: return "counterfeit";
  }
  return "";
}

std::optional<TraceKind> ParseTraceKind(std::string_view name) {
  for (TraceKind kind : kAllTraceKinds) {
    if (TraceKindName(kind) == name) return kind;
  }
  return std::nullopt;
}

bool IsUtteranceLevel(TraceKind kind) {
  return kind == TraceKind::kHesitation || kind == TraceKind::kRestart ||
         kind == TraceKind::kCorrection || kind == TraceKind::kOodSegment;
}

bool IsTurnInsertion(TraceKind kind) {
  return kind == TraceKind::kOodTurn || kind == TraceKind::kCounterfeit;
}

bool Turn::HasTrace(TraceKind kind) const {
  return std::any_of(provenance.begin(), provenance.end(),
                     [kind](const auto& t) { return t.kind == kind; });
}

std::vector<std::string> Corpus::Vocab() const {
  std::set<std::string> vocab;
  for (const auto& dialogue : dialogues) {
    for (const auto& turn : dialogue.turns) {
      vocab.insert(turn.tokens.begin(), turn.tokens.end());
    }
  }
  return {vocab.begin(), vocab.end()};
}

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(
          static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::string JoinTokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

void CheckCorpusInvariants(const Corpus& corpus) {
  std::set<std::string> ids;
  for (std::size_t d = 0; d < corpus.dialogues.size(); ++d) {
    const Dialogue& dialogue = corpus.dialogues[d];
    const std::string where = "dialogue '" + dialogue.id + "'";
    if (!ids.insert(dialogue.id).second) {
      throw Error(ErrorKind::kSchemaViolation, "duplicate id in " + where);
    }
    if (dialogue.rating && (*dialogue.rating < 1.0 || *dialogue.rating > 5.0)) {
      throw Error(ErrorKind::kSchemaViolation, "rating outside [1, 5] in " + where);
    }
    for (std::size_t t = 0; t < dialogue.turns.size(); ++t) {
      const Turn& turn = dialogue.turns[t];
      const std::string at = where + " turn " + std::to_string(t);
      for (const auto& token : turn.tokens) {
        if (token.empty() ||
            std::any_of(token.begin(), token.end(), [](char c) {
              return std::isspace(static_cast<unsigned char>(c));
            })) {
          throw Error(ErrorKind::kSchemaViolation,
                      "empty or whitespace-bearing token in " + at);
        }
      }
      if (turn.tags && turn.tags->size() != turn.tokens.size()) {
        throw Error(ErrorKind::kSchemaViolation,
                    "tags/tokens length mismatch in " + at);
      }
      if (turn.features) {
        for (int flag : turn.features->action_mask) {
          if (flag != 0 && flag != 1) {
            throw Error(ErrorKind::kSchemaViolation,
                        "action mask entry not 0/1 in " + at);
          }
        }
      }
    }
  }
}

Corpus ParseCorpus(std::string_view text, CorpusFormat format) {
  return format == CorpusFormat::kBabi ? ParseBabi(text) : ParseJsonl(text);
}

std::string WriteCorpus(const Corpus& corpus, CorpusFormat format) {
  return format == CorpusFormat::kBabi ? WriteBabi(corpus)
                                       : WriteJsonl(corpus);
}

}  // namespace dialobust
