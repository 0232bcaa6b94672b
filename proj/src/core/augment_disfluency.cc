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
#include "core/parallel.h"

namespace dialobust {
namespace {

// Phrase-level corrections look for a preposition at most this many tokens
// before the slot value.
constexpr std::size_t kMaxPhraseGap = 3;

// Positions that belong to an existing disfluency: non-fluent tags and every
// token of a repair structure's extent.
struct Occupancy {
  std::vector<RepairStructure> structures;
  std::vector<bool> involved;

  explicit Occupancy(const TaggedUtterance& u)
      : structures(ExtractRepairs(u.tags)), involved(u.tags.size(), false) {
    for (std::size_t i = 0; i < u.tags.size(); ++i) {
      involved[i] = !u.tags[i].is_fluent();
    }
    for (const auto& s : structures) {
      const IndexRange extent = s.Extent();
      for (std::size_t i = extent.begin; i < extent.end; ++i) involved[i] = true;
    }
  }

  // Inserting tokens at boundary b (before token b) keeps every retrace
  // intact unless b falls between a reparandum start and the end of its
  // repair.
  bool SplitsStructure(std::size_t b) const {
    return std::any_of(structures.begin(), structures.end(), [b](const auto& s) {
      const std::size_t end = std::max(s.repair.end, s.repair.begin + 1);
      return s.reparandum.begin < b && b < end;
    });
  }

  bool AllFree(IndexRange range) const {
    for (std::size_t i = range.begin; i < range.end; ++i) {
      if (involved[i]) return false;
    }
    return true;
  }

  std::size_t FirstInvolved() const {
    const auto it = std::find(involved.begin(), involved.end(), true);
    return static_cast<std::size_t>(it - involved.begin());
  }
};

void RequireTagged(const TaggedUtterance& u) {
  if (u.tags.size() != u.tokens.size()) {
    throw Error(ErrorKind::kInvalidSequence, "tags/tokens length mismatch");
  }
}

// Inserts `tokens` at `at` with a constant tag.
void InsertTokens(TaggedUtterance& u, std::size_t at,
                  const std::vector<std::string>& tokens, DisfluencyTag tag) {
  u.tokens.insert(u.tokens.begin() + static_cast<std::ptrdiff_t>(at),
                  tokens.begin(), tokens.end());
  u.tags.insert(u.tags.begin() + static_cast<std::ptrdiff_t>(at), tokens.size(),
                tag);
}

// Tags `repair` as a substitution retracing `retrace` tokens and returns the
// tags it replaced.
std::vector<std::string> TagRepair(TaggedUtterance& u, IndexRange repair,
                                   std::size_t retrace) {
  std::vector<std::string> previous;
  for (std::size_t i = repair.begin; i < repair.end; ++i) {
    previous.push_back(u.tags[i].Render());
  }
  const int n = static_cast<int>(retrace);
  if (repair.size() == 1) {
    u.tags[repair.begin] =
        DisfluencyTag::ExtendedRepairOnset(n, RepairQualifier::kEndSub);
  } else {
    u.tags[repair.begin] =
        DisfluencyTag::ExtendedRepairOnset(n, RepairQualifier::kMid);
    u.tags[repair.end - 1] = DisfluencyTag::RepairEndSub();
  }
  return previous;
}

template <typename T>
const T& Pick(const std::vector<T>& items, Rng& rng) {
  return items[rng.Index(items.size())];
}

// Inserts `copy` (fluent) followed by `interregnum` (edit) at `at`, where the
// original tokens [at, at + repair_len) become the repair.
void InsertRepair(TaggedUtterance& u, TraceKind kind, std::size_t at,
                  const std::vector<std::string>& reparandum,
                  const std::vector<std::string>& interregnum,
                  std::size_t repair_len) {
  InsertTokens(u, at, interregnum, DisfluencyTag::Edit());
  InsertTokens(u, at, reparandum, DisfluencyTag::Fluent());
  const std::size_t inserted = reparandum.size() + interregnum.size();
  const IndexRange repair{at + inserted, at + inserted + repair_len};
  AugmentationTrace trace;
  trace.kind = kind;
  trace.span = {at, at + inserted};
  trace.original_tags = TagRepair(u, repair, inserted);
  u.provenance.push_back(std::move(trace));
}

bool IsPreposition(const DisfluencyAugmentConfig& config,
                   const std::string& token) {
  return std::find(config.prepositions.begin(), config.prepositions.end(),
                   token) != config.prepositions.end();
}

}  // namespace

std::vector<SlotSpan> FindSlotSpans(
    const std::vector<std::string>& tokens,
    const std::map<std::string, std::vector<TokenSequence>>& lexicon) {
  std::vector<SlotSpan> spans;
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t best_len = 0;
    const std::string* best_type = nullptr;
    for (const auto& [type, values] : lexicon) {
      for (const auto& value : values) {
        if (value.empty() || value.size() <= best_len ||
            i + value.size() > tokens.size()) {
          continue;
        }
        if (std::equal(value.begin(), value.end(), tokens.begin() + i)) {
          best_len = value.size();
          best_type = &type;
        }
      }
    }
    if (best_len > 0) {
      spans.push_back({{i, i + best_len}, *best_type});
      i += best_len;
    } else {
      ++i;
    }
  }
  return spans;
}

TaggedUtterance AugmentHesitation(const TaggedUtterance& input,
                                  const DisfluencyAugmentConfig& config,
                                  Rng& rng) {
  RequireTagged(input);
  if (input.tokens.empty()) {
    throw Error(ErrorKind::kEmptyUtterance, "cannot add a hesitation");
  }
  const Occupancy occupancy(input);
  const std::size_t n = input.tokens.size();
  std::vector<std::size_t> boundaries;
  for (std::size_t b = 1; b < n; ++b) {
    if (!occupancy.SplitsStructure(b)) boundaries.push_back(b);
  }
  if (boundaries.empty()) boundaries.push_back(n);
  const std::size_t at = Pick(boundaries, rng);
  const auto& filler = Pick(config.hesitation_templates, rng);

  TaggedUtterance out = input;
  InsertTokens(out, at, filler, DisfluencyTag::Edit());
  AugmentationTrace trace;
  trace.kind = TraceKind::kHesitation;
  trace.span = {at, at + filler.size()};
  out.provenance.push_back(std::move(trace));
  return out;
}

TaggedUtterance AugmentHesitation(const std::vector<std::string>& tokens,
                                  const DisfluencyAugmentConfig& config,
                                  Rng& rng) {
  return AugmentHesitation(TaggedUtterance::Fluent(tokens), config, rng);
}

TaggedUtterance AugmentRestart(const TaggedUtterance& input,
                               const DisfluencyAugmentConfig& config,
                               Rng& rng) {
  RequireTagged(input);
  const Occupancy occupancy(input);
  const std::size_t n = input.tokens.size();
  std::size_t start = 0;
  std::size_t length = 0;
  if (config.restart_kind == RestartKind::kClausal) {
    if (n < 2) {
      throw Error(ErrorKind::kRestartNotApplicable,
                  "clausal restart needs at least two tokens");
    }
    const std::size_t max_len = std::min(n - 1, occupancy.FirstInvolved());
    if (max_len < 1) {
      throw Error(ErrorKind::kRestartNotApplicable,
                  "utterance starts inside a disfluency");
    }
    length = 1 + rng.Index(max_len);
  } else {
    struct Candidate {
      std::size_t at;
      std::size_t max_len;
    };
    std::vector<Candidate> candidates;
    bool any_preposition = false;
    for (std::size_t p = 0; p < n; ++p) {
      if (!IsPreposition(config, input.tokens[p])) continue;
      any_preposition = true;
      std::size_t free_run = 0;
      while (p + free_run < n && !occupancy.involved[p + free_run]) ++free_run;
      const std::size_t max_len =
          std::min({static_cast<std::size_t>(config.pp_restart_max_len),
                    free_run, n - p - 1});
      if (max_len >= 1) candidates.push_back({p, max_len});
    }
    if (!any_preposition) {
      throw Error(ErrorKind::kNoPrepositionFound,
                  "'" + JoinTokens(input.tokens) + "'");
    }
    if (candidates.empty()) {
      throw Error(ErrorKind::kRestartNotApplicable,
                  "no preposition-initial phrase is free of disfluencies");
    }
    const Candidate& chosen = Pick(candidates, rng);
    start = chosen.at;
    length = 1 + rng.Index(chosen.max_len);
  }
  std::vector<std::string> interregnum;
  if (rng.Bernoulli(config.p_interregnum)) {
    interregnum = Pick(config.interregnum_templates, rng);
  }
  const std::vector<std::string> copy(
      input.tokens.begin() + static_cast<std::ptrdiff_t>(start),
      input.tokens.begin() + static_cast<std::ptrdiff_t>(start + length));
  TaggedUtterance out = input;
  InsertRepair(out, TraceKind::kRestart, start, copy, interregnum, length);
  return out;
}

TaggedUtterance AugmentRestart(const std::vector<std::string>& tokens,
                               const DisfluencyAugmentConfig& config,
                               Rng& rng) {
  return AugmentRestart(TaggedUtterance::Fluent(tokens), config, rng);
}

TaggedUtterance AugmentCorrection(const TaggedUtterance& input,
                                  std::span<const SlotSpan> slots,
                                  const DisfluencyAugmentConfig& config,
                                  Rng& rng) {
  RequireTagged(input);
  const Occupancy occupancy(input);
  const std::size_t n = input.tokens.size();

  struct Eligible {
    const SlotSpan* slot;
    std::vector<const TokenSequence*> alternatives;
  };
  std::vector<Eligible> eligible;
  for (const SlotSpan& slot : slots) {
    if (slot.range.empty() || slot.range.end > n) continue;
    const auto values = config.slot_lexicon.find(slot.slot_type);
    if (values == config.slot_lexicon.end() || values->second.size() < 2) continue;
    if (!occupancy.AllFree(slot.range)) continue;
    const auto first = input.tokens.begin() + static_cast<std::ptrdiff_t>(slot.range.begin);
    const auto last = input.tokens.begin() + static_cast<std::ptrdiff_t>(slot.range.end);
    Eligible e{&slot, {}};
    for (const auto& value : values->second) {
      if (!std::equal(value.begin(), value.end(), first, last)) {
        e.alternatives.push_back(&value);
      }
    }
    if (!e.alternatives.empty()) eligible.push_back(std::move(e));
  }
  if (eligible.empty()) {
    throw Error(ErrorKind::kNoEligibleSlot,
                "'" + JoinTokens(input.tokens) + "'");
  }
  const Eligible& chosen = Pick(eligible, rng);
  const IndexRange value = chosen.slot->range;
  const TokenSequence& wrong = *Pick(chosen.alternatives, rng);
  const TokenSequence& marker = Pick(config.correction_marker_templates, rng);

  // Phrase for a long-distance correction: preposition .. value [+ head].
  std::optional<IndexRange> phrase;
  for (std::size_t gap = 1; gap <= kMaxPhraseGap && gap <= value.begin; ++gap) {
    const std::size_t p = value.begin - gap;
    if (occupancy.involved[p]) break;
    if (IsPreposition(config, input.tokens[p])) {
      std::size_t end = value.end;
      if (end < n && !occupancy.involved[end] &&
          !IsPreposition(config, input.tokens[end])) {
        ++end;
      }
      phrase = IndexRange{p, end};
      break;
    }
  }

  TaggedUtterance out = input;
  if (phrase && rng.Bernoulli(config.long_distance_ratio)) {
    std::vector<std::string> wrong_phrase(
        input.tokens.begin() + static_cast<std::ptrdiff_t>(phrase->begin),
        input.tokens.begin() + static_cast<std::ptrdiff_t>(value.begin));
    wrong_phrase.insert(wrong_phrase.end(), wrong.begin(), wrong.end());
    wrong_phrase.insert(
        wrong_phrase.end(),
        input.tokens.begin() + static_cast<std::ptrdiff_t>(value.end),
        input.tokens.begin() + static_cast<std::ptrdiff_t>(phrase->end));
    InsertRepair(out, TraceKind::kCorrection, phrase->begin, wrong_phrase,
                 marker, phrase->size());
  } else {
    InsertRepair(out, TraceKind::kCorrection, value.begin, wrong, marker,
                 value.size());
  }
  return out;
}

TaggedUtterance AugmentCorrection(const std::vector<std::string>& tokens,
                                  std::span<const SlotSpan> slots,
                                  const DisfluencyAugmentConfig& config,
                                  Rng& rng) {
  return AugmentCorrection(TaggedUtterance::Fluent(tokens), slots, config, rng);
}

namespace {

bool IsSkippable(const Error& e) {
  return e.kind() == ErrorKind::kNoEligibleSlot ||
         e.kind() == ErrorKind::kRestartNotApplicable ||
         e.kind() == ErrorKind::kNoPrepositionFound;
}

void AugmentUserTurn(Turn& turn, const DisfluencyAugmentConfig& config,
                     Rng& rng) {
  if (turn.tokens.empty()) return;
  const bool hesitation = rng.Bernoulli(config.p_hesitation);
  const bool correction = rng.Bernoulli(config.p_correction);
  const bool restart = rng.Bernoulli(config.p_restart);

  const bool had_tags = turn.tags.has_value();
  TaggedUtterance u;
  u.tokens = turn.tokens;
  u.tags = had_tags ? *turn.tags
                    : std::vector<DisfluencyTag>(turn.tokens.size());
  int applied = 0;
  auto attempt = [&](bool drawn, auto&& step) {
    if (!drawn || applied >= config.max_per_turn) return;
    try {
      u = step();
      ++applied;
    } catch (const Error& e) {
      if (!IsSkippable(e)) throw;
    }
  };
  attempt(hesitation, [&] { return AugmentHesitation(u, config, rng); });
  attempt(correction, [&] {
    const auto slots = FindSlotSpans(u.tokens, config.slot_lexicon);
    return AugmentCorrection(u, slots, config, rng);
  });
  attempt(restart, [&] { return AugmentRestart(u, config, rng); });
  if (applied == 0) return;

  u.provenance.front().created_tags = !had_tags;
  turn.tokens = std::move(u.tokens);
  turn.tags = std::move(u.tags);
  for (auto& trace : u.provenance) turn.provenance.push_back(std::move(trace));
}

}  // namespace

Corpus AugmentCorpus(const Corpus& corpus,
                     const DisfluencyAugmentConfig& config, std::uint64_t seed,
                     unsigned jobs) {
  config.Validate();
  Corpus out = corpus;
  ParallelFor(out.dialogues.size(), jobs, [&](std::size_t d) {
    Rng rng(MixSeed(seed, d));
    for (Turn& turn : out.dialogues[d].turns) {
      if (turn.is_user()) AugmentUserTurn(turn, config, rng);
    }
  });
  return out;
}

}  // namespace dialobust
