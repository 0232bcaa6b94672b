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

#include "core/disfluency.h"

#include <algorithm>
#include <string>

#include "core/error.h"

namespace dialobust {
namespace {

// Start of the edit run that ends right before `onset`, not going below
// `floor`.
std::size_t InterregnumStart(std::span<const DisfluencyTag> tags,
                             std::size_t onset, std::size_t floor) {
  std::size_t start = onset;
  while (start > floor && tags[start - 1].is_edit()) --start;
  return start;
}

void RequireValid(std::span<const DisfluencyTag> tags) {
  const auto violations = ValidateSequence(tags);
  if (!violations.empty()) {
    throw Error(ErrorKind::kInvalidSequence, violations.front().Describe());
  }
}

}  // namespace

TaggedUtterance TaggedUtterance::Fluent(std::vector<std::string> tokens) {
  TaggedUtterance u;
  u.tags.assign(tokens.size(), DisfluencyTag::Fluent());
  u.tokens = std::move(tokens);
  return u;
}

std::string_view ViolationKindName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kLengthMismatch: return "LengthMismatch";
    case ViolationKind::kRetracePastStart: return "RetracePastStart";
    case ViolationKind::kUnclosedMid: return "UnclosedMid";
    case ViolationKind::kStrayEndSub: return "StrayEndSub";
    case ViolationKind::kNestedRepair: return "NestedRepair";
    case ViolationKind::kEmptyReparandum: return "EmptyReparandum";
  }
  return "";
}

std::string Violation::Describe() const {
  return std::string(ViolationKindName(kind)) + " at token " +
         std::to_string(position);
}

std::vector<Violation> ValidateSequence(std::span<const DisfluencyTag> tags) {
  std::vector<Violation> violations;
  std::optional<std::size_t> open_mid;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    const DisfluencyTag& tag = tags[i];
    if (tag.is_onset()) {
      if (open_mid) {
        violations.push_back({ViolationKind::kNestedRepair, i});
        open_mid.reset();
      }
      const auto retrace = static_cast<std::size_t>(tag.retrace());
      if (retrace > i) {
        violations.push_back({ViolationKind::kRetracePastStart, i});
      } else if (InterregnumStart(tags, i, i - retrace) == i - retrace) {
        violations.push_back({ViolationKind::kEmptyReparandum, i});
      }
      if (tag.qualifier() == RepairQualifier::kMid) open_mid = i;
    } else if (tag.is_end_sub()) {
      if (!open_mid) {
        violations.push_back({ViolationKind::kStrayEndSub, i});
      }
      open_mid.reset();
    }
  }
  if (open_mid) violations.push_back({ViolationKind::kUnclosedMid, *open_mid});
  return violations;
}

std::vector<Violation> ValidateSequence(const TaggedUtterance& utterance) {
  if (utterance.tags.size() != utterance.tokens.size()) {
    return {{ViolationKind::kLengthMismatch,
             std::min(utterance.tags.size(), utterance.tokens.size())}};
  }
  return ValidateSequence(std::span<const DisfluencyTag>(utterance.tags));
}

IndexRange RepairStructure::Extent() const {
  return {reparandum.begin, std::max(repair.end, interregnum.end)};
}

std::vector<RepairStructure> ExtractRepairsLenient(
    std::span<const DisfluencyTag> tags) {
  std::vector<RepairStructure> structures;
  std::optional<std::size_t> open;  // index into `structures`
  auto close_at_onset = [&] {
    if (!open) return;
    auto& s = structures[*open];
    s.repair.end = s.repair.begin + 1;
    open.reset();
  };
  for (std::size_t i = 0; i < tags.size(); ++i) {
    const DisfluencyTag& tag = tags[i];
    if (tag.is_onset()) {
      close_at_onset();
      const auto retrace = static_cast<std::size_t>(tag.retrace());
      if (retrace > i) continue;
      const std::size_t begin = i - retrace;
      const std::size_t inter = InterregnumStart(tags, i, begin);
      if (inter == begin) continue;
      RepairStructure s;
      s.reparandum = {begin, inter};
      s.interregnum = {inter, i};
      switch (tag.qualifier()) {
        case RepairQualifier::kEndSub:
          s.repair = {i, i + 1};
          break;
        case RepairQualifier::kEndDel:
          s.repair = {i, i};
          s.kind = RepairKind::kDeletion;
          break;
        case RepairQualifier::kMid:
          s.repair = {i, i + 1};
          open = structures.size();
          break;
      }
      structures.push_back(s);
    } else if (tag.is_end_sub() && open) {
      structures[*open].repair.end = i + 1;
      open.reset();
    }
  }
  close_at_onset();
  return structures;
}

std::vector<RepairStructure> ExtractRepairs(
    std::span<const DisfluencyTag> tags) {
  RequireValid(tags);
  return ExtractRepairsLenient(tags);
}

std::vector<std::string> Cleanup(const TaggedUtterance& utterance) {
  if (utterance.tags.size() != utterance.tokens.size()) {
    throw Error(ErrorKind::kInvalidSequence, "tags/tokens length mismatch");
  }
  const std::span<const DisfluencyTag> tags(utterance.tags);
  std::vector<bool> removed(tags.size(), false);
  for (std::size_t i = 0; i < tags.size(); ++i) removed[i] = tags[i].is_edit();
  for (const RepairStructure& s : ExtractRepairs(tags)) {
    for (std::size_t i = s.reparandum.begin; i < s.interregnum.end; ++i) {
      removed[i] = true;
    }
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (!removed[i]) out.push_back(utterance.tokens[i]);
  }
  return out;
}

const TrackerState& IncrementalTracker::Feed(std::string token,
                                             DisfluencyTag tag) {
  if (finished_) {
    throw Error(ErrorKind::kOutOfOrder, "token fed after end of utterance");
  }
  const std::size_t i = tags_.size();
  state_.closed_structure = false;
  if (tag.is_onset()) {
    if (state_.open_repair) {
      throw Error(ErrorKind::kInvalidSequence,
                  "nested repair at token " + std::to_string(i));
    }
    const auto retrace = static_cast<std::size_t>(tag.retrace());
    if (retrace > i) {
      throw Error(ErrorKind::kInvalidSequence,
                  "retrace past start at token " + std::to_string(i));
    }
    const std::size_t begin = i - retrace;
    if (InterregnumStart(tags_, i, begin) == begin) {
      throw Error(ErrorKind::kInvalidSequence,
                  "empty reparandum at token " + std::to_string(i));
    }
    while (!kept_.empty() && kept_.back() >= begin) kept_.pop_back();
    state_.cleaned_prefix.resize(kept_.size());
    if (tag.qualifier() == RepairQualifier::kMid) {
      state_.open_repair = OpenRepair{i, tag.retrace()};
    } else {
      state_.closed_structure = true;
    }
  } else if (tag.is_end_sub()) {
    if (!state_.open_repair) {
      throw Error(ErrorKind::kInvalidSequence,
                  "<rpEndSub> without open repair at token " +
                      std::to_string(i));
    }
    state_.open_repair.reset();
    state_.closed_structure = true;
  }
  if (!tag.is_edit()) {
    kept_.push_back(i);
    state_.cleaned_prefix.push_back(token);
  }
  tokens_.push_back(std::move(token));
  tags_.push_back(tag);
  return state_;
}

std::vector<std::string> IncrementalTracker::Finish() {
  if (finished_) throw Error(ErrorKind::kOutOfOrder, "utterance already finished");
  if (state_.open_repair) {
    throw Error(ErrorKind::kInvalidSequence,
                "multi-token repair opened at token " +
                    std::to_string(state_.open_repair->onset) +
                    " never closed");
  }
  finished_ = true;
  return state_.cleaned_prefix;
}

std::vector<DisfluencyTag> TagRepetitions(
    std::span<const std::string> tokens,
    const RepetitionTaggerOptions& options) {
  std::vector<DisfluencyTag> tags(tokens.size(), DisfluencyTag::Fluent());
  std::vector<std::size_t> content;  // raw indices of non-filler tokens
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (options.fillers.contains(tokens[i])) {
      tags[i] = DisfluencyTag::Edit();
    } else {
      content.push_back(i);
    }
  }
  auto same_block = [&](std::size_t a, std::size_t b, std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (tokens[content[a + j]] != tokens[content[b + j]]) return false;
    }
    return true;
  };
  std::size_t idx = 0;
  while (idx < content.size()) {
    std::size_t found = 0;
    for (std::size_t k = std::min(idx, content.size() - idx); k >= 1; --k) {
      if (same_block(idx - k, idx, k)) {
        found = k;
        break;
      }
    }
    if (found == 0) {
      ++idx;
      continue;
    }
    const int retrace = static_cast<int>(content[idx] - content[idx - found]);
    if (found == 1) {
      tags[content[idx]] =
          DisfluencyTag::ExtendedRepairOnset(retrace, RepairQualifier::kEndSub);
    } else {
      tags[content[idx]] =
          DisfluencyTag::ExtendedRepairOnset(retrace, RepairQualifier::kMid);
      tags[content[idx + found - 1]] = DisfluencyTag::RepairEndSub();
    }
    idx += found;
  }
  return tags;
}

}  // namespace dialobust
