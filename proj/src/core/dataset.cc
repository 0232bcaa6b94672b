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

#include "core/dataset.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>

#include "core/error.h"
#include "core/rng.h"
#include "json.hpp"

namespace dialobust {

using Json = nlohmann::ordered_json;

StatsReport CorpusStats(const Corpus& corpus) {
  StatsReport stats;
  stats.dialogues = corpus.dialogues.size();
  std::map<TraceKind, std::size_t> with_kind;
  std::set<std::string> actions;
  for (const auto& dialogue : corpus.dialogues) {
    stats.turns += dialogue.turns.size();
    for (const auto& turn : dialogue.turns) {
      if (turn.is_system()) {
        ++stats.system_turns;
        actions.insert(turn.action_label ? *turn.action_label
                                         : JoinTokens(turn.tokens));
        continue;
      }
      ++stats.user_turns;
      std::set<TraceKind> kinds;
      for (const auto& trace : turn.provenance) kinds.insert(trace.kind);
      for (TraceKind kind : kinds) ++with_kind[kind];
    }
  }
  if (stats.dialogues > 0) {
    stats.avg_turns_per_dialogue =
        static_cast<double>(stats.turns) / static_cast<double>(stats.dialogues);
  }
  if (stats.user_turns > 0) {
    for (TraceKind kind : kAllTraceKinds) {
      stats.user_turn_fraction[kind] =
          static_cast<double>(with_kind[kind]) /
          static_cast<double>(stats.user_turns);
    }
  }
  stats.action_inventory = actions.size();
  stats.vocab_size = corpus.Vocab().size();
  return stats;
}

std::string StatsToJson(const StatsReport& stats) {
  Json j;
  j["dialogues"] = stats.dialogues;
  j["turns"] = stats.turns;
  j["user_turns"] = stats.user_turns;
  j["system_turns"] = stats.system_turns;
  j["avg_turns_per_dialogue"] = stats.avg_turns_per_dialogue
                                    ? Json(*stats.avg_turns_per_dialogue)
                                    : Json(nullptr);
  Json fractions = Json::object();
  for (const auto& [kind, value] : stats.user_turn_fraction) {
    fractions[std::string(TraceKindName(kind))] = value;
  }
  j["user_turn_fraction"] = std::move(fractions);
  j["action_inventory"] = stats.action_inventory;
  j["vocab_size"] = stats.vocab_size;
  return j.dump();
}

std::string StatsToText(const StatsReport& stats) {
  char buffer[128];
  std::string out;
  auto line = [&](const char* name, const std::string& value) {
    std::snprintf(buffer, sizeof(buffer), "%-28s %s\n", name, value.c_str());
    out += buffer;
  };
  auto fixed = [&](double v) {
    char b[32];
    std::snprintf(b, sizeof(b), "%.2f", v);
    return std::string(b);
  };
  line("dialogues", std::to_string(stats.dialogues));
  line("turns", std::to_string(stats.turns));
  line("user turns", std::to_string(stats.user_turns));
  line("system turns", std::to_string(stats.system_turns));
  line("avg turns per dialogue", stats.avg_turns_per_dialogue
                                     ? fixed(*stats.avg_turns_per_dialogue)
                                     : std::string("n/a"));
  for (const auto& [kind, value] : stats.user_turn_fraction) {
    const std::string name = "user turns with " + std::string(TraceKindName(kind));
    line(name.c_str(), fixed(100.0 * value) + "%");
  }
  line("action inventory", std::to_string(stats.action_inventory));
  line("vocabulary", std::to_string(stats.vocab_size));
  return out;
}

std::size_t NearestRankPercentile(std::vector<std::size_t> values, double pct) {
  if (values.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "percentile of an empty set");
  }
  if (!(pct > 0.0 && pct <= 100.0)) {
    throw Error(ErrorKind::kInvalidArgument, "percentile must be in (0, 100]");
  }
  std::sort(values.begin(), values.end());
  const double rank = std::ceil(pct / 100.0 * static_cast<double>(values.size()));
  const auto index = static_cast<std::size_t>(std::max(1.0, rank)) - 1;
  return values[std::min(index, values.size() - 1)];
}

Corpus FilterByLength(const Corpus& corpus, std::size_t min_turns,
                      std::size_t max_turns_exclusive) {
  Corpus out;
  for (const auto& dialogue : corpus.dialogues) {
    const std::size_t n = dialogue.turns.size();
    if (n >= min_turns && n < max_turns_exclusive) out.dialogues.push_back(dialogue);
  }
  return out;
}

Corpus FilterOutliers(const Corpus& corpus, std::size_t min_turns,
                      double length_percentile) {
  if (!(length_percentile > 0.0 && length_percentile <= 100.0)) {
    throw Error(ErrorKind::kInvalidArgument, "percentile must be in (0, 100]");
  }
  if (corpus.dialogues.empty()) return corpus;
  std::vector<std::size_t> lengths;
  for (const auto& dialogue : corpus.dialogues) {
    lengths.push_back(dialogue.turns.size());
  }
  return FilterByLength(corpus, min_turns,
                        NearestRankPercentile(lengths, length_percentile));
}

std::vector<RankerPairLabel> BuildRankerDataset(const Corpus& corpus,
                                                double lower, double upper,
                                                RankerTarget target,
                                                std::uint64_t seed) {
  if (!(lower >= 0.0 && lower < upper && upper <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                "thresholds must satisfy 0 <= lower < upper <= 1");
  }
  std::vector<std::optional<double>> targets(corpus.dialogues.size());
  if (target == RankerTarget::kRating) {
    bool any = false;
    for (std::size_t d = 0; d < corpus.dialogues.size(); ++d) {
      if (const auto& rating = corpus.dialogues[d].rating) {
        targets[d] = (*rating - 1.0) / 4.0;
        any = true;
      }
    }
    if (!any) throw Error(ErrorKind::kNoRatedDialogues, "rating target requested");
  } else if (!corpus.dialogues.empty()) {
    std::size_t lo = corpus.dialogues.front().turns.size();
    std::size_t hi = lo;
    for (const auto& dialogue : corpus.dialogues) {
      lo = std::min(lo, dialogue.turns.size());
      hi = std::max(hi, dialogue.turns.size());
    }
    for (std::size_t d = 0; d < corpus.dialogues.size(); ++d) {
      // A corpus of equal lengths carries no signal: every target is 0.5.
      targets[d] = hi == lo ? 0.5
                            : static_cast<double>(corpus.dialogues[d].turns.size() - lo) /
                                  static_cast<double>(hi - lo);
    }
  }

  std::vector<RankerPairLabel> candidates;
  std::vector<std::size_t> positives;
  std::vector<std::size_t> negatives;
  for (std::size_t d = 0; d < corpus.dialogues.size(); ++d) {
    if (!targets[d]) continue;
    const double value = *targets[d];
    const bool positive = value > upper;
    if (!positive && !(value < lower)) continue;
    const auto& turns = corpus.dialogues[d].turns;
    for (std::size_t i = 0; i < turns.size(); ++i) {
      if (!turns[i].is_system()) continue;
      RankerPairLabel pair;
      pair.dialogue_id = corpus.dialogues[d].id;
      const std::size_t begin = i >= 6 ? i - 6 : 0;
      pair.context.assign(turns.begin() + static_cast<std::ptrdiff_t>(begin),
                          turns.begin() + static_cast<std::ptrdiff_t>(i));
      pair.response = turns[i];
      pair.target = value;
      pair.polarity = positive ? Polarity::kPositive : Polarity::kNegative;
      (positive ? positives : negatives).push_back(candidates.size());
      candidates.push_back(std::move(pair));
    }
  }

  // Downsample the majority class with a partial Fisher-Yates shuffle of its
  // indices; the output keeps corpus order.
  auto& majority = positives.size() > negatives.size() ? positives : negatives;
  const std::size_t keep = std::min(positives.size(), negatives.size());
  Rng rng(seed);
  for (std::size_t i = 0; i < keep; ++i) {
    std::swap(majority[i], majority[i + rng.Index(majority.size() - i)]);
  }
  majority.resize(keep);
  std::vector<std::size_t> kept = positives;
  kept.insert(kept.end(), negatives.begin(), negatives.end());
  std::sort(kept.begin(), kept.end());

  std::vector<RankerPairLabel> out;
  out.reserve(kept.size());
  for (std::size_t i : kept) out.push_back(std::move(candidates[i]));
  return out;
}

std::string RankerPairsToJsonl(const std::vector<RankerPairLabel>& pairs) {
  std::string out;
  auto turn_json = [](const Turn& turn) {
    Json t;
    t["speaker"] = turn.is_user() ? "user" : "system";
    t["tokens"] = turn.tokens;
    if (turn.action_label) t["action"] = *turn.action_label;
    return t;
  };
  for (const auto& pair : pairs) {
    Json j;
    j["dialogue_id"] = pair.dialogue_id;
    Json context = Json::array();
    for (const auto& turn : pair.context) context.push_back(turn_json(turn));
    j["context"] = std::move(context);
    j["response"] = turn_json(pair.response);
    j["target"] = pair.target;
    j["polarity"] = pair.polarity == Polarity::kPositive ? "positive" : "negative";
    out += j.dump();
    out.push_back('\n');
  }
  return out;
}

}  // namespace dialobust
