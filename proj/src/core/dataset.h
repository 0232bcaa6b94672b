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

#ifndef DIALOBUST_CORE_DATASET_H_
#define DIALOBUST_CORE_DATASET_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/corpus.h"

namespace dialobust {

struct StatsReport {
  std::size_t dialogues = 0;
  std::size_t turns = 0;
  std::size_t user_turns = 0;
  std::size_t system_turns = 0;
  // Absent for an empty corpus.
  std::optional<double> avg_turns_per_dialogue;
  // Share of user turns carrying at least one trace of each kind; absent
  // when there are no user turns.
  std::map<TraceKind, double> user_turn_fraction;
  // Distinct system actions: the action label, or the utterance itself for
  // unlabelled system turns.
  std::size_t action_inventory = 0;
  std::size_t vocab_size = 0;
};

StatsReport CorpusStats(const Corpus& corpus);
std::string StatsToJson(const StatsReport& stats);
std::string StatsToText(const StatsReport& stats);

// Nearest-rank percentile: the value at 1-based rank ceil(pct/100 * N) of the
// sorted values. Requires 0 < pct <= 100 and non-empty values.
std::size_t NearestRankPercentile(std::vector<std::size_t> values, double pct);

// Keeps dialogues with min_turns <= turns < max_turns_exclusive.
Corpus FilterByLength(const Corpus& corpus, std::size_t min_turns,
                      std::size_t max_turns_exclusive);

// Drops dialogues shorter than min_turns or at least as long as the
// length_percentile-th percentile (nearest rank) of the input's lengths.
Corpus FilterOutliers(const Corpus& corpus, std::size_t min_turns,
                      double length_percentile);

enum class RankerTarget { kLength, kRating };
enum class Polarity { kPositive, kNegative };

struct RankerPairLabel {
  std::string dialogue_id;
  // Up to three most recent exchanges (six turns) before the response.
  std::vector<Turn> context;
  Turn response;
  double target = 0.0;
  Polarity polarity = Polarity::kPositive;
};

// One candidate pair per system turn. The dialogue target is the min-max
// normalised length (kLength) or (rating - 1) / 4 (kRating, unrated
// dialogues skipped). Pairs with target > upper are positive, < lower
// negative, the rest dropped; the majority class is then downsampled with
// `seed` to the minority's size, preserving corpus order.
std::vector<RankerPairLabel> BuildRankerDataset(const Corpus& corpus,
                                                double lower, double upper,
                                                RankerTarget target,
                                                std::uint64_t seed);

std::string RankerPairsToJsonl(const std::vector<RankerPairLabel>& pairs);

}  // namespace dialobust

#endif  // DIALOBUST_CORE_DATASET_H_
