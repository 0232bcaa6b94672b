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

#ifndef DIALOBUST_CORE_METRICS_H_
#define DIALOBUST_CORE_METRICS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/corpus.h"
#include "core/disfluency.h"

namespace dialobust {

// Raw binary-decision counts. Shards can be scored separately and merged.
struct ConfusionCounts {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;

  // 2tp / (2tp + fp + fn); 0 when the denominator is 0.
  double F1() const;
  ConfusionCounts& operator+=(const ConfusionCounts& other);
  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

struct MetricReport {
  std::string name;
  double value = 0.0;
  std::int64_t support = 0;
  std::map<std::string, double> extras;
};

struct DisfluencyScore {
  ConfusionCounts edit;
  ConfusionCounts repair_onset;
  ConfusionCounts repair_structure;

  double f_e() const { return edit.F1(); }
  double f_rm() const { return repair_onset.F1(); }
  double f_rps() const { return repair_structure.F1(); }

  DisfluencyScore& operator+=(const DisfluencyScore& other);
  std::vector<MetricReport> ToReports() const;
};

struct DisfluencyScoreOptions {
  // Count interregnum tokens as members of repair structures for F_rps.
  bool interregnum_in_structure = false;
};

// Micro-averaged F1 over all tokens of all utterances:
//   F_e    edit vs non-edit token decisions;
//   F_rm   repair-onset tags, exact (n, qualifier) match required;
//   F_rps  membership of tokens in reparandum or repair spans, fluent tokens
//          inside the spans included. Predicted spans come from lenient
//          extraction.
// Throws kShapeMismatch when utterance counts or lengths differ.
DisfluencyScore ScoreDisfluency(
    std::span<const TaggedUtterance> gold,
    std::span<const std::vector<DisfluencyTag>> pred,
    const DisfluencyScoreOptions& options = {});

// Tokens belonging to a repair structure, per the F_rps rule above.
std::vector<bool> StructureMembership(std::span<const DisfluencyTag> tags,
                                      bool interregnum_in_structure);

MetricReport PerUtteranceAccuracy(std::span<const std::string> gold,
                                  std::span<const std::string> pred);

struct ApiCallRecord {
  std::string dialogue_id;
  std::optional<std::string> api_call;
};

// The last system api_call of every dialogue.
std::vector<ApiCallRecord> ExtractApiCalls(const Corpus& corpus);
// Lowercased, whitespace runs collapsed to one space, trimmed.
std::string NormalizeApiCall(std::string_view text);
// Throws kShapeMismatch on differing dialogue lists, kMissingApiCall when a
// dialogue lacks its call on either side.
MetricReport ApiCallAccuracy(std::span<const ApiCallRecord> gold,
                             std::span<const ApiCallRecord> pred);

// Binary F1 with `fallback` as the positive class.
MetricReport OodF1(std::span<const std::string> gold,
                   std::span<const std::string> pred,
                   std::string_view fallback);

struct RankedCandidate {
  double score = 0.0;
  bool relevant = false;
};

struct RankingTuple {
  std::string context_id;
  std::vector<RankedCandidate> candidates;
};

// Mean over tuples of |relevant among top k by score| / k. Equal scores keep
// input order. Throws kTooFewCandidates.
MetricReport PrecisionAtK(std::span<const RankingTuple> tuples, int k);

// W_k = 1 / C_k^gamma. Throws kZeroCount for a non-positive count.
std::vector<double> ClassWeights(std::span<const std::int64_t> counts,
                                 double gamma);

// Sample Pearson correlation. Throws kDegenerateInput for fewer than two
// points, mismatched lengths or zero variance.
double Pearson(std::span<const double> xs, std::span<const double> ys);

// {"name":..,"value":..,"support":..,"extras":{..}}
std::string ReportToJson(const MetricReport& report);
std::string ReportsToJson(std::span<const MetricReport> reports);
// Aligned table with a header row; values with four decimals.
std::string ReportsToTable(std::span<const MetricReport> reports);

}  // namespace dialobust

#endif  // DIALOBUST_CORE_METRICS_H_
