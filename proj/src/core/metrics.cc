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

#include "core/metrics.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <string>

#include "core/error.h"

namespace dialobust {
namespace {

MetricReport BinaryReport(std::string name, const ConfusionCounts& counts,
                          std::int64_t support) {
  MetricReport report;
  report.name = std::move(name);
  report.value = counts.F1();
  report.support = support;
  report.extras = {{"tp", static_cast<double>(counts.tp)},
                   {"fp", static_cast<double>(counts.fp)},
                   {"fn", static_cast<double>(counts.fn)}};
  return report;
}

void Count(ConfusionCounts& counts, bool gold, bool pred) {
  if (gold && pred) ++counts.tp;
  if (!gold && pred) ++counts.fp;
  if (gold && !pred) ++counts.fn;
}

void RequireSameSize(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorKind::kShapeMismatch,
                std::string(what) + ": " + std::to_string(a) + " gold vs " +
                    std::to_string(b) + " predicted");
  }
}

}  // namespace

double ConfusionCounts::F1() const {
  const std::int64_t denominator = 2 * tp + fp + fn;
  return denominator == 0 ? 0.0
                          : 2.0 * static_cast<double>(tp) /
                                static_cast<double>(denominator);
}

ConfusionCounts& ConfusionCounts::operator+=(const ConfusionCounts& other) {
  tp += other.tp;
  fp += other.fp;
  fn += other.fn;
  return *this;
}

DisfluencyScore& DisfluencyScore::operator+=(const DisfluencyScore& other) {
  edit += other.edit;
  repair_onset += other.repair_onset;
  repair_structure += other.repair_structure;
  return *this;
}

std::vector<MetricReport> DisfluencyScore::ToReports() const {
  return {BinaryReport("f_e", edit, edit.tp + edit.fn),
          BinaryReport("f_rm", repair_onset, repair_onset.tp + repair_onset.fn),
          BinaryReport("f_rps", repair_structure,
                       repair_structure.tp + repair_structure.fn)};
}

std::vector<bool> StructureMembership(std::span<const DisfluencyTag> tags,
                                      bool interregnum_in_structure) {
  std::vector<bool> member(tags.size(), false);
  for (const RepairStructure& s : ExtractRepairsLenient(tags)) {
    for (std::size_t i = s.reparandum.begin; i < s.reparandum.end; ++i) member[i] = true;
    for (std::size_t i = s.repair.begin; i < s.repair.end; ++i) member[i] = true;
    if (interregnum_in_structure) {
      for (std::size_t i = s.interregnum.begin; i < s.interregnum.end; ++i) {
        member[i] = true;
      }
    }
  }
  return member;
}

DisfluencyScore ScoreDisfluency(
    std::span<const TaggedUtterance> gold,
    std::span<const std::vector<DisfluencyTag>> pred,
    const DisfluencyScoreOptions& options) {
  RequireSameSize(gold.size(), pred.size(), "utterance count");
  DisfluencyScore score;
  for (std::size_t u = 0; u < gold.size(); ++u) {
    const auto& gold_tags = gold[u].tags;
    const auto& pred_tags = pred[u];
    RequireSameSize(gold_tags.size(), pred_tags.size(),
                    ("tag count of utterance " + std::to_string(u)).c_str());
    const auto gold_member =
        StructureMembership(gold_tags, options.interregnum_in_structure);
    const auto pred_member =
        StructureMembership(pred_tags, options.interregnum_in_structure);
    for (std::size_t i = 0; i < gold_tags.size(); ++i) {
      const DisfluencyTag& g = gold_tags[i];
      const DisfluencyTag& p = pred_tags[i];
      Count(score.edit, g.is_edit(), p.is_edit());
      if (g.is_onset() && p == g) {
        ++score.repair_onset.tp;
      } else {
        if (p.is_onset()) ++score.repair_onset.fp;
        if (g.is_onset()) ++score.repair_onset.fn;
      }
      Count(score.repair_structure, gold_member[i], pred_member[i]);
    }
  }
  return score;
}

MetricReport PerUtteranceAccuracy(std::span<const std::string> gold,
                                  std::span<const std::string> pred) {
  RequireSameSize(gold.size(), pred.size(), "system turn count");
  std::int64_t correct = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) correct += gold[i] == pred[i];
  MetricReport report;
  report.name = "per_utterance_accuracy";
  report.support = static_cast<std::int64_t>(gold.size());
  report.value = gold.empty() ? 0.0
                              : static_cast<double>(correct) /
                                    static_cast<double>(gold.size());
  report.extras = {{"correct", static_cast<double>(correct)}};
  return report;
}

std::vector<ApiCallRecord> ExtractApiCalls(const Corpus& corpus) {
  std::vector<ApiCallRecord> records;
  for (const auto& dialogue : corpus.dialogues) {
    ApiCallRecord record{dialogue.id, std::nullopt};
    for (const auto& turn : dialogue.turns) {
      if (!turn.is_system()) continue;
      const std::string text =
          turn.action_label ? *turn.action_label : JoinTokens(turn.tokens);
      if (NormalizeApiCall(text).starts_with("api_call")) record.api_call = text;
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::string NormalizeApiCall(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

MetricReport ApiCallAccuracy(std::span<const ApiCallRecord> gold,
                             std::span<const ApiCallRecord> pred) {
  RequireSameSize(gold.size(), pred.size(), "dialogue count");
  std::int64_t correct = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i].dialogue_id != pred[i].dialogue_id) {
      throw Error(ErrorKind::kShapeMismatch,
                  "dialogue " + std::to_string(i) + " is '" +
                      gold[i].dialogue_id + "' in gold but '" +
                      pred[i].dialogue_id + "' in prediction");
    }
    for (const ApiCallRecord* r : {&gold[i], &pred[i]}) {
      if (!r->api_call) {
        throw Error(ErrorKind::kMissingApiCall, "dialogue '" + r->dialogue_id + "'");
      }
    }
    correct += NormalizeApiCall(*gold[i].api_call) ==
               NormalizeApiCall(*pred[i].api_call);
  }
  MetricReport report;
  report.name = "api_call_accuracy";
  report.support = static_cast<std::int64_t>(gold.size());
  report.value = gold.empty() ? 0.0
                              : static_cast<double>(correct) /
                                    static_cast<double>(gold.size());
  report.extras = {{"correct", static_cast<double>(correct)}};
  return report;
}

MetricReport OodF1(std::span<const std::string> gold,
                   std::span<const std::string> pred,
                   std::string_view fallback) {
  RequireSameSize(gold.size(), pred.size(), "system turn count");
  ConfusionCounts counts;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    Count(counts, gold[i] == fallback, pred[i] == fallback);
  }
  return BinaryReport("ood_f1", counts, counts.tp + counts.fn);
}

MetricReport PrecisionAtK(std::span<const RankingTuple> tuples, int k) {
  if (k < 1) throw Error(ErrorKind::kInvalidArgument, "k must be positive");
  const auto top = static_cast<std::size_t>(k);
  double total = 0.0;
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const auto& candidates = tuples[t].candidates;
    if (candidates.size() < top) {
      throw Error(ErrorKind::kTooFewCandidates,
                  "tuple " + std::to_string(t) + " has " +
                      std::to_string(candidates.size()) + " candidates, k = " +
                      std::to_string(k));
    }
    std::vector<std::size_t> order(candidates.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return candidates[a].score > candidates[b].score;
    });
    std::size_t relevant = 0;
    for (std::size_t r = 0; r < top; ++r) relevant += candidates[order[r]].relevant;
    total += static_cast<double>(relevant) / static_cast<double>(top);
  }
  MetricReport report;
  report.name = "precision_at_" + std::to_string(k);
  report.support = static_cast<std::int64_t>(tuples.size());
  report.value = tuples.empty() ? 0.0 : total / static_cast<double>(tuples.size());
  return report;
}

std::vector<double> ClassWeights(std::span<const std::int64_t> counts,
                                 double gamma) {
  if (!(gamma >= 0.0)) throw Error(ErrorKind::kInvalidArgument, "gamma must be >= 0");
  std::vector<double> weights;
  weights.reserve(counts.size());
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] < 1) {
      throw Error(ErrorKind::kZeroCount, "class " + std::to_string(k));
    }
    weights.push_back(1.0 / std::pow(static_cast<double>(counts[k]), gamma));
  }
  return weights;
}

double Pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw Error(ErrorKind::kDegenerateInput,
                "need two equally long series of at least two points");
  }
  const double n = static_cast<double>(xs.size());
  const double mean_x = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double mean_y = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw Error(ErrorKind::kDegenerateInput, "zero variance");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace dialobust
