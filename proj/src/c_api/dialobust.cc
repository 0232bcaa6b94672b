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

#include "dialobust/dialobust.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "core/augment.h"
#include "core/corpus.h"
#include "core/dataset.h"
#include "core/digest.h"
#include "core/disfluency.h"
#include "core/error.h"
#include "core/metrics.h"
#include "json.hpp"

struct dlb_corpus {
  dialobust::Corpus corpus;
  // Input line each dialogue started on; empty for derived corpora.
  std::vector<std::size_t> dialogue_lines;
};

struct dlb_config {
  dialobust::AugmentationConfig config;
};

namespace {

using dialobust::Corpus;
using dialobust::Error;
using dialobust::ErrorKind;

thread_local std::string last_error;
thread_local std::string last_error_kind;

void SetError(std::string kind, std::string message) {
  last_error_kind = std::move(kind);
  last_error = std::move(message);
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
dlb_status Guard(Body&& body) {
  SetError("", "");
  try {
    body();
    return DLB_OK;
  } catch (const Error& e) {
    SetError(std::string(dialobust::ErrorKindName(e.kind())), e.what());
    return static_cast<dlb_status>(e.category());
  } catch (const std::bad_alloc&) {
    SetError("Internal", "out of memory");
  } catch (const std::exception& e) {
    SetError("Internal", e.what());
  } catch (...) {
    SetError("Internal", "unknown failure");
  }
  return DLB_ERR_INTERNAL;
}

void Require(bool condition, const char* what) {
  if (!condition) throw Error(ErrorKind::kInvalidArgument, what);
}

char* CopyString(std::string_view text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.data(), text.size());
  out[text.size()] = '\0';
  return out;
}

dialobust::CorpusFormat ToFormat(dlb_format format) {
  switch (format) {
    case DLB_FORMAT_BABI:
      return dialobust::CorpusFormat::kBabi;
    case DLB_FORMAT_JSONL:
      return dialobust::CorpusFormat::kJsonl;
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown corpus format");
}

// Mirrors the readers' line handling: bAbI dialogues start after blank
// lines, JSON-lines dialogues occupy one non-blank line each; a leading
// format header is skipped in both.
std::vector<std::size_t> DialogueStartLines(std::string_view text,
                                            dlb_format format) {
  std::vector<std::size_t> lines;
  std::size_t line_no = 0;
  bool in_dialogue = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    ++line_no;
    if (line_no == 1 && line.starts_with(dialobust::kFormatHeaderPrefix)) {
      continue;
    }
    if (format == DLB_FORMAT_JSONL) {
      if (!line.empty()) lines.push_back(line_no);
      continue;
    }
    if (line.empty()) {
      in_dialogue = false;
    } else if (!in_dialogue) {
      in_dialogue = true;
      lines.push_back(line_no);
    }
  }
  return lines;
}

dlb_corpus* Wrap(Corpus corpus) {
  auto* handle = new dlb_corpus;
  handle->corpus = std::move(corpus);
  return handle;
}

// 0 selects the hardware concurrency.
unsigned Jobs(unsigned jobs) {
  return jobs != 0 ? jobs : std::max(1u, std::thread::hardware_concurrency());
}

std::string Render(const std::vector<dialobust::MetricReport>& reports,
                   dlb_report_format format) {
  switch (format) {
    case DLB_REPORT_JSON:
      return dialobust::ReportsToJson(reports) + "\n";
    case DLB_REPORT_TEXT:
      return dialobust::ReportsToTable(reports);
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown report format");
}

std::vector<std::string> SystemActions(const Corpus& corpus) {
  std::vector<std::string> actions;
  for (const auto& dialogue : corpus.dialogues) {
    for (const auto& turn : dialogue.turns) {
      if (!turn.is_system()) continue;
      actions.push_back(turn.action_label ? *turn.action_label
                                          : dialobust::JoinTokens(turn.tokens));
    }
  }
  return actions;
}

void RequireSameTurnShape(const Corpus& gold, const Corpus& pred) {
  if (gold.dialogues.size() != pred.dialogues.size()) {
    throw Error(ErrorKind::kShapeMismatch,
                std::to_string(gold.dialogues.size()) + " gold vs " +
                    std::to_string(pred.dialogues.size()) +
                    " predicted dialogues");
  }
  for (std::size_t d = 0; d < gold.dialogues.size(); ++d) {
    const auto& g = gold.dialogues[d].turns;
    const auto& p = pred.dialogues[d].turns;
    if (g.size() != p.size()) {
      throw Error(ErrorKind::kShapeMismatch,
                  "dialogue " + std::to_string(d) + ": " +
                      std::to_string(g.size()) + " gold vs " +
                      std::to_string(p.size()) + " predicted turns");
    }
  }
}

std::vector<dialobust::MetricReport> EvalDisfluency(
    const Corpus& gold, const Corpus& pred, bool interregnum_in_structure) {
  RequireSameTurnShape(gold, pred);
  std::vector<dialobust::TaggedUtterance> gold_utterances;
  std::vector<std::vector<dialobust::DisfluencyTag>> pred_tags;
  for (std::size_t d = 0; d < gold.dialogues.size(); ++d) {
    for (std::size_t t = 0; t < gold.dialogues[d].turns.size(); ++t) {
      const auto& g = gold.dialogues[d].turns[t];
      const auto& p = pred.dialogues[d].turns[t];
      if (!g.is_user() || !g.tags) continue;
      if (p.tokens.size() != g.tokens.size()) {
        throw Error(ErrorKind::kShapeMismatch,
                    "dialogue " + std::to_string(d) + " turn " +
                        std::to_string(t) + ": token counts differ");
      }
      gold_utterances.push_back({g.tokens, *g.tags, {}});
      pred_tags.push_back(p.tags ? *p.tags
                                 : std::vector<dialobust::DisfluencyTag>(
                                       p.tokens.size(),
                                       dialobust::DisfluencyTag::Fluent()));
    }
  }
  return dialobust::ScoreDisfluency(gold_utterances, pred_tags,
                                    {interregnum_in_structure})
      .ToReports();
}

dialobust::RankingTuple ParseTuple(const nlohmann::json& j,
                                   std::size_t line_no) {
  auto fail = [&](const std::string& path, const std::string& what) {
    throw dialobust::SchemaViolation(line_no, path, what);
  };
  if (!j.is_object()) fail("", "expected an object");
  dialobust::RankingTuple tuple;
  for (const auto& [key, value] : j.items()) {
    if (key == "context_id") {
      if (!value.is_string()) fail("context_id", "expected a string");
      tuple.context_id = value.get<std::string>();
    } else if (key != "candidates") {
      fail(key, "unknown member");
    }
  }
  if (!j.contains("candidates") || !j["candidates"].is_array()) {
    fail("candidates", "expected an array");
  }
  const auto& candidates = j["candidates"];
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const std::string path = "candidates[" + std::to_string(i) + "]";
    const auto& c = candidates[i];
    if (!c.is_object() || !c.contains("score") || !c.contains("relevant") ||
        c.size() != 2) {
      fail(path, "expected {\"score\", \"relevant\"}");
    }
    if (!c["score"].is_number()) fail(path + ".score", "expected a number");
    if (!c["relevant"].is_boolean()) {
      fail(path + ".relevant", "expected a boolean");
    }
    tuple.candidates.push_back(
        {c["score"].get<double>(), c["relevant"].get<bool>()});
  }
  return tuple;
}

}  // namespace

extern "C" {

const char* dlb_version(void) { return DIALOBUST_VERSION; }

const char* dlb_last_error(void) { return last_error.c_str(); }

const char* dlb_last_error_kind(void) { return last_error_kind.c_str(); }

void dlb_string_free(char* str) { std::free(str); }

dlb_status dlb_corpus_parse(const char* text, size_t length, dlb_format format,
                            dlb_corpus** out) {
  return Guard([&] {
    Require(out != nullptr, "out must not be NULL");
    Require(text != nullptr || length == 0, "text must not be NULL");
    *out = nullptr;
    const std::string_view view(text == nullptr ? "" : text, length);
    auto handle = std::make_unique<dlb_corpus>();
    handle->corpus = dialobust::ParseCorpus(view, ToFormat(format));
    handle->dialogue_lines = DialogueStartLines(view, format);
    if (handle->dialogue_lines.size() != handle->corpus.dialogues.size()) {
      handle->dialogue_lines.clear();
    }
    *out = handle.release();
  });
}

dlb_status dlb_corpus_write(const dlb_corpus* corpus, dlb_format format,
                            char** out, size_t* out_length) {
  return Guard([&] {
    Require(corpus != nullptr && out != nullptr, "NULL argument");
    *out = nullptr;
    const std::string text =
        dialobust::WriteCorpus(corpus->corpus, ToFormat(format));
    *out = CopyString(text);
    if (out_length != nullptr) *out_length = text.size();
  });
}

void dlb_corpus_free(dlb_corpus* corpus) { delete corpus; }

size_t dlb_corpus_dialogue_count(const dlb_corpus* corpus) {
  return corpus == nullptr ? 0 : corpus->corpus.dialogues.size();
}

size_t dlb_corpus_turn_count(const dlb_corpus* corpus) {
  if (corpus == nullptr) return 0;
  std::size_t turns = 0;
  for (const auto& d : corpus->corpus.dialogues) turns += d.turns.size();
  return turns;
}

dlb_status dlb_config_default(dlb_config** out) {
  return Guard([&] {
    Require(out != nullptr, "out must not be NULL");
    *out = new dlb_config;
  });
}

dlb_status dlb_config_parse(const char* json, size_t length,
                            const char* base_dir, dlb_config** out) {
  return Guard([&] {
    Require(out != nullptr, "out must not be NULL");
    Require(json != nullptr || length == 0, "json must not be NULL");
    *out = nullptr;
    auto handle = std::make_unique<dlb_config>();
    handle->config = dialobust::ParseAugmentationConfig(
        std::string_view(json == nullptr ? "" : json, length),
        base_dir == nullptr ? "" : base_dir);
    *out = handle.release();
  });
}

void dlb_config_free(dlb_config* config) { delete config; }

dlb_status dlb_augment_disfluency(const dlb_corpus* corpus,
                                  const dlb_config* config, uint64_t seed,
                                  unsigned jobs, dlb_corpus** out) {
  return Guard([&] {
    Require(corpus != nullptr && config != nullptr && out != nullptr,
            "NULL argument");
    *out = nullptr;
    *out = Wrap(dialobust::AugmentCorpus(
        corpus->corpus, config->config.disfluency, seed, Jobs(jobs)));
  });
}

dlb_status dlb_augment_ood(const dlb_corpus* corpus, const dlb_config* config,
                           uint64_t seed, unsigned jobs, dlb_corpus** out) {
  return Guard([&] {
    Require(corpus != nullptr && config != nullptr && out != nullptr,
            "NULL argument");
    *out = nullptr;
    *out = Wrap(dialobust::OodAugment(corpus->corpus, config->config.ood, seed,
                                      Jobs(jobs)));
  });
}

dlb_status dlb_turn_dropout(const dlb_corpus* corpus, const dlb_config* config,
                            uint64_t seed, unsigned jobs, dlb_corpus** out) {
  return Guard([&] {
    Require(corpus != nullptr && config != nullptr && out != nullptr,
            "NULL argument");
    *out = nullptr;
    const std::vector<std::string> vocab = corpus->corpus.Vocab();
    *out = Wrap(dialobust::TurnDropout(corpus->corpus, config->config.dropout,
                                       vocab, seed, Jobs(jobs)));
  });
}

dlb_status dlb_counterfeit(const dlb_corpus* corpus, const dlb_config* config,
                           uint64_t seed, unsigned jobs, dlb_corpus** out,
                           char** warnings) {
  return Guard([&] {
    Require(corpus != nullptr && config != nullptr && out != nullptr,
            "NULL argument");
    *out = nullptr;
    if (warnings != nullptr) *warnings = nullptr;
    std::vector<std::string> notes;
    Corpus result =
        dialobust::CounterfeitOod(corpus->corpus, config->config.counterfeit,
                                  seed, Jobs(jobs), &notes);
    std::string joined;
    for (const auto& note : notes) joined += note + "\n";
    if (warnings != nullptr) *warnings = CopyString(joined);
    *out = Wrap(std::move(result));
  });
}

dlb_status dlb_tag_baseline(const dlb_corpus* corpus, dlb_corpus** out) {
  return Guard([&] {
    Require(corpus != nullptr && out != nullptr, "NULL argument");
    *out = nullptr;
    Corpus result = corpus->corpus;
    for (auto& dialogue : result.dialogues) {
      for (auto& turn : dialogue.turns) {
        if (turn.is_user()) turn.tags = dialobust::TagRepetitions(turn.tokens);
      }
    }
    *out = Wrap(std::move(result));
  });
}

dlb_status dlb_clean(const dlb_corpus* corpus, dlb_clean_mode mode,
                     dlb_corpus** out) {
  return Guard([&] {
    Require(corpus != nullptr && out != nullptr, "NULL argument");
    *out = nullptr;
    if (mode == DLB_CLEAN_STRIP) {
      *out = Wrap(dialobust::StripAugmentations(corpus->corpus));
      return;
    }
    Require(mode == DLB_CLEAN_TAGS, "unknown clean mode");
    Corpus result = corpus->corpus;
    for (auto& dialogue : result.dialogues) {
      for (auto& turn : dialogue.turns) {
        if (!turn.tags) continue;
        turn.tokens = dialobust::Cleanup({turn.tokens, *turn.tags, {}});
        turn.tags.reset();
        std::erase_if(turn.provenance, [](const auto& trace) {
          return dialobust::IsUtteranceLevel(trace.kind);
        });
      }
    }
    *out = Wrap(std::move(result));
  });
}

dlb_status dlb_stats(const dlb_corpus* corpus, dlb_report_format format,
                     char** out) {
  return Guard([&] {
    Require(corpus != nullptr && out != nullptr, "NULL argument");
    *out = nullptr;
    const dialobust::StatsReport stats = dialobust::CorpusStats(corpus->corpus);
    switch (format) {
      case DLB_REPORT_JSON:
        *out = CopyString(dialobust::StatsToJson(stats) + "\n");
        return;
      case DLB_REPORT_TEXT:
        *out = CopyString(dialobust::StatsToText(stats));
        return;
    }
    throw Error(ErrorKind::kInvalidArgument, "unknown report format");
  });
}

dlb_status dlb_validate(const dlb_corpus* corpus, char** out,
                        size_t* violation_count) {
  return Guard([&] {
    Require(corpus != nullptr && out != nullptr, "NULL argument");
    *out = nullptr;
    std::string report;
    std::size_t count = 0;
    const auto& dialogues = corpus->corpus.dialogues;
    for (std::size_t d = 0; d < dialogues.size(); ++d) {
      for (std::size_t t = 0; t < dialogues[d].turns.size(); ++t) {
        const auto& turn = dialogues[d].turns[t];
        if (!turn.tags) continue;
        for (const auto& v : dialobust::ValidateSequence(*turn.tags)) {
          ++count;
          if (!corpus->dialogue_lines.empty()) {
            report += "line " + std::to_string(corpus->dialogue_lines[d]) + ": ";
          }
          report += "dialogue " + dialogues[d].id + " turn " +
                    std::to_string(t) + " token " + std::to_string(v.position) +
                    ": " + std::string(dialobust::ViolationKindName(v.kind)) +
                    "\n";
        }
      }
    }
    *out = CopyString(report);
    if (violation_count != nullptr) *violation_count = count;
  });
}

dlb_status dlb_eval(const dlb_corpus* gold, const dlb_corpus* pred,
                    const char* metric, const char* fallback_action,
                    int interregnum_in_structure, dlb_report_format format,
                    char** out) {
  return Guard([&] {
    Require(gold != nullptr && pred != nullptr && metric != nullptr &&
                out != nullptr,
            "NULL argument");
    *out = nullptr;
    const std::string_view name(metric);
    const std::string fallback =
        fallback_action == nullptr ? "FALLBACK" : fallback_action;
    std::vector<dialobust::MetricReport> reports;
    if (name == "disfluency") {
      reports = EvalDisfluency(gold->corpus, pred->corpus,
                               interregnum_in_structure != 0);
    } else if (name == "accuracy") {
      reports.push_back(dialobust::PerUtteranceAccuracy(
          SystemActions(gold->corpus), SystemActions(pred->corpus)));
    } else if (name == "api-call") {
      reports.push_back(dialobust::ApiCallAccuracy(
          dialobust::ExtractApiCalls(gold->corpus),
          dialobust::ExtractApiCalls(pred->corpus)));
    } else if (name == "ood-f1") {
      reports.push_back(dialobust::OodF1(SystemActions(gold->corpus),
                                         SystemActions(pred->corpus),
                                         fallback));
    } else {
      throw Error(ErrorKind::kInvalidArgument,
                  "unknown metric '" + std::string(name) + "'");
    }
    *out = CopyString(Render(reports, format));
  });
}

dlb_status dlb_precision_at_k(const char* tuples_jsonl, size_t length, int k,
                              dlb_report_format format, char** out) {
  return Guard([&] {
    Require(out != nullptr, "out must not be NULL");
    Require(tuples_jsonl != nullptr || length == 0, "NULL argument");
    *out = nullptr;
    const std::string_view text(tuples_jsonl == nullptr ? "" : tuples_jsonl,
                                length);
    std::vector<dialobust::RankingTuple> tuples;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      const std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(line);
      } catch (const nlohmann::json::exception& e) {
        throw dialobust::SchemaViolation(line_no, "",
                                         std::string("invalid JSON: ") + e.what());
      }
      tuples.push_back(ParseTuple(j, line_no));
    }
    *out = CopyString(Render({dialobust::PrecisionAtK(tuples, k)}, format));
  });
}

dlb_status dlb_class_weights(const int64_t* counts, size_t n, double gamma,
                             double* weights) {
  return Guard([&] {
    Require(n == 0 || (counts != nullptr && weights != nullptr),
            "NULL argument");
    const auto result = dialobust::ClassWeights(
        std::span<const std::int64_t>(counts, n), gamma);
    std::copy(result.begin(), result.end(), weights);
  });
}

dlb_status dlb_pearson(const double* xs, const double* ys, size_t n,
                       double* out) {
  return Guard([&] {
    Require(out != nullptr && (n == 0 || (xs != nullptr && ys != nullptr)),
            "NULL argument");
    *out = dialobust::Pearson(std::span<const double>(xs, n),
                              std::span<const double>(ys, n));
  });
}

dlb_status dlb_filter_outliers(const dlb_corpus* corpus, size_t min_turns,
                               double length_percentile, dlb_corpus** out) {
  return Guard([&] {
    Require(corpus != nullptr && out != nullptr, "NULL argument");
    *out = nullptr;
    *out = Wrap(dialobust::FilterOutliers(corpus->corpus, min_turns,
                                          length_percentile));
  });
}

dlb_status dlb_ranker_pairs(const dlb_corpus* corpus, double lower,
                            double upper, dlb_ranker_target target,
                            uint64_t seed, char** out) {
  return Guard([&] {
    Require(corpus != nullptr && out != nullptr, "NULL argument");
    *out = nullptr;
    Require(target == DLB_RANKER_LENGTH || target == DLB_RANKER_RATING,
            "unknown ranker target");
    const auto pairs = dialobust::BuildRankerDataset(
        corpus->corpus, lower, upper,
        target == DLB_RANKER_LENGTH ? dialobust::RankerTarget::kLength
                                    : dialobust::RankerTarget::kRating,
        seed);
    *out = CopyString(dialobust::RankerPairsToJsonl(pairs));
  });
}

dlb_status dlb_sha256_hex(const void* data, size_t length, char** out) {
  return Guard([&] {
    Require(out != nullptr && (data != nullptr || length == 0),
            "NULL argument");
    *out = nullptr;
    *out = CopyString(dialobust::Sha256Hex(std::string_view(
        static_cast<const char*>(data == nullptr ? "" : data), length)));
  });
}

}  // extern "C"
