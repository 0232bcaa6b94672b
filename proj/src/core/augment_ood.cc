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
#include <limits>
#include <string>
#include <vector>

#include "core/augment.h"
#include "core/error.h"
#include "core/parallel.h"

namespace dialobust {
namespace {

AugmentationTrace TurnTrace(TraceKind kind, std::size_t index) {
  AugmentationTrace trace;
  trace.kind = kind;
  trace.span = {index, index + 1};
  return trace;
}

Turn FallbackTurn(const TokenSequence& utterance, const std::string& action,
                  TraceKind kind, std::size_t index) {
  Turn turn;
  turn.speaker = Speaker::kSystem;
  turn.tokens = utterance;
  turn.action_label = action;
  turn.provenance.push_back(TurnTrace(kind, index));
  return turn;
}

}  // namespace

Corpus OodAugment(const Corpus& corpus, const OodConfig& config,
                  std::uint64_t seed, unsigned jobs) {
  config.Validate();
  Corpus out = corpus;
  ParallelFor(out.dialogues.size(), jobs, [&](std::size_t d) {
    Rng rng(MixSeed(seed, d));
    std::vector<Turn> turns;
    for (Turn& turn : out.dialogues[d].turns) {
      if (turn.is_user() && rng.Bernoulli(config.p_ood_start)) {
        do {
          Turn ood;
          ood.speaker = Speaker::kUser;
          ood.tokens = config.turn_pool[rng.Index(config.turn_pool.size())];
          ood.provenance.push_back(TurnTrace(TraceKind::kOodTurn, turns.size()));
          turns.push_back(std::move(ood));
          turns.push_back(FallbackTurn(config.fallback_utterance,
                                       config.fallback_action,
                                       TraceKind::kOodTurn, turns.size()));
        } while (rng.Bernoulli(config.p_ood_cont));

        const TokenSequence& segment =
            config.segment_pool[rng.Index(config.segment_pool.size())];
        turn.tokens.insert(turn.tokens.begin(), segment.begin(), segment.end());
        if (turn.tags) {
          turn.tags->insert(turn.tags->begin(), segment.size(),
                            DisfluencyTag::Fluent());
        }
        AugmentationTrace trace;
        trace.kind = TraceKind::kOodSegment;
        trace.span = {0, segment.size()};
        turn.provenance.push_back(std::move(trace));
      }
      turns.push_back(std::move(turn));
    }
    out.dialogues[d].turns = std::move(turns);
  });
  return out;
}

Corpus TurnDropout(const Corpus& corpus, const DropoutConfig& config,
                   std::span<const std::string> vocab, std::uint64_t seed,
                   unsigned jobs) {
  config.Validate();
  if (vocab.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "turn dropout needs a vocabulary");
  }
  std::size_t min_len = std::numeric_limits<std::size_t>::max();
  std::size_t max_len = 0;
  for (const auto& dialogue : corpus.dialogues) {
    for (const auto& turn : dialogue.turns) {
      if (!turn.is_user() || turn.tokens.empty()) continue;
      min_len = std::min(min_len, turn.tokens.size());
      max_len = std::max(max_len, turn.tokens.size());
    }
  }
  if (max_len == 0) min_len = max_len = 1;
  if (config.min_len) min_len = static_cast<std::size_t>(*config.min_len);
  if (config.max_len) max_len = static_cast<std::size_t>(*config.max_len);
  if (min_len > max_len) {
    throw Error(ErrorKind::kInvalidConfig,
                "dropout min_len exceeds max_len for this corpus");
  }

  Corpus out = corpus;
  ParallelFor(out.dialogues.size(), jobs, [&](std::size_t d) {
    Rng rng(MixSeed(seed, d));
    auto& turns = out.dialogues[d].turns;
    for (std::size_t i = 0; i < turns.size(); ++i) {
      Turn& turn = turns[i];
      if (!turn.is_user() || !rng.Bernoulli(config.turn_dropout_ratio)) continue;
      const std::size_t length = rng.UniformInt(min_len, max_len);
      std::vector<std::string> noise;
      noise.reserve(length);
      for (std::size_t k = 0; k < length; ++k) {
        noise.push_back(rng.Bernoulli(0.5) ? config.unk_token
                                           : vocab[rng.Index(vocab.size())]);
      }
      AugmentationTrace trace;
      trace.kind = TraceKind::kTurnDropout;
      trace.span = {0, length};
      trace.original = std::move(turn.tokens);
      if (turn.tags) trace.original_tags = RenderTags(*turn.tags);
      turn.tokens = std::move(noise);
      turn.tags.reset();
      turn.provenance.push_back(std::move(trace));

      if (i + 1 < turns.size() && turns[i + 1].is_system()) {
        Turn& reply = turns[i + 1];
        AugmentationTrace relabel = TurnTrace(TraceKind::kTurnDropout, i + 1);
        if (reply.action_label) relabel.original.push_back(*reply.action_label);
        reply.action_label = config.fallback_action;
        reply.provenance.push_back(std::move(relabel));
      }
    }
  });
  return out;
}

Corpus CounterfeitOod(const Corpus& corpus, const CounterfeitConfig& config,
                      std::uint64_t seed, unsigned jobs,
                      std::vector<std::string>* warnings) {
  config.Validate();
  double alpha = 0.0;
  if (config.alpha) {
    alpha = *config.alpha;
  } else {
    for (const auto& dialogue : corpus.dialogues) {
      for (const auto& turn : dialogue.turns) {
        if (turn.features && turn.features->reconstruction_score) {
          alpha = std::max(alpha, *turn.features->reconstruction_score);
        }
      }
    }
  }
  if (!(alpha < config.beta)) {
    throw Error(ErrorKind::kInvalidConfig,
                "counterfeit alpha (" + std::to_string(alpha) +
                    ") must be below beta (" + std::to_string(config.beta) + ")");
  }

  Corpus out = corpus;
  std::vector<char> skipped(out.dialogues.size(), 0);
  ParallelFor(out.dialogues.size(), jobs, [&](std::size_t d) {
    const std::vector<Turn>& turns = corpus.dialogues[d].turns;
    std::vector<std::size_t> user_turns;
    for (std::size_t i = 0; i < turns.size(); ++i) {
      if (turns[i].is_user()) user_turns.push_back(i);
    }
    if (user_turns.size() < 2) {
      skipped[d] = 1;
      return;
    }
    Rng rng(MixSeed(seed, d));
    // A selected turn gets its counterfeit in front of its exchange, which
    // starts at the user turn (a system turn's exchange starts at the user
    // turn right before it).
    std::vector<int> insertions(turns.size(), 0);
    for (std::size_t i = 0; i < turns.size(); ++i) {
      std::optional<std::size_t> exchange;
      if (turns[i].is_user()) {
        exchange = i;
      } else if (!config.user_turns_only && i > 0 && turns[i - 1].is_user()) {
        exchange = i - 1;
      }
      if (exchange && rng.Bernoulli(config.rho)) ++insertions[*exchange];
    }

    std::vector<Turn> result;
    for (std::size_t i = 0; i < turns.size(); ++i) {
      for (int k = 0; k < insertions[i]; ++k) {
        std::vector<std::size_t> sources;
        for (std::size_t u : user_turns) {
          if (u != i) sources.push_back(u);
        }
        const Turn& selected = turns[i];
        Turn fake;
        fake.speaker = Speaker::kUser;
        fake.tokens = turns[sources[rng.Index(sources.size())]].tokens;
        TurnFeatures features;
        if (selected.features) {
          features.context_features = selected.features->context_features;
          features.action_mask = selected.features->action_mask;
          features.previous_action = selected.features->previous_action;
        }
        if (!features.previous_action && i > 0 && turns[i - 1].is_system()) {
          features.previous_action = turns[i - 1].action_label;
        }
        features.reconstruction_score = rng.UniformReal(alpha, config.beta);
        fake.features = std::move(features);
        fake.provenance.push_back(TurnTrace(TraceKind::kCounterfeit, result.size()));
        result.push_back(std::move(fake));
        result.push_back(FallbackTurn(config.fallback_utterance,
                                      config.fallback_action,
                                      TraceKind::kCounterfeit, result.size()));
      }
      result.push_back(turns[i]);
    }
    out.dialogues[d].turns = std::move(result);
  });
  if (warnings) {
    for (std::size_t d = 0; d < skipped.size(); ++d) {
      if (skipped[d]) {
        warnings->push_back("dialogue '" + corpus.dialogues[d].id +
                            "' has fewer than two user turns; no counterfeit "
                            "turns inserted");
      }
    }
  }
  return out;
}

}  // namespace dialobust
