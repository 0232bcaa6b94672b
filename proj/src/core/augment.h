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

#ifndef DIALOBUST_CORE_AUGMENT_H_
#define DIALOBUST_CORE_AUGMENT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/corpus.h"
#include "core/disfluency.h"
#include "core/rng.h"

namespace dialobust {

using TokenSequence = std::vector<std::string>;

enum class RestartKind { kClausal, kPrepositional };

// Disfluency injection. Probabilities apply per user turn; corrections and
// restarts are drawn only on turns where they can be realised.
struct DisfluencyAugmentConfig {
  double p_hesitation = 0.40;
  double p_correction = 0.21;
  double p_restart = 0.05;
  // Chance that a restart gets an interregnum between the two copies.
  double p_interregnum = 0.5;
  // Share of corrections realised as phrase-level (long-distance) repairs
  // when a preposition-headed phrase around the slot is available.
  double long_distance_ratio = 0.5;
  RestartKind restart_kind = RestartKind::kClausal;
  int pp_restart_max_len = 2;
  int max_per_turn = 3;
  std::vector<TokenSequence> hesitation_templates;
  std::vector<TokenSequence> interregnum_templates;
  std::vector<TokenSequence> correction_marker_templates;
  std::vector<std::string> prepositions;
  std::map<std::string, std::vector<TokenSequence>> slot_lexicon;

  // Templates and lexicon for restaurant-booking dialogues.
  static DisfluencyAugmentConfig Defaults();
  // Throws kInvalidConfig.
  void Validate() const;
};

struct OodConfig {
  double p_ood_start = 0.2;
  double p_ood_cont = 0.4;
  std::vector<TokenSequence> turn_pool;
  std::vector<TokenSequence> segment_pool;
  std::string fallback_action = "FALLBACK";
  TokenSequence fallback_utterance = Tokenize(
      "sorry i didn't catch that could you please repeat");

  void Validate() const;
};

struct DropoutConfig {
  double turn_dropout_ratio = 0.4;
  std::string unk_token = "<unk>";
  // Length bounds of the noise utterances; derived from the input corpus's
  // user turns when unset.
  std::optional<int> min_len;
  std::optional<int> max_len;
  std::string fallback_action = "FALLBACK";

  void Validate() const;
};

struct CounterfeitConfig {
  double rho = 0.15;
  // Maximum reconstruction score of the training data. When unset, the
  // largest score stored in the input corpus (or 0) is used.
  std::optional<double> alpha;
  double beta = 30.0;
  bool user_turns_only = false;
  std::string fallback_action = "FALLBACK";
  TokenSequence fallback_utterance = Tokenize(
      "sorry i didn't catch that could you please repeat");

  void Validate() const;
};

// All four sections; a config file may set any subset.
struct AugmentationConfig {
  DisfluencyAugmentConfig disfluency = DisfluencyAugmentConfig::Defaults();
  OodConfig ood;
  DropoutConfig dropout;
  CounterfeitConfig counterfeit;
};

// Parses the JSON config. Template and pool lists may be given inline or as
// "<name>_file" paths (one utterance per line), resolved against `base_dir`.
// Throws kInvalidConfig, or kIo for unreadable files.
AugmentationConfig ParseAugmentationConfig(std::string_view json_text,
                                           const std::string& base_dir = "");

// ---------------------------------------------------------------------------
// Single-utterance disfluency operations. Each returns the input with one
// phenomenon added, gold tags updated and a trace appended; Cleanup() of the
// result equals Cleanup() of the input.

struct SlotSpan {
  IndexRange range;
  std::string slot_type;
};

// Leftmost-longest matches of lexicon values.
std::vector<SlotSpan> FindSlotSpans(
    const std::vector<std::string>& tokens,
    const std::map<std::string, std::vector<TokenSequence>>& lexicon);

// Inserts one hesitation template (edit tokens) at a uniformly drawn
// boundary between tokens that does not fall inside a repair. Throws
// kEmptyUtterance.
TaggedUtterance AugmentHesitation(const TaggedUtterance& input,
                                  const DisfluencyAugmentConfig& config,
                                  Rng& rng);
TaggedUtterance AugmentHesitation(const std::vector<std::string>& tokens,
                                  const DisfluencyAugmentConfig& config,
                                  Rng& rng);

// Clausal: repeats a prefix of r tokens, r uniform over the admissible
// restart points. Prepositional: repeats the first 1..pp_restart_max_len
// tokens of a preposition-initial phrase. An interregnum template is placed
// between the copies with probability p_interregnum. The second copy is the
// repair and carries the rm-n tags. Only untouched fluent tokens are copied.
// Throws kRestartNotApplicable or kNoPrepositionFound.
TaggedUtterance AugmentRestart(const TaggedUtterance& input,
                               const DisfluencyAugmentConfig& config, Rng& rng);
TaggedUtterance AugmentRestart(const std::vector<std::string>& tokens,
                               const DisfluencyAugmentConfig& config, Rng& rng);

// Replaces nothing: inserts a wrong slot value (or the whole phrase with the
// wrong value, for long-distance corrections) followed by a marker template
// in front of the true value, whose tokens become the repair. Throws
// kNoEligibleSlot.
TaggedUtterance AugmentCorrection(const TaggedUtterance& input,
                                  std::span<const SlotSpan> slots,
                                  const DisfluencyAugmentConfig& config,
                                  Rng& rng);
TaggedUtterance AugmentCorrection(const std::vector<std::string>& tokens,
                                  std::span<const SlotSpan> slots,
                                  const DisfluencyAugmentConfig& config,
                                  Rng& rng);

// ---------------------------------------------------------------------------
// Corpus pipelines. Dialogue d is processed with Rng(MixSeed(seed, d)), so
// results do not depend on `jobs`.

// Per user turn, in order: hesitation, correction, restart; each drawn
// independently, at most max_per_turn applied.
Corpus AugmentCorpus(const Corpus& corpus,
                     const DisfluencyAugmentConfig& config, std::uint64_t seed,
                     unsigned jobs = 1);

// Before every original user turn an out-of-domain run starts with
// p_ood_start and continues with p_ood_cont; each run step is a pool
// utterance followed by a fallback system turn. The user turn ending a run
// is prefixed with a segment-pool interjection.
Corpus OodAugment(const Corpus& corpus, const OodConfig& config,
                  std::uint64_t seed, unsigned jobs = 1);

// Replaces selected user turns by noise drawn from `vocab` and the UNK token
// (probability 1/2 per position) and relabels the next system turn with the
// fallback action. `vocab` must be non-empty.
Corpus TurnDropout(const Corpus& corpus, const DropoutConfig& config,
                   std::span<const std::string> vocab, std::uint64_t seed,
                   unsigned jobs = 1);

// Selects turns with probability rho and inserts, before the exchange of
// each selected turn, a counterfeit user turn (another user utterance of the
// same dialogue, copied features, score ~ U[alpha, beta]) answered by a
// fallback system turn. Dialogues with fewer than two user turns are left
// unchanged and reported in `warnings`.
Corpus CounterfeitOod(const Corpus& corpus, const CounterfeitConfig& config,
                      std::uint64_t seed, unsigned jobs = 1,
                      std::vector<std::string>* warnings = nullptr);

// Undoes every traced augmentation: drops inserted turns, restores replaced
// tokens and labels, and removes inserted spans in reverse order.
Corpus StripAugmentations(const Corpus& corpus);
Turn StripTurn(const Turn& turn);

}  // namespace dialobust

#endif  // DIALOBUST_CORE_AUGMENT_H_
