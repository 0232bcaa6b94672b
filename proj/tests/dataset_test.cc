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

#include <functional>
#include <iterator>
#include <set>
#include <string>
#include <vector>

#include "core/augment.h"
#include "core/error.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "support/booking_corpus.h"

namespace dialobust {
namespace {

using Json = nlohmann::json;

Turn MakeTurn(Speaker speaker, const char* text) {
  Turn turn;
  turn.speaker = speaker;
  turn.tokens = Tokenize(text);
  return turn;
}

// A dialogue of `exchanges` user/system pairs.
Dialogue MakeDialogue(const std::string& id, int exchanges,
                      std::optional<double> rating = std::nullopt) {
  Dialogue d;
  d.id = id;
  d.rating = rating;
  for (int e = 0; e < exchanges; ++e) {
    d.turns.push_back(MakeTurn(Speaker::kUser, "hello there"));
    d.turns.push_back(MakeTurn(Speaker::kSystem, e % 2 ? "reply b" : "reply a"));
  }
  return d;
}

ErrorKind KindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kIo;
}

// ---------------------------------------------------------------------------
// Statistics.

TEST(CorpusStatsTest, CountsTurnsAndTraces) {
  Corpus corpus;
  corpus.dialogues.push_back(MakeDialogue("a", 2));
  corpus.dialogues.push_back(MakeDialogue("b", 1));
  corpus.dialogues[0].turns[0].provenance.push_back(
      {TraceKind::kHesitation, {1, 2}, {}, {}, false});
  corpus.dialogues[0].turns[0].provenance.push_back(
      {TraceKind::kHesitation, {0, 1}, {}, {}, false});
  corpus.dialogues[1].turns[1].action_label = "api_call x";

  const StatsReport stats = CorpusStats(corpus);
  EXPECT_EQ(stats.dialogues, 2u);
  EXPECT_EQ(stats.turns, 6u);
  EXPECT_EQ(stats.user_turns, 3u);
  EXPECT_EQ(stats.system_turns, 3u);
  EXPECT_DOUBLE_EQ(*stats.avg_turns_per_dialogue, 3.0);
  EXPECT_DOUBLE_EQ(stats.user_turn_fraction.at(TraceKind::kHesitation), 1.0 / 3);
  EXPECT_DOUBLE_EQ(stats.user_turn_fraction.at(TraceKind::kRestart), 0.0);
  // "reply a", "reply b" and the api_call label.
  EXPECT_EQ(stats.action_inventory, 3u);
  EXPECT_EQ(stats.vocab_size, 5u);  // a b hello reply there
}

TEST(CorpusStatsTest, EmptyCorpus) {
  const StatsReport stats = CorpusStats(Corpus{});
  EXPECT_EQ(stats.dialogues, 0u);
  EXPECT_FALSE(stats.avg_turns_per_dialogue);
  EXPECT_TRUE(stats.user_turn_fraction.empty());
  const Json j = Json::parse(StatsToJson(stats));
  EXPECT_TRUE(j["avg_turns_per_dialogue"].is_null());
  EXPECT_NE(StatsToText(stats).find("n/a"), std::string::npos);
}

TEST(CorpusStatsTest, JsonAndTextRendering) {
  Corpus corpus;
  corpus.dialogues.push_back(MakeDialogue("a", 3));
  const StatsReport stats = CorpusStats(corpus);
  const Json j = Json::parse(StatsToJson(stats));
  EXPECT_EQ(j["dialogues"], 1);
  EXPECT_EQ(j["turns"], 6);
  EXPECT_EQ(j["user_turns"], 3);
  EXPECT_EQ(j["system_turns"], 3);
  EXPECT_DOUBLE_EQ(j["avg_turns_per_dialogue"].get<double>(), 6.0);
  EXPECT_EQ(j["user_turn_fraction"].size(), std::size(kAllTraceKinds));
  EXPECT_EQ(j["action_inventory"], 2);
  const std::string text = StatsToText(stats);
  EXPECT_NE(text.find("avg turns per dialogue       6.00\n"), std::string::npos);
  EXPECT_NE(text.find("user turns with hesitation   0.00%\n"), std::string::npos)
      << text;
}

// ---------------------------------------------------------------------------
// Length filtering.

TEST(NearestRankPercentileTest, TextbookValues) {
  const std::vector<std::size_t> values = {15, 20, 35, 40, 50};
  EXPECT_EQ(NearestRankPercentile(values, 5), 15u);
  EXPECT_EQ(NearestRankPercentile(values, 30), 20u);
  EXPECT_EQ(NearestRankPercentile(values, 40), 20u);
  EXPECT_EQ(NearestRankPercentile(values, 50), 35u);
  EXPECT_EQ(NearestRankPercentile(values, 100), 50u);
  EXPECT_EQ(NearestRankPercentile({50, 15, 40, 35, 20}, 50), 35u);
}

TEST(NearestRankPercentileTest, RejectsBadArguments) {
  EXPECT_EQ(KindOf([] { NearestRankPercentile({}, 50); }),
            ErrorKind::kInvalidArgument);
  EXPECT_EQ(KindOf([] { NearestRankPercentile({1}, 0); }),
            ErrorKind::kInvalidArgument);
  EXPECT_EQ(KindOf([] { NearestRankPercentile({1}, 100.5); }),
            ErrorKind::kInvalidArgument);
}

TEST(FilterTest, FilterByLengthKeepsHalfOpenRangeInOrder) {
  Corpus corpus;
  for (int n = 1; n <= 6; ++n) {
    corpus.dialogues.push_back(MakeDialogue(std::to_string(n), n));
  }
  const Corpus out = FilterByLength(corpus, 4, 10);  // 4 <= turns < 10
  std::vector<std::string> ids;
  for (const auto& d : out.dialogues) ids.push_back(d.id);
  EXPECT_EQ(ids, (std::vector<std::string>{"2", "3", "4"}));
  EXPECT_EQ(FilterByLength(out, 4, 10), out);
}

TEST(FilterTest, FilterOutliersDropsLongTail) {
  Corpus corpus;
  // Lengths 2, 4, ..., 40 turns.
  for (int n = 1; n <= 20; ++n) {
    corpus.dialogues.push_back(MakeDialogue(std::to_string(n), n));
  }
  // 95th percentile of 20 values is rank 19 -> 38 turns; 38 and 40 go.
  const Corpus out = FilterOutliers(corpus, 0, 95);
  ASSERT_EQ(out.dialogues.size(), 18u);
  EXPECT_EQ(out.dialogues.back().id, "18");
  const Corpus trimmed = FilterOutliers(corpus, 6, 95);
  EXPECT_EQ(trimmed.dialogues.front().id, "3");
  EXPECT_EQ(FilterOutliers(Corpus{}, 0, 95), Corpus{});
  EXPECT_EQ(KindOf([&] { FilterOutliers(corpus, 0, 0); }),
            ErrorKind::kInvalidArgument);
}

// ---------------------------------------------------------------------------
// Ranker pairs.

TEST(RankerDatasetTest, LengthTargetIsMinMaxNormalised) {
  Corpus corpus;
  corpus.dialogues.push_back(MakeDialogue("short", 1));
  corpus.dialogues.push_back(MakeDialogue("mid", 3));
  corpus.dialogues.push_back(MakeDialogue("long", 5));
  const auto pairs = BuildRankerDataset(corpus, 0.3, 0.7, RankerTarget::kLength, 1);
  // "short" (target 0) has one system turn, "long" (target 1) five; the
  // positives are downsampled to one and "mid" (0.5) is dropped.
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0].dialogue_id, "short");
  EXPECT_EQ(pairs[0].polarity, Polarity::kNegative);
  EXPECT_DOUBLE_EQ(pairs[0].target, 0.0);
  EXPECT_EQ(pairs[1].dialogue_id, "long");
  EXPECT_EQ(pairs[1].polarity, Polarity::kPositive);
  EXPECT_DOUBLE_EQ(pairs[1].target, 1.0);
  EXPECT_TRUE(pairs[1].response.is_system());
  EXPECT_LE(pairs[1].context.size(), 6u);
}

TEST(RankerDatasetTest, RatingTargetBalancedAndDeterministic) {
  const Corpus corpus =
      testing::BookingCorpus(400, 3, {.min_exchanges = 3, .max_exchanges = 8,
                                      .rated = true});
  const auto a = BuildRankerDataset(corpus, 0.3, 0.7, RankerTarget::kRating, 9);
  const auto b = BuildRankerDataset(corpus, 0.3, 0.7, RankerTarget::kRating, 9);
  ASSERT_FALSE(a.empty());
  std::size_t positives = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    positives += a[i].polarity == Polarity::kPositive;
    // Ratings 1-2 map to 0 and 0.25, ratings 4-5 to 0.75 and 1.
    EXPECT_TRUE(a[i].target < 0.3 || a[i].target > 0.7);
    EXPECT_EQ(a[i].polarity == Polarity::kPositive, a[i].target > 0.7);
    EXPECT_EQ(a[i].dialogue_id, b[i].dialogue_id);
    EXPECT_EQ(a[i].response, b[i].response);
  }
  EXPECT_EQ(2 * positives, a.size());
  EXPECT_EQ(RankerPairsToJsonl(a), RankerPairsToJsonl(b));
}

TEST(RankerDatasetTest, ContextHoldsUpToThreeExchanges) {
  Corpus corpus;
  corpus.dialogues.push_back(MakeDialogue("a", 1));
  corpus.dialogues.push_back(MakeDialogue("b", 6));
  const auto pairs = BuildRankerDataset(corpus, 0.3, 0.7, RankerTarget::kLength, 4);
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0].context.size(), 1u);
  // Any positive response has at most six context turns ending right before
  // it.
  EXPECT_LE(pairs[1].context.size(), 6u);
  EXPECT_TRUE(pairs[1].context.back().is_user());
}

TEST(RankerDatasetTest, Errors) {
  Corpus corpus;
  corpus.dialogues.push_back(MakeDialogue("a", 2));
  EXPECT_EQ(KindOf([&] {
              BuildRankerDataset(corpus, 0.3, 0.7, RankerTarget::kRating, 1);
            }),
            ErrorKind::kNoRatedDialogues);
  EXPECT_EQ(KindOf([&] {
              BuildRankerDataset(corpus, 0.7, 0.3, RankerTarget::kLength, 1);
            }),
            ErrorKind::kInvalidArgument);
}

TEST(RankerDatasetTest, JsonlShape) {
  Corpus corpus;
  corpus.dialogues.push_back(MakeDialogue("a", 1, 1.0));
  corpus.dialogues.push_back(MakeDialogue("b", 1, 5.0));
  corpus.dialogues[1].turns[1].action_label = "api_call x";
  const auto pairs = BuildRankerDataset(corpus, 0.3, 0.7, RankerTarget::kRating, 1);
  EXPECT_EQ(RankerPairsToJsonl(pairs),
            "{\"dialogue_id\":\"a\",\"context\":[{\"speaker\":\"user\","
            "\"tokens\":[\"hello\",\"there\"]}],\"response\":{\"speaker\":"
            "\"system\",\"tokens\":[\"reply\",\"a\"]},\"target\":0.0,"
            "\"polarity\":\"negative\"}\n"
            "{\"dialogue_id\":\"b\",\"context\":[{\"speaker\":\"user\","
            "\"tokens\":[\"hello\",\"there\"]}],\"response\":{\"speaker\":"
            "\"system\",\"tokens\":[\"reply\",\"a\"],\"action\":\"api_call "
            "x\"},\"target\":1.0,\"polarity\":\"positive\"}\n");
}

}  // namespace
}  // namespace dialobust
