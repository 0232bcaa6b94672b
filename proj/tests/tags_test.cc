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

#include "core/tags.h"

#include <set>
#include <string>

#include "core/error.h"
#include "gtest/gtest.h"

namespace dialobust {
namespace {

TEST(DisfluencyTagTest, InventoryHasTwentySevenDistinctLabels) {
  const auto inventory = SwdaTagInventory();
  EXPECT_EQ(inventory.size(), 27u);
  std::set<std::string> rendered;
  for (const auto& tag : inventory) rendered.insert(tag.Render());
  EXPECT_EQ(rendered.size(), 27u);
}

TEST(DisfluencyTagTest, EveryInventoryLabelRoundTrips) {
  for (const auto& tag : SwdaTagInventory()) {
    const std::string text = tag.Render();
    EXPECT_EQ(ParseTag(text), tag) << text;
    EXPECT_EQ(ParseTag(text).Render(), text);
  }
}

TEST(DisfluencyTagTest, RendersSurfaceSyntax) {
  EXPECT_EQ(DisfluencyTag::Fluent().Render(), "<f/>");
  EXPECT_EQ(DisfluencyTag::Edit().Render(), "<e/>");
  EXPECT_EQ(DisfluencyTag::RepairEndSub().Render(), "<rpEndSub>");
  EXPECT_EQ(DisfluencyTag::RepairOnset(4, RepairQualifier::kEndSub).Render(),
            "<rm-4/><rpEndSub/>");
  EXPECT_EQ(DisfluencyTag::RepairOnset(1, RepairQualifier::kEndDel).Render(),
            "<rm-1/><rpEndDel/>");
  EXPECT_EQ(DisfluencyTag::RepairOnset(8, RepairQualifier::kMid).Render(),
            "<rm-8/><rpMid/>");
}

TEST(DisfluencyTagTest, ParsesOnsetFields) {
  const DisfluencyTag tag = ParseTag("<rm-3/><rpMid/>");
  EXPECT_TRUE(tag.is_onset());
  EXPECT_EQ(tag.retrace(), 3);
  EXPECT_EQ(tag.qualifier(), RepairQualifier::kMid);
}

TEST(DisfluencyTagTest, SwdaOnsetRejectsRetraceOutsideOneToEight) {
  for (int n : {0, 9, -1}) {
    try {
      DisfluencyTag::RepairOnset(n, RepairQualifier::kEndSub);
      ADD_FAILURE() << n;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kRetraceOutOfRange);
    }
  }
}

TEST(DisfluencyTagTest, ExtendedOnsetAllowsLongRetraces) {
  const auto tag = DisfluencyTag::ExtendedRepairOnset(12, RepairQualifier::kMid);
  EXPECT_EQ(tag.Render(), "<rm-12/><rpMid/>");
  EXPECT_EQ(ParseTag("<rm-12/><rpMid/>"), tag);
  EXPECT_THROW(DisfluencyTag::ExtendedRepairOnset(0, RepairQualifier::kMid),
               Error);
}

TEST(DisfluencyTagTest, RejectsUnknownLabels) {
  for (const char* text :
       {"", "<f>", "f", "<rm-0/><rpEndSub/>", "<rm-03/><rpEndSub/>",
        "<rm-3/>", "<rm-3/><rpSub/>", "<rpEndSub/>", " <f/>", "<e/> ",
        "<rm-x/><rpMid/>"}) {
    try {
      ParseTag(text);
      ADD_FAILURE() << "accepted '" << text << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kUnknownTag) << text;
    }
  }
}

TEST(DisfluencyTagTest, RenderAndParseSequences) {
  const std::vector<std::string> texts = {"<f/>", "<e/>", "<rm-2/><rpEndSub/>"};
  EXPECT_EQ(RenderTags(ParseTags(texts)), texts);
}

}  // namespace
}  // namespace dialobust
