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

#include <charconv>
#include <string>

#include "core/error.h"

namespace dialobust {
namespace {

constexpr std::string_view kFluentText = "<f/>";
constexpr std::string_view kEditText = "<e/>";
constexpr std::string_view kEndSubText = "<rpEndSub>";
constexpr std::string_view kOnsetPrefix = "<rm-";

std::string_view QualifierSuffix(RepairQualifier qualifier) {
  switch (qualifier) {
    case RepairQualifier::kEndSub: return "/><rpEndSub/>";
    case RepairQualifier::kEndDel: return "/><rpEndDel/>";
    case RepairQualifier::kMid: return "/><rpMid/>";
  }
  return "";
}

}  // namespace

DisfluencyTag DisfluencyTag::RepairOnset(int retrace,
                                         RepairQualifier qualifier) {
  if (retrace < 1 || retrace > kMaxSwdaRetrace) {
    throw Error(ErrorKind::kRetraceOutOfRange,
                "SWDA retrace must be in [1, 8], got " +
                    std::to_string(retrace));
  }
  return DisfluencyTag(TagKind::kRepairOnset, retrace, qualifier);
}

DisfluencyTag DisfluencyTag::ExtendedRepairOnset(int retrace,
                                                 RepairQualifier qualifier) {
  if (retrace < 1) {
    throw Error(ErrorKind::kRetraceOutOfRange,
                "retrace must be positive, got " + std::to_string(retrace));
  }
  return DisfluencyTag(TagKind::kRepairOnset, retrace, qualifier);
}

std::string DisfluencyTag::Render() const {
  switch (kind_) {
    case TagKind::kFluent: return std::string(kFluentText);
    case TagKind::kEdit: return std::string(kEditText);
    case TagKind::kRepairEndSub: return std::string(kEndSubText);
    case TagKind::kRepairOnset:
      return std::string(kOnsetPrefix) + std::to_string(retrace_) +
             std::string(QualifierSuffix(qualifier_));
  }
  return {};
}

DisfluencyTag ParseTag(std::string_view text) {
  if (text == kFluentText) return DisfluencyTag::Fluent();
  if (text == kEditText) return DisfluencyTag::Edit();
  if (text == kEndSubText) return DisfluencyTag::RepairEndSub();
  auto unknown = [&] {
    return Error(ErrorKind::kUnknownTag, "'" + std::string(text) + "'");
  };
  if (!text.starts_with(kOnsetPrefix)) throw unknown();
  std::string_view rest = text.substr(kOnsetPrefix.size());
  std::size_t digits = 0;
  while (digits < rest.size() && rest[digits] >= '0' && rest[digits] <= '9') {
    ++digits;
  }
  if (digits == 0 || digits > 6 || rest[0] == '0') throw unknown();
  int retrace = 0;
  std::from_chars(rest.data(), rest.data() + digits, retrace);
  const std::string_view suffix = rest.substr(digits);
  for (RepairQualifier q : {RepairQualifier::kEndSub, RepairQualifier::kEndDel,
                            RepairQualifier::kMid}) {
    if (suffix == QualifierSuffix(q)) {
      return DisfluencyTag::ExtendedRepairOnset(retrace, q);
    }
  }
  throw unknown();
}

std::vector<DisfluencyTag> SwdaTagInventory() {
  std::vector<DisfluencyTag> inventory = {DisfluencyTag::Fluent(),
                                          DisfluencyTag::Edit()};
  for (int n = 1; n <= DisfluencyTag::kMaxSwdaRetrace; ++n) {
    for (RepairQualifier q : {RepairQualifier::kEndSub,
                              RepairQualifier::kEndDel, RepairQualifier::kMid}) {
      inventory.push_back(DisfluencyTag::RepairOnset(n, q));
    }
  }
  inventory.push_back(DisfluencyTag::RepairEndSub());
  return inventory;
}

std::vector<std::string> RenderTags(const std::vector<DisfluencyTag>& tags) {
  std::vector<std::string> out;
  out.reserve(tags.size());
  for (const auto& tag : tags) out.push_back(tag.Render());
  return out;
}

std::vector<DisfluencyTag> ParseTags(const std::vector<std::string>& texts) {
  std::vector<DisfluencyTag> out;
  out.reserve(texts.size());
  for (const auto& text : texts) out.push_back(ParseTag(text));
  return out;
}

}  // namespace dialobust
