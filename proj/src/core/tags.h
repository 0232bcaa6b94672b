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

#ifndef DIALOBUST_CORE_TAGS_H_
#define DIALOBUST_CORE_TAGS_H_

#include <string>
#include <string_view>
#include <vector>

namespace dialobust {

enum class TagKind { kFluent, kEdit, kRepairOnset, kRepairEndSub };

// How a repair onset closes: on the same token as a substitution or deletion,
// or later, at a bare <rpEndSub> (multi-token substitution).
enum class RepairQualifier { kEndSub, kEndDel, kMid };

// One SWDA-style disfluency label.
//
// Surface syntax:
//   <f/>                    fluent token
//   <e/>                    edit token (filler, interregnum)
//   <rm-N/><rpEndSub/>      single-token substitution, reparandum N back
//   <rm-N/><rpEndDel/>      deletion, reparandum N back
//   <rm-N/><rpMid/>         multi-token substitution start
//   <rpEndSub>              multi-token substitution end
//
// The SWDA corpus caps N at 8, which yields 27 labels. Longer retraces occur
// in generated data (clausal restarts) and must be built explicitly through
// ExtendedRepairOnset().
class DisfluencyTag {
 public:
  static constexpr int kMaxSwdaRetrace = 8;

  constexpr DisfluencyTag() = default;

  static DisfluencyTag Fluent() { return DisfluencyTag(); }
  static DisfluencyTag Edit() { return DisfluencyTag(TagKind::kEdit, 0, {}); }
  static DisfluencyTag RepairEndSub() {
    return DisfluencyTag(TagKind::kRepairEndSub, 0, {});
  }
  // Throws kRetraceOutOfRange unless 1 <= retrace <= kMaxSwdaRetrace.
  static DisfluencyTag RepairOnset(int retrace, RepairQualifier qualifier);
  // Throws kRetraceOutOfRange unless retrace >= 1.
  static DisfluencyTag ExtendedRepairOnset(int retrace,
                                           RepairQualifier qualifier);

  TagKind kind() const { return kind_; }
  // Meaningful for repair onsets only.
  int retrace() const { return retrace_; }
  RepairQualifier qualifier() const { return qualifier_; }

  bool is_fluent() const { return kind_ == TagKind::kFluent; }
  bool is_edit() const { return kind_ == TagKind::kEdit; }
  bool is_onset() const { return kind_ == TagKind::kRepairOnset; }
  bool is_end_sub() const { return kind_ == TagKind::kRepairEndSub; }

  std::string Render() const;

  friend bool operator==(const DisfluencyTag&, const DisfluencyTag&) = default;

 private:
  constexpr DisfluencyTag(TagKind kind, int retrace, RepairQualifier qualifier)
      : kind_(kind), retrace_(retrace), qualifier_(qualifier) {}

  TagKind kind_ = TagKind::kFluent;
  int retrace_ = 0;
  RepairQualifier qualifier_ = RepairQualifier::kEndSub;
};

// Parses the surface syntax above. Any retrace >= 1 without leading zeros is
// accepted. Throws kUnknownTag otherwise.
DisfluencyTag ParseTag(std::string_view text);

// The 27 labels of the SWDA tag set: <f/>, <e/>, rm-1..8 x {EndSub, EndDel,
// Mid}, and <rpEndSub>.
std::vector<DisfluencyTag> SwdaTagInventory();

std::vector<std::string> RenderTags(const std::vector<DisfluencyTag>& tags);
std::vector<DisfluencyTag> ParseTags(const std::vector<std::string>& texts);

}  // namespace dialobust

#endif  // DIALOBUST_CORE_TAGS_H_
