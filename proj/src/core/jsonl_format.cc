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

// JSON-lines corpus format, one dialogue per line:
//
// {"id": str,
//  "turns": [{"speaker": "user"|"system",
//             "tokens": [str],
//             "action": str?,
//             "tags": [str]?,
//             "features": {"context": [num], "action_mask": [0|1],
//                          "reconstruction_score": num?,
//                          "previous_action": str?}?,
//             "provenance": [{"kind": str, "span": [int, int],
//                             "original": [str]?, "original_tags": [str]?,
//                             "created_tags": true?}]?}],
//  "rating": num?,
//  "kb_rows": [[str]]?}
//
// Optional members are omitted when absent or empty. Member order is fixed as
// listed, which makes the writer's output byte-stable.

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "core/corpus.h"
#include "core/error.h"
#include "json.hpp"

namespace dialobust {
namespace {

using Json = nlohmann::ordered_json;

class Reader {
 public:
  explicit Reader(std::size_t line_no) : line_no_(line_no) {}

  [[noreturn]] void Fail(const std::string& path, const std::string& what) const {
    throw SchemaViolation(line_no_, path, what);
  }

  const Json& Member(const Json& object, const std::string& path,
                     const char* key) const {
    auto it = object.find(key);
    if (it == object.end()) Fail(path + "/" + key, "missing member");
    return *it;
  }

  void CheckKeys(const Json& object, const std::string& path,
                 std::initializer_list<std::string_view> allowed) const {
    if (!object.is_object()) Fail(path, "expected object");
    for (auto it = object.begin(); it != object.end(); ++it) {
      bool known = false;
      for (auto key : allowed) known = known || it.key() == key;
      if (!known) Fail(path + "/" + it.key(), "unknown member");
    }
  }

  std::string String(const Json& value, const std::string& path) const {
    if (!value.is_string()) Fail(path, "expected string");
    return value.get<std::string>();
  }

  double Number(const Json& value, const std::string& path) const {
    if (!value.is_number()) Fail(path, "expected number");
    return value.get<double>();
  }

  std::vector<std::string> Strings(const Json& value,
                                   const std::string& path) const {
    if (!value.is_array()) Fail(path, "expected array");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < value.size(); ++i) {
      out.push_back(String(value[i], path + "/" + std::to_string(i)));
    }
    return out;
  }

  std::vector<DisfluencyTag> Tags(const Json& value,
                                  const std::string& path) const {
    std::vector<DisfluencyTag> tags;
    const auto texts = Strings(value, path);
    for (std::size_t i = 0; i < texts.size(); ++i) {
      try {
        tags.push_back(ParseTag(texts[i]));
      } catch (const Error& e) {
        Fail(path + "/" + std::to_string(i), e.what());
      }
    }
    return tags;
  }

  TurnFeatures Features(const Json& value, const std::string& path) const {
    CheckKeys(value, path, {"context", "action_mask", "reconstruction_score",
                            "previous_action"});
    TurnFeatures features;
    if (auto it = value.find("context"); it != value.end()) {
      if (!it->is_array()) Fail(path + "/context", "expected array");
      for (std::size_t i = 0; i < it->size(); ++i) {
        features.context_features.push_back(
            Number((*it)[i], path + "/context/" + std::to_string(i)));
      }
    }
    if (auto it = value.find("action_mask"); it != value.end()) {
      if (!it->is_array()) Fail(path + "/action_mask", "expected array");
      for (std::size_t i = 0; i < it->size(); ++i) {
        const Json& flag = (*it)[i];
        if (!flag.is_number_integer() ||
            (flag.get<int>() != 0 && flag.get<int>() != 1)) {
          Fail(path + "/action_mask/" + std::to_string(i), "expected 0 or 1");
        }
        features.action_mask.push_back(flag.get<int>());
      }
    }
    if (auto it = value.find("reconstruction_score"); it != value.end()) {
      features.reconstruction_score =
          Number(*it, path + "/reconstruction_score");
    }
    if (auto it = value.find("previous_action"); it != value.end()) {
      features.previous_action = String(*it, path + "/previous_action");
    }
    return features;
  }

  AugmentationTrace Trace(const Json& value, const std::string& path) const {
    CheckKeys(value, path,
              {"kind", "span", "original", "original_tags", "created_tags"});
    AugmentationTrace trace;
    const std::string kind = String(Member(value, path, "kind"), path + "/kind");
    const auto parsed = ParseTraceKind(kind);
    if (!parsed) Fail(path + "/kind", "unknown trace kind '" + kind + "'");
    trace.kind = *parsed;
    const Json& span = Member(value, path, "span");
    if (!span.is_array() || span.size() != 2 ||
        !span[0].is_number_unsigned() || !span[1].is_number_unsigned() ||
        span[0].get<std::size_t>() > span[1].get<std::size_t>()) {
      Fail(path + "/span", "expected [begin, end] with begin <= end");
    }
    trace.span = {span[0].get<std::size_t>(), span[1].get<std::size_t>()};
    if (auto it = value.find("original"); it != value.end()) {
      trace.original = Strings(*it, path + "/original");
    }
    if (auto it = value.find("original_tags"); it != value.end()) {
      trace.original_tags = Strings(*it, path + "/original_tags");
      Tags(*it, path + "/original_tags");
    }
    if (auto it = value.find("created_tags"); it != value.end()) {
      if (!it->is_boolean()) Fail(path + "/created_tags", "expected boolean");
      trace.created_tags = it->get<bool>();
    }
    return trace;
  }

  Turn ReadTurn(const Json& value, const std::string& path) const {
    CheckKeys(value, path,
              {"speaker", "tokens", "action", "tags", "features", "provenance"});
    Turn turn;
    const std::string speaker =
        String(Member(value, path, "speaker"), path + "/speaker");
    if (speaker == "user") {
      turn.speaker = Speaker::kUser;
    } else if (speaker == "system") {
      turn.speaker = Speaker::kSystem;
    } else {
      Fail(path + "/speaker", "expected \"user\" or \"system\"");
    }
    turn.tokens = Strings(Member(value, path, "tokens"), path + "/tokens");
    for (std::size_t i = 0; i < turn.tokens.size(); ++i) {
      const auto& token = turn.tokens[i];
      if (token.empty() || token.find_first_of(" \t\n\r\f\v") != std::string::npos) {
        Fail(path + "/tokens/" + std::to_string(i),
             "token empty or contains whitespace");
      }
    }
    if (auto it = value.find("action"); it != value.end()) {
      turn.action_label = String(*it, path + "/action");
    }
    if (auto it = value.find("tags"); it != value.end()) {
      turn.tags = Tags(*it, path + "/tags");
      if (turn.tags->size() != turn.tokens.size()) {
        Fail(path + "/tags", "length differs from tokens");
      }
    }
    if (auto it = value.find("features"); it != value.end()) {
      turn.features = Features(*it, path + "/features");
    }
    if (auto it = value.find("provenance"); it != value.end()) {
      if (!it->is_array()) Fail(path + "/provenance", "expected array");
      for (std::size_t i = 0; i < it->size(); ++i) {
        turn.provenance.push_back(
            Trace((*it)[i], path + "/provenance/" + std::to_string(i)));
      }
    }
    return turn;
  }

  Dialogue ReadDialogue(const Json& value) const {
    CheckKeys(value, "", {"id", "turns", "rating", "kb_rows"});
    Dialogue dialogue;
    dialogue.id = String(Member(value, "", "id"), "/id");
    const Json& turns = Member(value, "", "turns");
    if (!turns.is_array()) Fail("/turns", "expected array");
    for (std::size_t i = 0; i < turns.size(); ++i) {
      dialogue.turns.push_back(ReadTurn(turns[i], "/turns/" + std::to_string(i)));
    }
    if (auto it = value.find("rating"); it != value.end()) {
      const double rating = Number(*it, "/rating");
      if (rating < 1.0 || rating > 5.0) Fail("/rating", "outside [1, 5]");
      dialogue.rating = rating;
    }
    if (auto it = value.find("kb_rows"); it != value.end()) {
      if (!it->is_array()) Fail("/kb_rows", "expected array");
      for (std::size_t i = 0; i < it->size(); ++i) {
        dialogue.kb_rows.push_back(
            Strings((*it)[i], "/kb_rows/" + std::to_string(i)));
      }
    }
    return dialogue;
  }

 private:
  std::size_t line_no_;
};

Json TraceToJson(const AugmentationTrace& trace) {
  Json j;
  j["kind"] = std::string(TraceKindName(trace.kind));
  j["span"] = Json::array({trace.span.begin, trace.span.end});
  if (!trace.original.empty()) j["original"] = trace.original;
  if (!trace.original_tags.empty()) j["original_tags"] = trace.original_tags;
  if (trace.created_tags) j["created_tags"] = true;
  return j;
}

Json TurnToJson(const Turn& turn) {
  Json j;
  j["speaker"] = turn.is_user() ? "user" : "system";
  j["tokens"] = turn.tokens;
  if (turn.action_label) j["action"] = *turn.action_label;
  if (turn.tags) j["tags"] = RenderTags(*turn.tags);
  if (turn.features) {
    Json f = Json::object();
    if (!turn.features->context_features.empty()) {
      f["context"] = turn.features->context_features;
    }
    if (!turn.features->action_mask.empty()) {
      f["action_mask"] = turn.features->action_mask;
    }
    if (turn.features->reconstruction_score) {
      f["reconstruction_score"] = *turn.features->reconstruction_score;
    }
    if (turn.features->previous_action) {
      f["previous_action"] = *turn.features->previous_action;
    }
    j["features"] = std::move(f);
  }
  if (!turn.provenance.empty()) {
    Json p = Json::array();
    for (const auto& trace : turn.provenance) p.push_back(TraceToJson(trace));
    j["provenance"] = std::move(p);
  }
  return j;
}

}  // namespace

Corpus ParseJsonl(std::string_view text) {
  Corpus corpus;
  std::set<std::string> ids;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                       : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    if (line.empty()) continue;
    if (line_no == 1 && line.starts_with(kFormatHeaderPrefix)) continue;
    Json value;
    try {
      value = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw SchemaViolation(line_no, "", std::string("invalid JSON: ") + e.what());
    }
    corpus.dialogues.push_back(Reader(line_no).ReadDialogue(value));
    if (!ids.insert(corpus.dialogues.back().id).second) {
      throw SchemaViolation(line_no, "/id", "duplicate dialogue id");
    }
  }
  return corpus;
}

std::string WriteJsonl(const Corpus& corpus) {
  std::string out;
  for (const Dialogue& dialogue : corpus.dialogues) {
    Json j;
    j["id"] = dialogue.id;
    Json turns = Json::array();
    for (const auto& turn : dialogue.turns) turns.push_back(TurnToJson(turn));
    j["turns"] = std::move(turns);
    if (dialogue.rating) j["rating"] = *dialogue.rating;
    if (!dialogue.kb_rows.empty()) j["kb_rows"] = dialogue.kb_rows;
    try {
      out += j.dump();
    } catch (const Json::type_error& e) {
      throw Error(ErrorKind::kSchemaViolation,
                  "dialogue '" + dialogue.id + "': " + e.what());
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace dialobust
