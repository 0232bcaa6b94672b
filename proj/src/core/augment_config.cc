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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "core/augment.h"
#include "core/error.h"
#include "json.hpp"

namespace dialobust {
namespace {

using Json = nlohmann::json;

std::vector<TokenSequence> Sequences(std::initializer_list<const char*> texts) {
  std::vector<TokenSequence> out;
  for (const char* text : texts) out.push_back(Tokenize(text));
  return out;
}

[[noreturn]] void ConfigError(const std::string& message) {
  throw Error(ErrorKind::kInvalidConfig, message);
}

void CheckProbability(double p, const char* name, bool allow_one = true) {
  if (!(p >= 0.0) || (allow_one ? p > 1.0 : p >= 1.0)) {
    ConfigError(std::string(name) + " must be in [0, 1" + (allow_one ? "]" : ")"));
  }
}

void CheckTemplates(const std::vector<TokenSequence>& templates,
                    const char* name) {
  if (templates.empty()) ConfigError(std::string(name) + " must not be empty");
  for (const auto& t : templates) {
    if (t.empty()) ConfigError(std::string(name) + " contains an empty entry");
  }
}

// Reads a JSON config section, rejecting unknown members.
class Section {
 public:
  Section(const Json& json, std::string name, std::string base_dir)
      : json_(json), name_(std::move(name)), base_dir_(std::move(base_dir)) {
    if (!json_.is_object()) ConfigError(name_ + " must be an object");
  }

  void AllowOnly(std::initializer_list<std::string_view> keys) const {
    for (auto it = json_.begin(); it != json_.end(); ++it) {
      bool known = false;
      for (auto key : keys) known = known || it.key() == key;
      if (!known) ConfigError("unknown key " + Where(it.key()));
    }
  }

  void Number(const char* key, double& target) const {
    if (auto it = json_.find(key); it != json_.end()) {
      if (!it->is_number()) ConfigError(Where(key) + " must be a number");
      target = it->get<double>();
    }
  }

  void Integer(const char* key, int& target) const {
    if (auto it = json_.find(key); it != json_.end()) {
      if (!it->is_number_integer()) ConfigError(Where(key) + " must be an integer");
      target = it->get<int>();
    }
  }

  void OptionalInteger(const char* key, std::optional<int>& target) const {
    if (json_.contains(key)) {
      int value = 0;
      Integer(key, value);
      target = value;
    }
  }

  void OptionalNumber(const char* key, std::optional<double>& target) const {
    if (json_.contains(key)) {
      double value = 0;
      Number(key, value);
      target = value;
    }
  }

  void Bool(const char* key, bool& target) const {
    if (auto it = json_.find(key); it != json_.end()) {
      if (!it->is_boolean()) ConfigError(Where(key) + " must be a boolean");
      target = it->get<bool>();
    }
  }

  void String(const char* key, std::string& target) const {
    if (auto it = json_.find(key); it != json_.end()) {
      if (!it->is_string()) ConfigError(Where(key) + " must be a string");
      target = it->get<std::string>();
    }
  }

  void Utterance(const char* key, TokenSequence& target) const {
    if (json_.contains(key)) {
      std::string text;
      String(key, text);
      target = Tokenize(text);
    }
  }

  void Words(const char* key, std::vector<std::string>& target) const {
    if (auto it = json_.find(key); it != json_.end()) {
      target = StringArray(*it, key);
    }
  }

  // `key` as an inline array of utterances, or `key`_file naming a text file
  // with one utterance per line.
  void Utterances(const std::string& key,
                  std::vector<TokenSequence>& target) const {
    const std::string file_key = key + "_file";
    const bool inline_given = json_.contains(key);
    const bool file_given = json_.contains(file_key);
    if (inline_given && file_given) {
      ConfigError(Where(key) + " and " + file_key + " are mutually exclusive");
    }
    if (inline_given) {
      target.clear();
      for (const auto& text : StringArray(json_.at(key), key)) {
        target.push_back(Tokenize(text));
      }
    } else if (file_given) {
      std::string path;
      String(file_key.c_str(), path);
      target = ReadUtteranceFile(Resolve(path));
    }
  }

  void Lexicon(const char* key,
               std::map<std::string, std::vector<TokenSequence>>& target) const {
    auto it = json_.find(key);
    if (it == json_.end()) return;
    if (!it->is_object()) ConfigError(Where(key) + " must be an object");
    target.clear();
    for (auto slot = it->begin(); slot != it->end(); ++slot) {
      auto& values = target[slot.key()];
      for (const auto& text : StringArray(slot.value(), slot.key())) {
        values.push_back(Tokenize(text));
      }
    }
  }

 private:
  std::string Where(std::string_view key) const {
    return name_ + "." + std::string(key);
  }

  std::vector<std::string> StringArray(const Json& value,
                                       std::string_view key) const {
    if (!value.is_array()) ConfigError(Where(key) + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& item : value) {
      if (!item.is_string()) ConfigError(Where(key) + " must be an array of strings");
      out.push_back(item.get<std::string>());
    }
    return out;
  }

  std::string Resolve(const std::string& path) const {
    std::filesystem::path p(path);
    if (p.is_relative() && !base_dir_.empty()) p = std::filesystem::path(base_dir_) / p;
    return p.string();
  }

  static std::vector<TokenSequence> ReadUtteranceFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::kIo, "cannot read '" + path + "'");
    std::vector<TokenSequence> out;
    std::string line;
    while (std::getline(in, line)) {
      auto tokens = Tokenize(line);
      if (!tokens.empty()) out.push_back(std::move(tokens));
    }
    return out;
  }

  const Json& json_;
  std::string name_;
  std::string base_dir_;
};

}  // namespace

DisfluencyAugmentConfig DisfluencyAugmentConfig::Defaults() {
  DisfluencyAugmentConfig c;
  c.hesitation_templates = Sequences({"uh", "uhm", "um"});
  c.interregnum_templates = Sequences({"uhm", "uh", "um"});
  c.correction_marker_templates =
      Sequences({"oh no", "sorry", "no sorry", "uhm sorry", "i mean"});
  c.prepositions = {"in", "with", "for", "to", "at", "on"};
  c.slot_lexicon = {
      {"cuisine", Sequences({"british", "cantonese", "french", "indian",
                             "italian", "japanese", "korean", "spanish",
                             "thai", "vietnamese"})},
      {"location", Sequences({"bangkok", "beijing", "bombay", "hanoi",
                              "london", "madrid", "paris", "rome", "seoul",
                              "tokyo"})},
      {"party_size", Sequences({"two", "four", "six", "eight"})},
      {"price", Sequences({"cheap", "moderate", "expensive"})},
  };
  return c;
}

void DisfluencyAugmentConfig::Validate() const {
  CheckProbability(p_hesitation, "p_hesitation");
  CheckProbability(p_correction, "p_correction");
  CheckProbability(p_restart, "p_restart");
  CheckProbability(p_interregnum, "p_interregnum");
  CheckProbability(long_distance_ratio, "long_distance_ratio");
  if (max_per_turn < 0) ConfigError("max_per_turn must be non-negative");
  if (pp_restart_max_len < 1) ConfigError("pp_restart_max_len must be >= 1");
  CheckTemplates(hesitation_templates, "hesitation_templates");
  CheckTemplates(interregnum_templates, "interregnum_templates");
  CheckTemplates(correction_marker_templates, "correction_marker_templates");
  for (const auto& [type, values] : slot_lexicon) {
    CheckTemplates(values, ("slot_lexicon." + type).c_str());
  }
}

void OodConfig::Validate() const {
  CheckProbability(p_ood_start, "p_ood_start", false);
  CheckProbability(p_ood_cont, "p_ood_cont", false);
  CheckTemplates(turn_pool, "ood.turn_pool (or ood.turn_pool_file)");
  CheckTemplates(segment_pool, "ood.segment_pool (or ood.segment_pool_file)");
  CheckTemplates({fallback_utterance}, "fallback_utterance");
  if (fallback_action.empty()) ConfigError("fallback_action must not be empty");
}

void DropoutConfig::Validate() const {
  CheckProbability(turn_dropout_ratio, "turn_dropout_ratio");
  if (unk_token.empty() || Tokenize(unk_token).size() != 1 ||
      Tokenize(unk_token).front().size() != unk_token.size()) {
    ConfigError("unk_token must be a single whitespace-free token");
  }
  if (min_len && *min_len < 1) ConfigError("min_len must be >= 1");
  if (max_len && *max_len < 1) ConfigError("max_len must be >= 1");
  if (min_len && max_len && *min_len > *max_len) {
    ConfigError("min_len must not exceed max_len");
  }
  if (fallback_action.empty()) ConfigError("fallback_action must not be empty");
}

void CounterfeitConfig::Validate() const {
  CheckProbability(rho, "rho");
  if (!std::isfinite(beta)) ConfigError("beta must be finite");
  if (alpha && !(*alpha < beta)) ConfigError("alpha must be below beta");
  CheckTemplates({fallback_utterance}, "fallback_utterance");
  if (fallback_action.empty()) ConfigError("fallback_action must not be empty");
}

AugmentationConfig ParseAugmentationConfig(std::string_view json_text,
                                           const std::string& base_dir) {
  Json root;
  try {
    root = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) ConfigError("config must be a JSON object");
  AugmentationConfig config;
  Section top(root, "config", base_dir);
  top.AllowOnly({"disfluency", "ood", "dropout", "counterfeit"});

  if (root.contains("disfluency")) {
    Section s(root["disfluency"], "disfluency", base_dir);
    s.AllowOnly({"p_hesitation", "p_correction", "p_restart", "p_interregnum",
                 "long_distance_ratio", "restart_kind", "pp_restart_max_len",
                 "max_per_turn", "hesitation_templates",
                 "hesitation_templates_file", "interregnum_templates",
                 "interregnum_templates_file", "correction_marker_templates",
                 "correction_marker_templates_file", "prepositions",
                 "slot_lexicon"});
    auto& c = config.disfluency;
    s.Number("p_hesitation", c.p_hesitation);
    s.Number("p_correction", c.p_correction);
    s.Number("p_restart", c.p_restart);
    s.Number("p_interregnum", c.p_interregnum);
    s.Number("long_distance_ratio", c.long_distance_ratio);
    std::string kind;
    s.String("restart_kind", kind);
    if (kind == "pp") {
      c.restart_kind = RestartKind::kPrepositional;
    } else if (!kind.empty() && kind != "clausal") {
      ConfigError("disfluency.restart_kind must be \"clausal\" or \"pp\"");
    }
    s.Integer("pp_restart_max_len", c.pp_restart_max_len);
    s.Integer("max_per_turn", c.max_per_turn);
    s.Utterances("hesitation_templates", c.hesitation_templates);
    s.Utterances("interregnum_templates", c.interregnum_templates);
    s.Utterances("correction_marker_templates", c.correction_marker_templates);
    s.Words("prepositions", c.prepositions);
    s.Lexicon("slot_lexicon", c.slot_lexicon);
    c.Validate();
  }
  if (root.contains("ood")) {
    Section s(root["ood"], "ood", base_dir);
    s.AllowOnly({"p_ood_start", "p_ood_cont", "turn_pool", "turn_pool_file",
                 "segment_pool", "segment_pool_file", "fallback_action",
                 "fallback_utterance"});
    auto& c = config.ood;
    s.Number("p_ood_start", c.p_ood_start);
    s.Number("p_ood_cont", c.p_ood_cont);
    s.Utterances("turn_pool", c.turn_pool);
    s.Utterances("segment_pool", c.segment_pool);
    s.String("fallback_action", c.fallback_action);
    s.Utterance("fallback_utterance", c.fallback_utterance);
    c.Validate();
  }
  if (root.contains("dropout")) {
    Section s(root["dropout"], "dropout", base_dir);
    s.AllowOnly({"turn_dropout_ratio", "unk_token", "min_len", "max_len",
                 "fallback_action"});
    auto& c = config.dropout;
    s.Number("turn_dropout_ratio", c.turn_dropout_ratio);
    s.String("unk_token", c.unk_token);
    s.OptionalInteger("min_len", c.min_len);
    s.OptionalInteger("max_len", c.max_len);
    s.String("fallback_action", c.fallback_action);
    c.Validate();
  }
  if (root.contains("counterfeit")) {
    Section s(root["counterfeit"], "counterfeit", base_dir);
    s.AllowOnly({"rho", "alpha", "beta", "user_turns_only", "fallback_action",
                 "fallback_utterance"});
    auto& c = config.counterfeit;
    s.Number("rho", c.rho);
    s.OptionalNumber("alpha", c.alpha);
    s.Number("beta", c.beta);
    s.Bool("user_turns_only", c.user_turns_only);
    s.String("fallback_action", c.fallback_action);
    s.Utterance("fallback_utterance", c.fallback_utterance);
    c.Validate();
  }
  return config;
}

}  // namespace dialobust
