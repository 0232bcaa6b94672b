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

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "core/corpus.h"
#include "core/error.h"

namespace dialobust {
namespace {

constexpr std::string_view kApiCall = "api_call";

std::vector<std::string> SplitTokens(std::string_view text,
                                     std::size_t line_no) {
  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (true) {
    const std::size_t space = text.find(' ', start);
    const std::string_view token = text.substr(
        start, space == std::string_view::npos ? std::string_view::npos
                                               : space - start);
    if (token.empty()) {
      throw LineError(ErrorKind::kMalformedLine, line_no,
                      "empty token (stray or repeated space)");
    }
    tokens.emplace_back(token);
    if (space == std::string_view::npos) break;
    start = space + 1;
  }
  return tokens;
}

Turn MakeSystemTurn(std::vector<std::string> tokens) {
  Turn turn;
  turn.speaker = Speaker::kSystem;
  if (!tokens.empty() && tokens.front() == kApiCall) {
    turn.action_label = JoinTokens(tokens);
  }
  turn.tokens = std::move(tokens);
  return turn;
}

class BabiParser {
 public:
  Corpus Parse(std::string_view text) {
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < text.size()) {
      const std::size_t eol = text.find('\n', pos);
      const std::string_view line =
          text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                         : eol - pos);
      ++line_no;
      pos = eol == std::string_view::npos ? text.size() : eol + 1;
      if (line_no == 1 && line.starts_with(kFormatHeaderPrefix)) continue;
      if (line.empty()) {
        FinishDialogue();
        continue;
      }
      ParseLine(line, line_no);
    }
    FinishDialogue();
    return std::move(corpus_);
  }

 private:
  void ParseLine(std::string_view line, std::size_t line_no) {
    const std::size_t space = line.find(' ');
    if (space == std::string_view::npos) {
      throw LineError(ErrorKind::kMalformedLine, line_no,
                      "expected '<index> <utterance>'");
    }
    const std::string_view index_text = line.substr(0, space);
    std::size_t index = 0;
    const auto [ptr, ec] = std::from_chars(
        index_text.data(), index_text.data() + index_text.size(), index);
    if (ec != std::errc() || ptr != index_text.data() + index_text.size() ||
        index_text.front() == '0') {
      throw LineError(ErrorKind::kMalformedLine, line_no,
                      "non-numeric line index '" + std::string(index_text) + "'");
    }
    if (index != next_index_) {
      throw LineError(ErrorKind::kNonMonotonicIndex, line_no,
                      "expected index " + std::to_string(next_index_) +
                          ", got " + std::to_string(index));
    }
    ++next_index_;

    const std::string_view body = line.substr(space + 1);
    const std::size_t tab = body.find('\t');
    if (tab == std::string_view::npos) {
      std::vector<std::string> tokens = SplitTokens(body, line_no);
      if (tokens.front() != kApiCall) {
        throw LineError(ErrorKind::kMalformedLine, line_no, "missing tab");
      }
      current_.turns.push_back(MakeSystemTurn(std::move(tokens)));
      return;
    }
    if (body.find('\t', tab + 1) != std::string_view::npos) {
      throw LineError(ErrorKind::kMalformedLine, line_no, "more than one tab");
    }
    Turn user;
    user.speaker = Speaker::kUser;
    user.tokens = SplitTokens(body.substr(0, tab), line_no);
    current_.turns.push_back(std::move(user));
    current_.turns.push_back(
        MakeSystemTurn(SplitTokens(body.substr(tab + 1), line_no)));
  }

  void FinishDialogue() {
    if (current_.turns.empty()) return;
    current_.id = std::to_string(corpus_.dialogues.size() + 1);
    corpus_.dialogues.push_back(std::move(current_));
    current_ = Dialogue();
    next_index_ = 1;
  }

  Corpus corpus_;
  Dialogue current_;
  std::size_t next_index_ = 1;
};

}  // namespace

Corpus ParseBabi(std::string_view text) { return BabiParser().Parse(text); }

std::string WriteBabi(const Corpus& corpus) {
  std::string out;
  for (const Dialogue& dialogue : corpus.dialogues) {
    if (dialogue.turns.empty()) {
      throw Error(ErrorKind::kEmptyDialogue, "dialogue '" + dialogue.id + "'");
    }
    std::size_t index = 1;
    for (std::size_t i = 0; i < dialogue.turns.size(); ++index) {
      const Turn& turn = dialogue.turns[i];
      const bool paired = turn.is_user() && i + 1 < dialogue.turns.size() &&
                          dialogue.turns[i + 1].is_system();
      const bool lone_api_call = turn.is_system() && !turn.tokens.empty() &&
                                 turn.tokens.front() == kApiCall;
      if (!paired && !lone_api_call) {
        throw Error(ErrorKind::kUnpairedTurn,
                    "dialogue '" + dialogue.id + "' turn " + std::to_string(i) +
                        " cannot be written as a bAbI line");
      }
      if (turn.tokens.empty() ||
          (paired && dialogue.turns[i + 1].tokens.empty())) {
        throw Error(ErrorKind::kUnpairedTurn,
                    "dialogue '" + dialogue.id + "' has an empty utterance at turn " +
                        std::to_string(i));
      }
      out += std::to_string(index);
      out.push_back(' ');
      out += JoinTokens(turn.tokens);
      if (paired) {
        out.push_back('\t');
        out += JoinTokens(dialogue.turns[i + 1].tokens);
        i += 2;
      } else {
        i += 1;
      }
      out.push_back('\n');
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace dialobust
