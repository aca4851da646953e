// Copyright 2026 The discourse-lens Authors
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

#include "discourse_lens/labels.h"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include "discourse_lens/error.h"
#include "text_util.h"

namespace discourse_lens {

std::string_view role_name(SpeakerRole role) {
  return role == SpeakerRole::kTeacher ? "teacher" : "student";
}

bool is_none(const TalkMove& move) {
  return move.str() == kTeacherNone || move.str() == kStudentNone;
}

bool is_teacher_none(const TalkMove& move) { return move.str() == kTeacherNone; }

bool is_continuation(const DialogueAct& act) { return act.str() == kContinuationAct; }

std::optional<SpeakerRole> implied_role(std::string_view talk_move) {
  if (talk_move.starts_with("T-")) return SpeakerRole::kTeacher;
  if (talk_move.starts_with("S-")) return SpeakerRole::kStudent;
  return std::nullopt;
}

Vocabulary Vocabulary::from_labels(std::vector<std::string> labels, std::string_view what) {
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) {
      throw ConfigError(std::string(what) + " vocabulary contains an empty label");
    }
    if (i > 0 && labels[i] == labels[i - 1]) {
      throw ConfigError(std::string(what) + " vocabulary lists \"" + labels[i] + "\" twice");
    }
  }
  Vocabulary vocab;
  vocab.labels_ = std::move(labels);
  return vocab;
}

bool Vocabulary::contains(std::string_view label) const {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

std::optional<std::size_t> Vocabulary::index_of(std::string_view label) const {
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::string> default_talk_move_labels() {
  return {"T-KET", "T-GSR",    "T-RES",   "T-REV",   "T-PRR",   "T-PRA",
          "T-None", "S-MClaim", "S-ProEvi", "S-RelTo", "S-AskMI", "S-None"};
}

// The 42 SWBD-DAMSL clusters in their usual tag spelling, plus "+".
std::vector<std::string> default_dialogue_act_labels() {
  return {"sd",     "b",      "sv",   "aa",   "%",      "ba",  "qy",
          "x",      "ny",     "fc",   "qw",   "nn",     "bk",  "h",
          "qy^d",   "fo_o_fw_by_bc", "bh", "^q", "bf",    "na",  "ad",
          "^2",     "b^m",    "qo",   "qh",   "^h",     "ar",  "ng",
          "br",     "no",     "fp",   "qrr",  "arp_nd", "t3",  "oo_co_cc",
          "t1",     "bd",     "aap_am", "^g", "qw^d",   "fa",  "ft",
          "+"};
}

std::vector<std::string> default_relation_labels() {
  return {"Comment",     "Clarification_question", "Elaboration", "Acknowledgement",
          "Continuation", "Explanation",           "Conditional", "Question-Answer_pair",
          "Alternation", "Q-Elab",                 "Result",      "Background",
          "Narration",   "Correction",             "Parallel",    "Contrast"};
}

namespace {

void check_talk_move_prefixes(const Vocabulary& vocab) {
  for (const auto& label : vocab.labels()) {
    if (!implied_role(label)) {
      throw ConfigError("talk-move label \"" + label + "\" lacks a T- or S- prefix");
    }
  }
}

std::vector<std::string> read_label_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open vocabulary file " + path.string());
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (internal::first_invalid_utf8(bytes)) {
    throw ConfigError("vocabulary file " + path.string() + " is not valid UTF-8");
  }
  std::vector<std::string> labels;
  std::istringstream lines(bytes);
  std::string line;
  while (std::getline(lines, line)) {
    const auto label = internal::trim(line);
    if (!label.empty()) labels.emplace_back(label);
  }
  return labels;
}

}  // namespace

const VocabularySet& VocabularySet::defaults() {
  static const VocabularySet kDefaults = [] {
    VocabularySet set;
    set.talk_moves = Vocabulary::from_labels(default_talk_move_labels(), "talk-move");
    set.dialogue_acts = Vocabulary::from_labels(default_dialogue_act_labels(), "dialogue-act");
    set.relations = Vocabulary::from_labels(default_relation_labels(), "relation");
    return set;
  }();
  return kDefaults;
}

VocabularySet VocabularySet::load(const std::optional<std::filesystem::path>& talk_moves,
                                  const std::optional<std::filesystem::path>& dialogue_acts,
                                  const std::optional<std::filesystem::path>& relations) {
  VocabularySet set = defaults();
  if (talk_moves) {
    set.talk_moves = Vocabulary::from_labels(read_label_file(*talk_moves), "talk-move");
    check_talk_move_prefixes(set.talk_moves);
  }
  if (dialogue_acts) {
    set.dialogue_acts =
        Vocabulary::from_labels(read_label_file(*dialogue_acts), "dialogue-act");
  }
  if (relations) {
    set.relations = Vocabulary::from_labels(read_label_file(*relations), "relation");
  }
  return set;
}

const Vocabulary& VocabularySet::of(View view) const {
  switch (view) {
    case View::kTalkMove: return talk_moves;
    case View::kDialogueAct: return dialogue_acts;
    case View::kRelation: return relations;
  }
  return talk_moves;
}

std::vector<TalkMove> VocabularySet::non_none_talk_moves() const {
  std::vector<TalkMove> out;
  for (const auto& label : talk_moves.labels()) {
    TalkMove move(label);
    if (!is_none(move)) out.push_back(std::move(move));
  }
  return out;
}

std::vector<TalkMove> VocabularySet::all_talk_moves() const {
  std::vector<TalkMove> out;
  for (const auto& label : talk_moves.labels()) out.emplace_back(label);
  return out;
}

std::vector<std::string> vocabulary(View view, const VocabularySet& vocab) {
  return vocab.of(view).labels();
}

}  // namespace discourse_lens
