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

// Label types for the three annotation views and their closed vocabularies.
//
// Talk moves carry their speaker role in the prefix ("T-" teacher/tutor,
// "S-" student). Each role has one catch-all "None" move. Dialogue acts follow
// the flattened SWBD-DAMSL clusters plus the continuation tag "+". Discourse
// relations default to the STAC inventory of SDRT relations.

#ifndef DISCOURSE_LENS_LABELS_H_
#define DISCOURSE_LENS_LABELS_H_

#include <compare>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace discourse_lens {

enum class SpeakerRole { kTeacher, kStudent };

std::string_view role_name(SpeakerRole role);  // "teacher" / "student"

template <typename Tag>
class Label {
 public:
  Label() = default;
  explicit Label(std::string value) : value_(std::move(value)) {}

  const std::string& str() const { return value_; }
  bool empty() const { return value_.empty(); }

  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;

 private:
  std::string value_;
};

struct TalkMoveTag {};
struct DialogueActTag {};
struct RelationTag {};

using TalkMove = Label<TalkMoveTag>;
using DialogueAct = Label<DialogueActTag>;
using RelationLabel = Label<RelationTag>;

inline constexpr std::string_view kTeacherNone = "T-None";
inline constexpr std::string_view kStudentNone = "S-None";
inline constexpr std::string_view kContinuationAct = "+";
// SWBD-DAMSL "Other" cluster; lenient ingest maps unknown acts here.
inline constexpr std::string_view kOtherDialogueAct = "fo_o_fw_by_bc";

bool is_none(const TalkMove& move);
bool is_teacher_none(const TalkMove& move);
bool is_continuation(const DialogueAct& act);

// Role implied by the label prefix, or nullopt for a label with neither
// prefix.
std::optional<SpeakerRole> implied_role(std::string_view talk_move);
inline std::optional<SpeakerRole> implied_role(const TalkMove& move) {
  return implied_role(std::string_view(move.str()));
}

enum class View { kTalkMove, kDialogueAct, kRelation };

// A closed label set, kept in lexicographic (byte-wise) order.
class Vocabulary {
 public:
  Vocabulary() = default;

  // Throws ConfigError when `labels` contains duplicates or empty strings.
  static Vocabulary from_labels(std::vector<std::string> labels,
                                std::string_view what);

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  bool contains(std::string_view label) const;
  std::optional<std::size_t> index_of(std::string_view label) const;

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

 private:
  std::vector<std::string> labels_;
};

struct VocabularySet {
  Vocabulary talk_moves;
  Vocabulary dialogue_acts;
  Vocabulary relations;

  static const VocabularySet& defaults();

  // Loads label files (UTF-8, one label per line, surrounding whitespace
  // trimmed, blank lines skipped). A missing path keeps the default for that
  // view. Talk-move labels must carry a "T-" or "S-" prefix.
  static VocabularySet load(const std::optional<std::filesystem::path>& talk_moves,
                            const std::optional<std::filesystem::path>& dialogue_acts,
                            const std::optional<std::filesystem::path>& relations);

  const Vocabulary& of(View view) const;

  // Talk moves other than T-None / S-None, lexicographic.
  std::vector<TalkMove> non_none_talk_moves() const;
  std::vector<TalkMove> all_talk_moves() const;

  friend bool operator==(const VocabularySet&, const VocabularySet&) = default;
};

// Canonical ordered label list for one view.
std::vector<std::string> vocabulary(View view,
                                    const VocabularySet& vocab = VocabularySet::defaults());

std::vector<std::string> default_talk_move_labels();
std::vector<std::string> default_dialogue_act_labels();
std::vector<std::string> default_relation_labels();

}  // namespace discourse_lens

#endif  // DISCOURSE_LENS_LABELS_H_
