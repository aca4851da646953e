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

#ifndef DISCOURSE_LENS_CORPUS_H_
#define DISCOURSE_LENS_CORPUS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "discourse_lens/labels.h"

namespace discourse_lens {

enum class DomainTag { kTeaching, kTutoring, kOther };

std::string_view domain_name(DomainTag domain);
std::optional<DomainTag> parse_domain(std::string_view name);

// One transcript unit. Discourse units are whole utterances.
struct Utterance {
  std::size_t index = 0;
  SpeakerRole speaker = SpeakerRole::kTeacher;
  std::optional<std::string> speaker_id;
  std::string text;
  TalkMove talk_move;
  DialogueAct dialogue_act;

  friend bool operator==(const Utterance&, const Utterance&) = default;
};

// Labeled forward attachment source -> target between two utterances.
struct DiscourseEdge {
  std::size_t source = 0;
  std::size_t target = 0;
  RelationLabel relation;

  friend bool operator==(const DiscourseEdge&, const DiscourseEdge&) = default;
  friend auto operator<=>(const DiscourseEdge&, const DiscourseEdge&) = default;
};

struct Session {
  std::string session_id;
  DomainTag domain = DomainTag::kOther;
  std::vector<Utterance> utterances;  // ordered by index
  std::vector<DiscourseEdge> edges;   // canonical order: (source, target, relation)

  friend bool operator==(const Session&, const Session&) = default;
};

struct Corpus {
  std::string corpus_id;
  std::vector<Session> sessions;

  std::size_t utterance_count() const;
  std::size_t edge_count() const;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

// Sorts utterances by index and edges into canonical order.
void canonicalize(Session& session);

// Convenience constructor used by tests and tools: consecutive utterances
// with roles inferred from the talk-move prefix and empty texts. Missing
// dialogue acts default to "sd".
Session make_session(std::string session_id, const std::vector<std::string>& talk_moves,
                     const std::vector<std::string>& dialogue_acts = {},
                     DomainTag domain = DomainTag::kOther);

}  // namespace discourse_lens

#endif  // DISCOURSE_LENS_CORPUS_H_
