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

#include "discourse_lens/corpus.h"

#include <algorithm>

namespace discourse_lens {

std::string_view domain_name(DomainTag domain) {
  switch (domain) {
    case DomainTag::kTeaching: return "teaching";
    case DomainTag::kTutoring: return "tutoring";
    case DomainTag::kOther: return "other";
  }
  return "other";
}

std::optional<DomainTag> parse_domain(std::string_view name) {
  if (name == "teaching") return DomainTag::kTeaching;
  if (name == "tutoring") return DomainTag::kTutoring;
  if (name == "other") return DomainTag::kOther;
  return std::nullopt;
}

std::size_t Corpus::utterance_count() const {
  std::size_t n = 0;
  for (const auto& s : sessions) n += s.utterances.size();
  return n;
}

std::size_t Corpus::edge_count() const {
  std::size_t n = 0;
  for (const auto& s : sessions) n += s.edges.size();
  return n;
}

void canonicalize(Session& session) {
  std::stable_sort(session.utterances.begin(), session.utterances.end(),
                   [](const Utterance& a, const Utterance& b) { return a.index < b.index; });
  std::sort(session.edges.begin(), session.edges.end());
}

Session make_session(std::string session_id, const std::vector<std::string>& talk_moves,
                     const std::vector<std::string>& dialogue_acts, DomainTag domain) {
  Session session;
  session.session_id = std::move(session_id);
  session.domain = domain;
  session.utterances.reserve(talk_moves.size());
  for (std::size_t i = 0; i < talk_moves.size(); ++i) {
    Utterance u;
    u.index = i;
    u.speaker = implied_role(talk_moves[i]).value_or(SpeakerRole::kTeacher);
    u.talk_move = TalkMove(talk_moves[i]);
    u.dialogue_act = DialogueAct(i < dialogue_acts.size() ? dialogue_acts[i] : "sd");
    session.utterances.push_back(std::move(u));
  }
  return session;
}

}  // namespace discourse_lens
