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

#include "discourse_lens/validation.h"

#include <algorithm>
#include <set>
#include <string>

namespace discourse_lens {

std::string_view severity_name(Severity severity) {
  return severity == Severity::kError ? "error" : "warning";
}

bool ValidationReport::has_errors() const { return error_count() > 0; }

std::size_t ValidationReport::error_count() const {
  return static_cast<std::size_t>(std::count_if(
      violations.begin(), violations.end(),
      [](const Violation& v) { return v.severity == Severity::kError; }));
}

std::size_t ValidationReport::warning_count() const {
  return violations.size() - error_count();
}

void ValidationReport::append(const ValidationReport& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

bool edges_cross(const DiscourseEdge& first, const DiscourseEdge& second) {
  return first.source < second.source && second.source < first.target &&
         first.target < second.target;
}

namespace {

std::string utterance_location(const Session& s, std::size_t position) {
  return s.session_id + "/utt[" + std::to_string(position) + "]";
}

std::string edge_location(const Session& s, const DiscourseEdge& e) {
  return s.session_id + "/edge[" + std::to_string(e.source) + "->" + std::to_string(e.target) +
         ":" + e.relation.str() + "]";
}

}  // namespace

ValidationReport validate_session(const Session& session, Strictness strictness,
                                  const VocabularySet& vocab) {
  ValidationReport report;
  const bool strict = strictness == Strictness::kStrict;
  const Severity label_severity = strict ? Severity::kError : Severity::kWarning;
  auto add = [&](Severity sev, std::string_view code, std::string location, std::string msg) {
    report.violations.push_back({sev, std::string(code), std::move(location), std::move(msg)});
  };

  const std::size_t n = session.utterances.size();
  for (std::size_t p = 0; p < n; ++p) {
    const Utterance& u = session.utterances[p];
    if (u.index != p) {
      add(Severity::kError, codes::kIndexNotConsecutive, utterance_location(session, p),
          "expected index " + std::to_string(p) + ", found " + std::to_string(u.index));
    }
    const std::string& move = u.talk_move.str();
    if (!vocab.talk_moves.contains(move)) {
      add(Severity::kError, codes::kUnknownTalkMove, utterance_location(session, p),
          "talk move \"" + move + "\" is not in the vocabulary");
    }
    if (const auto role = implied_role(move); role && *role != u.speaker) {
      add(Severity::kError, codes::kRoleMoveMismatch, utterance_location(session, p),
          std::string(role_name(u.speaker)) + " utterance carries " + move);
    }
    if (!vocab.dialogue_acts.contains(u.dialogue_act.str())) {
      add(label_severity, codes::kUnknownDialogueAct, utterance_location(session, p),
          "dialogue act \"" + u.dialogue_act.str() + "\" is not in the vocabulary");
    }
  }

  std::vector<const DiscourseEdge*> forward;
  for (const DiscourseEdge& e : session.edges) {
    bool ok = true;
    if (e.source >= n || e.target >= n) {
      add(Severity::kError, codes::kEdgeDangling, edge_location(session, e),
          "endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
      ok = false;
    }
    if (e.source == e.target) {
      add(Severity::kError, codes::kEdgeSelfLoop, edge_location(session, e), "self-loop");
      ok = false;
    } else if (e.source > e.target) {
      add(Severity::kError, codes::kEdgeBackward, edge_location(session, e),
          "source must precede target");
      ok = false;
    }
    if (!vocab.relations.contains(e.relation.str())) {
      add(label_severity, codes::kUnknownRelation, edge_location(session, e),
          "relation \"" + e.relation.str() + "\" is not in the vocabulary");
    }
    if (ok) forward.push_back(&e);
  }

  std::set<DiscourseEdge> seen;
  for (const DiscourseEdge& e : session.edges) {
    if (!seen.insert(e).second) {
      add(Severity::kError, codes::kEdgeDuplicate, edge_location(session, e), "duplicate edge");
    }
  }

  // Distinct (source, target) spans only; parallel relations never cross.
  std::sort(forward.begin(), forward.end(),
            [](const DiscourseEdge* a, const DiscourseEdge* b) { return *a < *b; });
  for (std::size_t i = 0; i < forward.size(); ++i) {
    for (std::size_t j = i + 1; j < forward.size(); ++j) {
      const DiscourseEdge& a = *forward[i];
      const DiscourseEdge& b = *forward[j];
      if (b.source >= a.target) break;  // sorted by source: no later edge can cross a
      if (edges_cross(a, b)) {
        add(label_severity, codes::kCrossingEdges, edge_location(session, a),
            "crosses " + edge_location(session, b));
      }
    }
  }
  return report;
}

ValidationReport validate_corpus(const Corpus& corpus, Strictness strictness,
                                 const VocabularySet& vocab) {
  ValidationReport report;
  std::set<std::string> ids;
  for (const Session& s : corpus.sessions) {
    if (!ids.insert(s.session_id).second) {
      report.violations.push_back({Severity::kError, std::string(codes::kDuplicateSessionId),
                                   s.session_id, "session id appears more than once"});
    }
    report.append(validate_session(s, strictness, vocab));
  }
  return report;
}

ValidationFailed::ValidationFailed(ValidationReport report)
    : Error(ErrorCode::kValidationFailed,
            "validation failed with " + std::to_string(report.error_count()) + " error(s)" +
                [&] {
                  for (const auto& v : report.violations) {
                    if (v.severity == Severity::kError) {
                      return ": first " + v.code + " at " + v.location + " (" + v.message + ")";
                    }
                  }
                  return std::string();
                }()),
      report_(std::move(report)) {}

}  // namespace discourse_lens
