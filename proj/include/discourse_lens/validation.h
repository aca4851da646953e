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

#ifndef DISCOURSE_LENS_VALIDATION_H_
#define DISCOURSE_LENS_VALIDATION_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "discourse_lens/corpus.h"
#include "discourse_lens/error.h"
#include "discourse_lens/labels.h"

namespace discourse_lens {

enum class Strictness { kStrict, kLenient };

enum class Severity { kWarning, kError };

std::string_view severity_name(Severity severity);

// Stable machine-readable violation codes.
namespace codes {
inline constexpr std::string_view kIndexNotConsecutive = "INDEX_NOT_CONSECUTIVE";
inline constexpr std::string_view kRoleMoveMismatch = "ROLE_MOVE_MISMATCH";
inline constexpr std::string_view kUnknownTalkMove = "UNKNOWN_TALK_MOVE";
inline constexpr std::string_view kUnknownDialogueAct = "UNKNOWN_DIALOGUE_ACT";
inline constexpr std::string_view kUnknownRelation = "UNKNOWN_RELATION";
inline constexpr std::string_view kEdgeBackward = "EDGE_BACKWARD";
inline constexpr std::string_view kEdgeSelfLoop = "EDGE_SELF_LOOP";
inline constexpr std::string_view kEdgeDangling = "EDGE_DANGLING";
inline constexpr std::string_view kEdgeDuplicate = "EDGE_DUPLICATE";
inline constexpr std::string_view kCrossingEdges = "CROSSING_EDGES";
inline constexpr std::string_view kDuplicateSessionId = "DUPLICATE_SESSION_ID";
}  // namespace codes

struct Violation {
  Severity severity = Severity::kError;
  std::string code;
  std::string location;  // "<session>" or "<session>/utt[i]" or "<session>/edge[s->t]"
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool has_errors() const;
  std::size_t error_count() const;
  std::size_t warning_count() const;
  void append(const ValidationReport& other);

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

// Checks every structural invariant of a session. Strict mode reports unknown
// labels and crossing edges as errors; lenient mode downgrades crossing edges
// and unknown dialogue acts / relations to warnings. Unknown talk moves and
// role mismatches are errors in both modes. Pure and reentrant.
ValidationReport validate_session(const Session& session, Strictness strictness,
                                  const VocabularySet& vocab = VocabularySet::defaults());

// Per-session validation plus corpus-level session-id uniqueness.
ValidationReport validate_corpus(const Corpus& corpus, Strictness strictness,
                                 const VocabularySet& vocab = VocabularySet::defaults());

// Two edges a->b and c->d cross when a < c < b < d.
bool edges_cross(const DiscourseEdge& first, const DiscourseEdge& second);

// Thrown when a strict operation meets a report containing errors.
class ValidationFailed : public Error {
 public:
  explicit ValidationFailed(ValidationReport report);

  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

}  // namespace discourse_lens

#endif  // DISCOURSE_LENS_VALIDATION_H_
