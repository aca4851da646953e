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

// Joins across the three annotation views: discourse relations on talk-move
// bigrams, dialogue acts of T-None utterances next to or between talk moves,
// lexical marker shares, and excerpt extraction.

#ifndef DISCOURSE_LENS_MULTIVIEW_H_
#define DISCOURSE_LENS_MULTIVIEW_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "discourse_lens/corpus.h"
#include "discourse_lens/distribution.h"
#include "discourse_lens/labels.h"
#include "discourse_lens/parallel.h"

namespace discourse_lens {

inline constexpr std::string_view kNoEdgeBucket = "⟨no-edge⟩";

struct BigramInstance {
  std::string session_id;
  std::size_t first_index = 0;
  std::size_t second_index = 0;
  TalkMove first_move;
  TalkMove second_move;
  std::optional<RelationLabel> relation;

  friend bool operator==(const BigramInstance&, const BigramInstance&) = default;
};

struct TripleInstance {
  std::string session_id;
  std::size_t first_index = 0;
  std::size_t middle_index = 0;
  std::size_t last_index = 0;
  DialogueAct intervening_act;

  friend bool operator==(const TripleInstance&, const TripleInstance&) = default;
};

struct RelationDistribution {
  Distribution distribution;   // relation labels plus kNoEdgeBucket
  std::uint64_t instances = 0;  // adjacent (first, second) pairs
};

// Relations on the forward edge u_i -> u_{i+1} of every adjacent pair with
// moves (first, second); pairs without such an edge count as kNoEdgeBucket.
// A pair joined by several relations contributes one tally per relation, so
// the distribution total can exceed `instances`.
RelationDistribution bigram_relation_distribution(const Corpus& corpus, const TalkMove& first,
                                                  const TalkMove& second,
                                                  Parallelism parallelism = {});

// Dialogue acts of T-None utterances that directly follow a `first`
// utterance. Continuation acts are counted.
Distribution talkmove_to_none_da_distribution(const Corpus& corpus, const TalkMove& first,
                                              Parallelism parallelism = {});

// Dialogue acts of the single T-None utterance in consecutive
// (first, T-None, second) triples. Throws InvalidPairError for None moves.
Distribution triple_none_da_distribution(const Corpus& corpus, const TalkMove& first,
                                         const TalkMove& second, Parallelism parallelism = {});

std::vector<BigramInstance> bigram_instances(const Corpus& corpus, const TalkMove& first,
                                             const TalkMove& second);
std::vector<TripleInstance> triple_instances(const Corpus& corpus, const TalkMove& first,
                                             const TalkMove& second);

enum class MarkerPosition { kLeadingToken, kAnyToken };

std::optional<MarkerPosition> parse_marker_position(std::string_view name);
std::string_view marker_position_name(MarkerPosition position);

// Lowercases ASCII letters, splits on whitespace and strips leading/trailing
// ASCII punctuation from each token; tokens left empty are dropped.
std::vector<std::string> normalize_tokens(std::string_view text);

struct LexicalMarkerResult {
  double share = 0.0;
  std::uint64_t population = 0;
  std::vector<BigramInstance> matches;
};

// Over adjacent (first, second) pairs, the fraction whose second utterance
// holds a marker at `position`. Throws ConfigError for an empty marker list.
LexicalMarkerResult lexical_marker_share(const Corpus& corpus, const TalkMove& first,
                                         const TalkMove& second,
                                         const std::vector<std::string>& markers,
                                         MarkerPosition position);

struct BigramPattern {
  TalkMove first;
  TalkMove second;
};
struct TriplePattern {
  TalkMove first;
  TalkMove second;
};
struct MoveWithActPattern {
  TalkMove move;
  DialogueAct act;
};
using InstancePattern = std::variant<BigramPattern, TriplePattern, MoveWithActPattern>;

// Parses "bigram:A,B", "triple:A,B" or "move_with_act:TM,DA". Throws
// ConfigError on malformed input.
InstancePattern parse_instance_pattern(std::string_view spec);

struct Excerpt {
  std::string session_id;
  std::size_t match_begin = 0;  // inclusive utterance indices
  std::size_t match_end = 0;
  std::size_t span_begin = 0;
  std::size_t span_end = 0;
  std::vector<Utterance> utterances;  // span_begin..span_end
  std::vector<DiscourseEdge> edges;   // edges with both endpoints in the span
};

// Up to `limit` matches in (session order, index) order, each padded by
// `context_window` utterances on both sides and clipped at session bounds.
// Throws ConfigError for limit == 0.
std::vector<Excerpt> extract_instances(const Corpus& corpus, const InstancePattern& pattern,
                                       std::size_t limit, std::size_t context_window);

}  // namespace discourse_lens

#endif  // DISCOURSE_LENS_MULTIVIEW_H_
