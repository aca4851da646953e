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

#include "discourse_lens/multiview.h"

#include <algorithm>
#include <cctype>

#include "discourse_lens/error.h"
#include "text_util.h"

namespace discourse_lens {

namespace {

template <typename PerSession>
CountMap count_sessions(const Corpus& corpus, Parallelism parallelism, PerSession per_session) {
  return map_reduce<CountMap>(
      corpus.sessions.size(), parallelism,
      [&](std::size_t begin, std::size_t end) {
        CountMap counts;
        for (std::size_t i = begin; i < end; ++i) per_session(corpus.sessions[i], counts);
        return counts;
      },
      [](CountMap& acc, CountMap&& part) {
        for (const auto& [label, n] : part) acc[label] += n;
      });
}

// Relations on edges source -> target. Edges are in canonical order.
std::vector<RelationLabel> relations_between(const Session& s, std::size_t source,
                                             std::size_t target) {
  std::vector<RelationLabel> out;
  const auto lo = std::lower_bound(
      s.edges.begin(), s.edges.end(), std::pair{source, target},
      [](const DiscourseEdge& e, const std::pair<std::size_t, std::size_t>& key) {
        return std::pair{e.source, e.target} < key;
      });
  for (auto it = lo; it != s.edges.end() && it->source == source && it->target == target; ++it) {
    if (out.empty() || out.back() != it->relation) out.push_back(it->relation);
  }
  return out;
}

bool is_sorted_canonically(const Session& s) { return std::is_sorted(s.edges.begin(), s.edges.end()); }

// Canonical edge order is a Session invariant; callers that built sessions by
// hand may not have established it.
const Session& canonical_view(const Session& s, Session& scratch) {
  if (is_sorted_canonically(s)) return s;
  scratch = s;
  std::sort(scratch.edges.begin(), scratch.edges.end());
  return scratch;
}

void require_non_none(const TalkMove& first, const TalkMove& second) {
  if (is_none(first) || is_none(second)) {
    throw InvalidPairError("triple endpoints must be non-None talk moves, got (" + first.str() +
                           ", " + second.str() + ")");
  }
}

bool is_ascii_punct(char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; }

}  // namespace

RelationDistribution bigram_relation_distribution(const Corpus& corpus, const TalkMove& first,
                                                  const TalkMove& second,
                                                  Parallelism parallelism) {
  struct Tally {
    CountMap relations;
    std::uint64_t instances = 0;
  };
  const Tally tally = map_reduce<Tally>(
      corpus.sessions.size(), parallelism,
      [&](std::size_t begin, std::size_t end) {
        Tally t;
        for (std::size_t k = begin; k < end; ++k) {
          Session scratch;
          const Session& s = canonical_view(corpus.sessions[k], scratch);
          const auto& u = s.utterances;
          for (std::size_t i = 0; i + 1 < u.size(); ++i) {
            if (u[i].talk_move != first || u[i + 1].talk_move != second) continue;
            ++t.instances;
            const auto relations = relations_between(s, i, i + 1);
            if (relations.empty()) {
              ++t.relations[std::string(kNoEdgeBucket)];
            } else {
              for (const auto& r : relations) ++t.relations[r.str()];
            }
          }
        }
        return t;
      },
      [](Tally& acc, Tally&& part) {
        acc.instances += part.instances;
        for (const auto& [label, n] : part.relations) acc.relations[label] += n;
      });
  return {Distribution::from_counts(tally.relations), tally.instances};
}

Distribution talkmove_to_none_da_distribution(const Corpus& corpus, const TalkMove& first,
                                              Parallelism parallelism) {
  return Distribution::from_counts(
      count_sessions(corpus, parallelism, [&](const Session& s, CountMap& c) {
        const auto& u = s.utterances;
        for (std::size_t i = 0; i + 1 < u.size(); ++i) {
          if (u[i].talk_move == first && is_teacher_none(u[i + 1].talk_move)) {
            ++c[u[i + 1].dialogue_act.str()];
          }
        }
      }));
}

Distribution triple_none_da_distribution(const Corpus& corpus, const TalkMove& first,
                                         const TalkMove& second, Parallelism parallelism) {
  require_non_none(first, second);
  return Distribution::from_counts(
      count_sessions(corpus, parallelism, [&](const Session& s, CountMap& c) {
        const auto& u = s.utterances;
        for (std::size_t i = 0; i + 2 < u.size(); ++i) {
          if (u[i].talk_move == first && is_teacher_none(u[i + 1].talk_move) &&
              u[i + 2].talk_move == second) {
            ++c[u[i + 1].dialogue_act.str()];
          }
        }
      }));
}

std::vector<BigramInstance> bigram_instances(const Corpus& corpus, const TalkMove& first,
                                             const TalkMove& second) {
  std::vector<BigramInstance> out;
  for (const Session& raw : corpus.sessions) {
    Session scratch;
    const Session& s = canonical_view(raw, scratch);
    const auto& u = s.utterances;
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      if (u[i].talk_move != first || u[i + 1].talk_move != second) continue;
      BigramInstance b;
      b.session_id = s.session_id;
      b.first_index = u[i].index;
      b.second_index = u[i + 1].index;
      b.first_move = first;
      b.second_move = second;
      if (const auto rel = relations_between(s, i, i + 1); !rel.empty()) b.relation = rel.front();
      out.push_back(std::move(b));
    }
  }
  return out;
}

std::vector<TripleInstance> triple_instances(const Corpus& corpus, const TalkMove& first,
                                             const TalkMove& second) {
  require_non_none(first, second);
  std::vector<TripleInstance> out;
  for (const Session& s : corpus.sessions) {
    const auto& u = s.utterances;
    for (std::size_t i = 0; i + 2 < u.size(); ++i) {
      if (u[i].talk_move == first && is_teacher_none(u[i + 1].talk_move) &&
          u[i + 2].talk_move == second) {
        out.push_back({s.session_id, u[i].index, u[i + 1].index, u[i + 2].index,
                       u[i + 1].dialogue_act});
      }
    }
  }
  return out;
}

std::optional<MarkerPosition> parse_marker_position(std::string_view name) {
  if (name == "leading" || name == "leading_token") return MarkerPosition::kLeadingToken;
  if (name == "any" || name == "any_token") return MarkerPosition::kAnyToken;
  return std::nullopt;
}

std::string_view marker_position_name(MarkerPosition position) {
  return position == MarkerPosition::kLeadingToken ? "leading_token" : "any_token";
}

std::vector<std::string> normalize_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && internal::is_space(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !internal::is_space(text[i])) ++i;
    std::string_view token = text.substr(start, i - start);
    while (!token.empty() && is_ascii_punct(token.front())) token.remove_prefix(1);
    while (!token.empty() && is_ascii_punct(token.back())) token.remove_suffix(1);
    if (token.empty()) continue;
    std::string lowered(token);
    for (char& c : lowered) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    tokens.push_back(std::move(lowered));
  }
  return tokens;
}

LexicalMarkerResult lexical_marker_share(const Corpus& corpus, const TalkMove& first,
                                         const TalkMove& second,
                                         const std::vector<std::string>& markers,
                                         MarkerPosition position) {
  std::vector<std::string> normalized;
  for (const auto& m : markers) {
    auto tokens = normalize_tokens(m);
    if (tokens.size() != 1) {
      throw ConfigError("marker \"" + m + "\" must normalize to exactly one token");
    }
    normalized.push_back(std::move(tokens.front()));
  }
  if (normalized.empty()) throw ConfigError("at least one marker is required");
  auto is_marker = [&](const std::string& token) {
    return std::find(normalized.begin(), normalized.end(), token) != normalized.end();
  };

  LexicalMarkerResult out;
  for (const Session& s : corpus.sessions) {
    const auto& u = s.utterances;
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      if (u[i].talk_move != first || u[i + 1].talk_move != second) continue;
      ++out.population;
      const auto tokens = normalize_tokens(u[i + 1].text);
      bool hit = false;
      if (position == MarkerPosition::kLeadingToken) {
        hit = !tokens.empty() && is_marker(tokens.front());
      } else {
        hit = std::any_of(tokens.begin(), tokens.end(), is_marker);
      }
      if (!hit) continue;
      BigramInstance b;
      b.session_id = s.session_id;
      b.first_index = u[i].index;
      b.second_index = u[i + 1].index;
      b.first_move = first;
      b.second_move = second;
      if (const auto rel = relations_between(s, i, i + 1); !rel.empty()) b.relation = rel.front();
      out.matches.push_back(std::move(b));
    }
  }
  out.share = out.population == 0 ? 0.0
                                  : static_cast<double>(out.matches.size()) /
                                        static_cast<double>(out.population);
  return out;
}

InstancePattern parse_instance_pattern(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw ConfigError("pattern \"" + std::string(spec) + "\" needs a kind prefix");
  }
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view args = spec.substr(colon + 1);
  const auto comma = args.find(',');
  if (comma == std::string_view::npos || args.find(',', comma + 1) != std::string_view::npos) {
    throw ConfigError("pattern \"" + std::string(spec) + "\" needs exactly two labels");
  }
  const std::string a(internal::trim(args.substr(0, comma)));
  const std::string b(internal::trim(args.substr(comma + 1)));
  if (a.empty() || b.empty()) throw ConfigError("pattern labels must not be empty");
  if (kind == "bigram") return BigramPattern{TalkMove(a), TalkMove(b)};
  if (kind == "triple") return TriplePattern{TalkMove(a), TalkMove(b)};
  if (kind == "move_with_act") return MoveWithActPattern{TalkMove(a), DialogueAct(b)};
  throw ConfigError("unknown pattern kind \"" + std::string(kind) + "\"");
}

std::vector<Excerpt> extract_instances(const Corpus& corpus, const InstancePattern& pattern,
                                       std::size_t limit, std::size_t context_window) {
  if (limit == 0) throw ConfigError("limit must be at least 1");
  if (const auto* t = std::get_if<TriplePattern>(&pattern)) require_non_none(t->first, t->second);

  // Length of the match starting at position i, or 0.
  auto match_length = [&](const std::vector<Utterance>& u, std::size_t i) -> std::size_t {
    if (const auto* p = std::get_if<BigramPattern>(&pattern)) {
      return i + 1 < u.size() && u[i].talk_move == p->first && u[i + 1].talk_move == p->second
                 ? 2
                 : 0;
    }
    if (const auto* p = std::get_if<TriplePattern>(&pattern)) {
      return i + 2 < u.size() && u[i].talk_move == p->first &&
                     is_teacher_none(u[i + 1].talk_move) && u[i + 2].talk_move == p->second
                 ? 3
                 : 0;
    }
    const auto& p = std::get<MoveWithActPattern>(pattern);
    return u[i].talk_move == p.move && u[i].dialogue_act == p.act ? 1 : 0;
  };

  std::vector<Excerpt> out;
  for (const Session& s : corpus.sessions) {
    const auto& u = s.utterances;
    for (std::size_t i = 0; i < u.size(); ++i) {
      const std::size_t len = match_length(u, i);
      if (len == 0) continue;
      Excerpt ex;
      ex.session_id = s.session_id;
      ex.match_begin = i;
      ex.match_end = i + len - 1;
      ex.span_begin = i >= context_window ? i - context_window : 0;
      ex.span_end = std::min(u.size() - 1, ex.match_end + context_window);
      ex.utterances.assign(u.begin() + static_cast<std::ptrdiff_t>(ex.span_begin),
                           u.begin() + static_cast<std::ptrdiff_t>(ex.span_end) + 1);
      for (const DiscourseEdge& e : s.edges) {
        if (e.source >= ex.span_begin && e.source <= ex.span_end && e.target >= ex.span_begin &&
            e.target <= ex.span_end) {
          ex.edges.push_back(e);
        }
      }
      std::sort(ex.edges.begin(), ex.edges.end());
      out.push_back(std::move(ex));
      if (out.size() == limit) return out;
    }
  }
  return out;
}

}  // namespace discourse_lens
