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

#include "discourse_lens/unigram.h"

#include <map>

#include "discourse_lens/error.h"

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

}  // namespace

Distribution talk_move_distribution(const Corpus& corpus, std::optional<SpeakerRole> role_filter,
                                    const VocabularySet& vocab, Parallelism parallelism) {
  const CountMap counts = count_sessions(corpus, parallelism, [&](const Session& s, CountMap& c) {
    for (const Utterance& u : s.utterances) {
      if (!role_filter || u.speaker == *role_filter) ++c[u.talk_move.str()];
    }
  });
  std::vector<std::string> universe;
  for (const auto& label : vocab.talk_moves.labels()) {
    if (!role_filter || implied_role(label) == role_filter) universe.push_back(label);
  }
  return Distribution::from_counts(counts, universe);
}

DialogueActDistribution dialogue_act_distribution(const Corpus& corpus, double min_share_display,
                                                  const VocabularySet& vocab,
                                                  Parallelism parallelism) {
  if (!(min_share_display >= 0.0 && min_share_display < 1.0)) {
    throw ConfigError("min_share_display must lie in [0, 1)");
  }
  const CountMap counts = count_sessions(corpus, parallelism, [](const Session& s, CountMap& c) {
    for (const Utterance& u : s.utterances) ++c[u.dialogue_act.str()];
  });

  DialogueActDistribution out;
  out.distribution = Distribution::from_counts(counts, vocab.dialogue_acts.labels());
  out.min_share_display = min_share_display;
  const Distribution& d = out.distribution;
  std::uint64_t residual = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.counts[i] == 0) continue;
    if (d.shares[i] >= min_share_display) {
      out.display.push_back({d.labels[i], d.counts[i], d.shares[i]});
    } else {
      residual += d.counts[i];
    }
  }
  if (residual > 0) {
    out.display.push_back({std::string(kBelowThresholdBucket), residual,
                           static_cast<double>(residual) / static_cast<double>(d.total)});
  }
  return out;
}

const CrossTabRow* CrossTab::row(std::string_view talk_move) const {
  for (const auto& r : rows) {
    if (r.talk_move.str() == talk_move) return &r;
  }
  return nullptr;
}

CrossTab crosstab_talkmove_dialogueact(const Corpus& corpus, bool exclude_continuation,
                                       const VocabularySet& vocab, Parallelism parallelism) {
  using Table = std::map<std::string, CountMap>;
  const Table table = map_reduce<Table>(
      corpus.sessions.size(), parallelism,
      [&](std::size_t begin, std::size_t end) {
        Table t;
        for (std::size_t i = begin; i < end; ++i) {
          for (const Utterance& u : corpus.sessions[i].utterances) {
            if (exclude_continuation && is_continuation(u.dialogue_act)) continue;
            ++t[u.talk_move.str()][u.dialogue_act.str()];
          }
        }
        return t;
      },
      [](Table& acc, Table&& part) {
        for (const auto& [move, counts] : part) {
          for (const auto& [act, n] : counts) acc[move][act] += n;
        }
      });

  CrossTab out;
  out.continuation_excluded = exclude_continuation;
  std::map<std::string, bool> moves;
  for (const auto& label : vocab.talk_moves.labels()) moves[label] = true;
  for (const auto& [move, counts] : table) moves[move] = true;
  for (const auto& [move, unused] : moves) {
    CrossTabRow row;
    row.talk_move = TalkMove(move);
    if (const auto it = table.find(move); it != table.end()) {
      row.acts = Distribution::from_counts(it->second);
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

CoverageSelection top_k_with_coverage(const Distribution& d, std::size_t k,
                                      double coverage_target) {
  if (k == 0) throw ConfigError("k must be positive");
  if (!(coverage_target > 0.0 && coverage_target <= 1.0)) {
    throw ConfigError("coverage target must lie in (0, 1]");
  }
  CoverageSelection out;
  std::uint64_t covered = 0;
  for (std::size_t i = 0; i < d.size() && out.labels.size() < k; ++i) {
    if (d.counts[i] == 0) break;  // ranked: only zero counts remain
    out.labels.push_back(d.labels[i]);
    covered += d.counts[i];
  }
  out.achieved_coverage =
      d.total == 0 ? 0.0 : static_cast<double>(covered) / static_cast<double>(d.total);
  out.target_met = out.achieved_coverage >= coverage_target;
  return out;
}

}  // namespace discourse_lens
