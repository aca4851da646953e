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

#include "discourse_lens/sequence.h"

#include <algorithm>

#include "discourse_lens/error.h"

namespace discourse_lens {

std::string_view transition_mode_name(TransitionMode mode) {
  return mode == TransitionMode::kDirect ? "direct" : "collapsed";
}

// ---------------------------------------------------------------------------
// TransitionMatrix

TransitionMatrix::TransitionMatrix(std::vector<std::string> labels, TransitionMode mode)
    : labels_(std::move(labels)), mode_(mode), counts_(labels_.size() * labels_.size(), 0) {}

std::optional<std::size_t> TransitionMatrix::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::uint64_t TransitionMatrix::count(std::string_view from, std::string_view to) const {
  const auto f = index_of(from);
  const auto t = index_of(to);
  return f && t ? count(*f, *t) : 0;
}

std::uint64_t TransitionMatrix::row_total(std::size_t from) const {
  std::uint64_t total = 0;
  for (std::size_t to = 0; to < labels_.size(); ++to) total += count(from, to);
  return total;
}

double TransitionMatrix::probability(std::size_t from, std::size_t to) const {
  const std::uint64_t total = row_total(from);
  return total == 0 ? 0.0
                    : static_cast<double>(count(from, to)) / static_cast<double>(total);
}

double TransitionMatrix::probability(std::string_view from, std::string_view to) const {
  const auto f = index_of(from);
  const auto t = index_of(to);
  return f && t ? probability(*f, *t) : 0.0;
}

std::uint64_t TransitionMatrix::total() const {
  std::uint64_t total = 0;
  for (std::uint64_t c : counts_) total += c;
  return total;
}

void TransitionMatrix::merge(const TransitionMatrix& other) {
  for (std::size_t i = 0; i < counts_.size() && i < other.counts_.size(); ++i) {
    counts_[i] += other.counts_[i];
  }
}

TransitionMatrix transition_counts(const Corpus& corpus, bool collapse_none,
                                   const VocabularySet& vocab, Parallelism parallelism) {
  const TransitionMode mode = collapse_none ? TransitionMode::kCollapsed : TransitionMode::kDirect;
  const std::vector<std::string>& labels = vocab.talk_moves.labels();
  return map_reduce<TransitionMatrix>(
      corpus.sessions.size(), parallelism,
      [&](std::size_t begin, std::size_t end) {
        TransitionMatrix m(labels, mode);
        std::vector<std::optional<std::size_t>> seq;
        for (std::size_t s = begin; s < end; ++s) {
          seq.clear();
          for (const Utterance& u : corpus.sessions[s].utterances) {
            if (collapse_none && is_none(u.talk_move)) continue;
            seq.push_back(vocab.talk_moves.index_of(u.talk_move.str()));
          }
          // Out-of-vocabulary moves contribute no counts.
          for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
            if (seq[i] && seq[i + 1]) m.add(*seq[i], *seq[i + 1]);
          }
        }
        return m;
      },
      [](TransitionMatrix& acc, TransitionMatrix&& part) { acc.merge(part); });
}

FilteredTransitions filter_transitions(const TransitionMatrix& matrix, double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw ConfigError("transition threshold must lie in [0, 1]");
  }
  FilteredTransitions out;
  out.threshold = threshold;
  out.mode = matrix.mode();
  const auto& labels = matrix.labels();
  for (std::size_t f = 0; f < labels.size(); ++f) {
    for (std::size_t t = 0; t < labels.size(); ++t) {
      const std::uint64_t c = matrix.count(f, t);
      if (c == 0) continue;
      const double p = matrix.probability(f, t);
      if (p < threshold) continue;
      out.edges.push_back({labels[f], labels[t], c, p,
                           implied_role(labels[t]).value_or(SpeakerRole::kTeacher)});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Gap statistic

void GapHistogram::add(std::size_t gap_length, std::uint64_t count) {
  if (count == 0) return;
  const auto it = std::lower_bound(
      entries.begin(), entries.end(), gap_length,
      [](const GapEntry& e, std::size_t n) { return e.gap_length < n; });
  if (it != entries.end() && it->gap_length == gap_length) {
    it->count += count;
  } else {
    entries.insert(it, GapEntry{gap_length, count});
  }
  total_instances += count;
}

void GapHistogram::merge(const GapHistogram& other) {
  for (const GapEntry& e : other.entries) add(e.gap_length, e.count);
}

std::uint64_t GapHistogram::count_at(std::size_t gap_length) const {
  for (const GapEntry& e : entries) {
    if (e.gap_length == gap_length) return e.count;
  }
  return 0;
}

namespace {

// Calls visit(a, b) for every anchor a whose next non-T-None successor b
// exists, with both a and b carrying non-None moves. The gap is b - a - 1.
template <typename Visit>
void scan_gaps(const Session& session, Visit visit) {
  const auto& u = session.utterances;
  const std::size_t n = u.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (is_none(u[a].talk_move)) continue;
    std::size_t b = a + 1;
    while (b < n && is_teacher_none(u[b].talk_move)) ++b;
    if (b < n && !is_none(u[b].talk_move)) visit(a, b);
  }
}

void require_non_none(const TalkMove& first, const TalkMove& second) {
  if (is_none(first) || is_none(second)) {
    throw InvalidPairError("gap pairs must be non-None talk moves, got (" + first.str() + ", " +
                           second.str() + ")");
  }
}

void check_min_share(double min_share) {
  if (!(min_share >= 0.0 && min_share < 1.0)) {
    throw ConfigError("gap min_share must lie in [0, 1)");
  }
}

}  // namespace

GapHistogram gap_histogram(const Corpus& corpus, const TalkMove& first, const TalkMove& second,
                           Parallelism parallelism) {
  require_non_none(first, second);
  GapHistogram h = map_reduce<GapHistogram>(
      corpus.sessions.size(), parallelism,
      [&](std::size_t begin, std::size_t end) {
        GapHistogram part;
        for (std::size_t s = begin; s < end; ++s) {
          const auto& u = corpus.sessions[s].utterances;
          scan_gaps(corpus.sessions[s], [&](std::size_t a, std::size_t b) {
            if (u[a].talk_move == first && u[b].talk_move == second) part.add(b - a - 1);
          });
        }
        return part;
      },
      [](GapHistogram& acc, GapHistogram&& part) { acc.merge(part); });
  h.pair = {first, second};
  return h;
}

std::map<MovePair, GapHistogram> all_gap_histograms(const Corpus& corpus,
                                                     Parallelism parallelism) {
  using Table = std::map<MovePair, GapHistogram>;
  Table table = map_reduce<Table>(
      corpus.sessions.size(), parallelism,
      [&](std::size_t begin, std::size_t end) {
        Table part;
        for (std::size_t s = begin; s < end; ++s) {
          const auto& u = corpus.sessions[s].utterances;
          scan_gaps(corpus.sessions[s], [&](std::size_t a, std::size_t b) {
            part[{u[a].talk_move, u[b].talk_move}].add(b - a - 1);
          });
        }
        return part;
      },
      [](Table& acc, Table&& part) {
        for (const auto& [pair, h] : part) acc[pair].merge(h);
      });
  for (auto& [pair, h] : table) h.pair = pair;
  return table;
}

GapStatistic tnone_gap_statistic(const GapHistogram& histogram, double min_share) {
  check_min_share(min_share);
  GapStatistic stat;
  stat.pair = histogram.pair;
  std::uint64_t weighted = 0;
  for (const GapEntry& e : histogram.entries) {
    const double share =
        static_cast<double>(e.count) / static_cast<double>(histogram.total_instances);
    if (share < min_share) {
      stat.excluded_entries.push_back(e);
      continue;
    }
    weighted += e.gap_length * e.count;
    stat.retained_instances += e.count;
  }
  if (stat.retained_instances > 0) {
    stat.value = static_cast<double>(weighted) / static_cast<double>(stat.retained_instances) *
                 100.0;
  }
  return stat;
}

// ---------------------------------------------------------------------------
// GapMatrix

GapMatrix::GapMatrix(std::vector<std::string> labels)
    : labels_(std::move(labels)), cells_(labels_.size() * labels_.size()) {}

const std::optional<GapCell>& GapMatrix::cell(std::string_view from, std::string_view to) const {
  static const std::optional<GapCell> kAbsent;
  std::optional<std::size_t> f, t;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == from) f = i;
    if (labels_[i] == to) t = i;
  }
  return f && t ? cell(*f, *t) : kAbsent;
}

GapMatrix gap_matrix(const Corpus& corpus, double min_share, const VocabularySet& vocab,
                     Parallelism parallelism) {
  check_min_share(min_share);
  std::vector<std::string> labels;
  for (const TalkMove& m : vocab.non_none_talk_moves()) labels.push_back(m.str());
  GapMatrix matrix(labels);
  matrix.min_share_ = min_share;
  const auto histograms = all_gap_histograms(corpus, parallelism);
  for (std::size_t f = 0; f < labels.size(); ++f) {
    for (std::size_t t = 0; t < labels.size(); ++t) {
      const auto it = histograms.find({TalkMove(labels[f]), TalkMove(labels[t])});
      if (it == histograms.end() || it->second.total_instances == 0) continue;
      GapCell cell{it->second, tnone_gap_statistic(it->second, min_share)};
      matrix.cells_[f * labels.size() + t] = std::move(cell);
    }
  }
  return matrix;
}

}  // namespace discourse_lens
