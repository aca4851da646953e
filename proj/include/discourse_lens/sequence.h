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

// Sequential statistics over talk moves: bigram transition matrices,
// threshold-filtered transition edges, and the intervening-T-None gap
// statistic.
//
// Gap statistic. For an ordered pair of non-None moves (j, k), an instance is
// an utterance with move j followed by n >= 0 consecutive T-None utterances
// and then immediately by an utterance with move k, all in one session. Any
// other label in between (S-None included) breaks the pattern. Gap lengths
// whose share of the pair's instances is below `min_share` are dropped, and
//
//   value = 100 * sum(n_i * count_i) / sum(count_i)   over retained entries,
//
// or 0 when nothing is retained. The value is an expected count of
// intervening T-None utterances scaled by 100, not a probability.

#ifndef DISCOURSE_LENS_SEQUENCE_H_
#define DISCOURSE_LENS_SEQUENCE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "discourse_lens/corpus.h"
#include "discourse_lens/labels.h"
#include "discourse_lens/parallel.h"

namespace discourse_lens {

enum class TransitionMode { kDirect, kCollapsed };

std::string_view transition_mode_name(TransitionMode mode);

// Counts over consecutive utterance pairs, indexed (from, to) over the
// talk-move vocabulary. Probabilities are per-row conditionals P(to | from)
// over all successors; rows without outgoing transitions are all zero.
class TransitionMatrix {
 public:
  TransitionMatrix() = default;
  TransitionMatrix(std::vector<std::string> labels, TransitionMode mode);

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  TransitionMode mode() const { return mode_; }

  std::uint64_t count(std::size_t from, std::size_t to) const {
    return counts_[from * labels_.size() + to];
  }
  std::uint64_t count(std::string_view from, std::string_view to) const;
  std::uint64_t row_total(std::size_t from) const;
  double probability(std::size_t from, std::size_t to) const;
  double probability(std::string_view from, std::string_view to) const;
  std::uint64_t total() const;

  std::optional<std::size_t> index_of(std::string_view label) const;

  void add(std::size_t from, std::size_t to, std::uint64_t n = 1) {
    counts_[from * labels_.size() + to] += n;
  }
  void merge(const TransitionMatrix& other);

  friend bool operator==(const TransitionMatrix&, const TransitionMatrix&) = default;

 private:
  std::vector<std::string> labels_;
  TransitionMode mode_ = TransitionMode::kDirect;
  std::vector<std::uint64_t> counts_;
};

// Counts consecutive pairs within each session. Collapsed mode first deletes
// T-None and S-None utterances from each session's sequence.
TransitionMatrix transition_counts(const Corpus& corpus, bool collapse_none,
                                   const VocabularySet& vocab = VocabularySet::defaults(),
                                   Parallelism parallelism = {});

struct TransitionEdge {
  std::string from;
  std::string to;
  std::uint64_t count = 0;
  double probability = 0.0;
  SpeakerRole receiver_role = SpeakerRole::kTeacher;

  friend bool operator==(const TransitionEdge&, const TransitionEdge&) = default;
};

struct FilteredTransitions {
  std::vector<TransitionEdge> edges;  // sorted by (from, to)
  double threshold = 0.0;
  TransitionMode mode = TransitionMode::kDirect;
};

// Keeps observed transitions whose unrounded probability is >= threshold.
// Throws ConfigError unless 0 <= threshold <= 1.
FilteredTransitions filter_transitions(const TransitionMatrix& matrix, double threshold);

using MovePair = std::pair<TalkMove, TalkMove>;

struct GapEntry {
  std::size_t gap_length = 0;
  std::uint64_t count = 0;

  friend bool operator==(const GapEntry&, const GapEntry&) = default;
};

struct GapHistogram {
  MovePair pair;
  std::vector<GapEntry> entries;  // ascending gap_length, counts > 0
  std::uint64_t total_instances = 0;

  void add(std::size_t gap_length, std::uint64_t count = 1);
  void merge(const GapHistogram& other);
  std::uint64_t count_at(std::size_t gap_length) const;

  friend bool operator==(const GapHistogram&, const GapHistogram&) = default;
};

struct GapStatistic {
  MovePair pair;
  double value = 0.0;  // expected intervening T-None x 100
  std::uint64_t retained_instances = 0;
  std::vector<GapEntry> excluded_entries;
};

// Throws InvalidPairError when either move is a None label.
GapHistogram gap_histogram(const Corpus& corpus, const TalkMove& first,
                           const TalkMove& second, Parallelism parallelism = {});

// Throws ConfigError unless 0 <= min_share < 1.
GapStatistic tnone_gap_statistic(const GapHistogram& histogram, double min_share = 0.05);

struct GapCell {
  GapHistogram histogram;
  GapStatistic statistic;
};

// Gap statistics for every ordered pair of non-None vocabulary moves.
class GapMatrix {
 public:
  GapMatrix() = default;
  explicit GapMatrix(std::vector<std::string> labels);

  const std::vector<std::string>& labels() const { return labels_; }
  double min_share() const { return min_share_; }

  // nullopt for an absent cell (the pair never occurs).
  const std::optional<GapCell>& cell(std::size_t from, std::size_t to) const {
    return cells_[from * labels_.size() + to];
  }
  const std::optional<GapCell>& cell(std::string_view from, std::string_view to) const;

 private:
  friend GapMatrix gap_matrix(const Corpus&, double, const VocabularySet&, Parallelism);

  std::vector<std::string> labels_;
  double min_share_ = 0.05;
  std::vector<std::optional<GapCell>> cells_;
};

GapMatrix gap_matrix(const Corpus& corpus, double min_share = 0.05,
                     const VocabularySet& vocab = VocabularySet::defaults(),
                     Parallelism parallelism = {});

// All gap histograms of one corpus in a single scan, keyed by move pair.
std::map<MovePair, GapHistogram> all_gap_histograms(const Corpus& corpus,
                                                     Parallelism parallelism = {});

}  // namespace discourse_lens

#endif  // DISCOURSE_LENS_SEQUENCE_H_
