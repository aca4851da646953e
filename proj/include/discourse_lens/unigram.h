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

// Distributional (unigram) statistics over talk moves and dialogue acts.

#ifndef DISCOURSE_LENS_UNIGRAM_H_
#define DISCOURSE_LENS_UNIGRAM_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "discourse_lens/corpus.h"
#include "discourse_lens/distribution.h"
#include "discourse_lens/labels.h"
#include "discourse_lens/parallel.h"

namespace discourse_lens {

inline constexpr std::string_view kBelowThresholdBucket = "⟨below-threshold⟩";

// Talk-move counts over every utterance, or only those spoken by
// `role_filter`. Every vocabulary label is listed, observed or not.
Distribution talk_move_distribution(const Corpus& corpus,
                                    std::optional<SpeakerRole> role_filter = std::nullopt,
                                    const VocabularySet& vocab = VocabularySet::defaults(),
                                    Parallelism parallelism = {});

struct DisplayRow {
  std::string label;
  std::uint64_t count = 0;
  double share = 0.0;

  friend bool operator==(const DisplayRow&, const DisplayRow&) = default;
};

struct DialogueActDistribution {
  Distribution distribution;  // raw counts, all vocabulary labels
  double min_share_display = 0.0;
  // Observed labels with share >= min_share_display in distribution order,
  // then one kBelowThresholdBucket row aggregating the rest (if any).
  std::vector<DisplayRow> display;
};

// Throws ConfigError unless 0 <= min_share_display < 1.
DialogueActDistribution dialogue_act_distribution(
    const Corpus& corpus, double min_share_display,
    const VocabularySet& vocab = VocabularySet::defaults(), Parallelism parallelism = {});

struct CrossTabRow {
  TalkMove talk_move;
  Distribution acts;  // observed dialogue acts only
};

struct CrossTab {
  std::vector<CrossTabRow> rows;  // one per vocabulary talk move, lexicographic
  bool continuation_excluded = false;

  const CrossTabRow* row(std::string_view talk_move) const;
};

// Per talk move, the distribution of dialogue acts among utterances carrying
// it. With exclude_continuation, continuation-tagged utterances are dropped
// before counting.
CrossTab crosstab_talkmove_dialogueact(const Corpus& corpus, bool exclude_continuation,
                                       const VocabularySet& vocab = VocabularySet::defaults(),
                                       Parallelism parallelism = {});

struct CoverageSelection {
  std::vector<std::string> labels;
  double achieved_coverage = 0.0;
  bool target_met = false;

  friend bool operator==(const CoverageSelection&, const CoverageSelection&) = default;
};

// The first k observed labels of `d` (already ranked), their summed share and
// whether it reaches `coverage_target`. Throws ConfigError for k == 0 or a
// target outside (0, 1].
CoverageSelection top_k_with_coverage(const Distribution& d, std::size_t k,
                                      double coverage_target);

}  // namespace discourse_lens

#endif  // DISCOURSE_LENS_UNIGRAM_H_
