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

#include <algorithm>
#include <numeric>

#include "corpus_gen.h"
#include "discourse_lens/error.h"
#include "discourse_lens/unigram.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace discourse_lens {
namespace {

Corpus single(const std::vector<std::string>& moves, const std::vector<std::string>& acts = {}) {
  Corpus c;
  c.sessions.push_back(make_session("s", moves, acts));
  return c;
}

TEST(TalkMoveDistributionTest, HandCount) {
  const auto d = talk_move_distribution(single({"T-KET", "T-KET", "S-None", "S-MClaim"}));
  EXPECT_EQ(d.total, 4u);
  EXPECT_DOUBLE_EQ(d.share_of("T-KET"), 0.5);
  EXPECT_DOUBLE_EQ(d.share_of("S-None"), 0.25);
  EXPECT_DOUBLE_EQ(d.share_of("S-MClaim"), 0.25);
  EXPECT_EQ(d.labels[0], "T-KET");
  EXPECT_EQ(d.size(), 12u);  // unobserved vocabulary labels at zero
  EXPECT_EQ(d.count_of("T-PRA"), 0u);
}

TEST(TalkMoveDistributionTest, RoleFilter) {
  const Corpus c = single({"T-KET", "T-KET", "S-None", "S-MClaim"});
  const auto t = talk_move_distribution(c, SpeakerRole::kTeacher);
  EXPECT_EQ(t.total, 2u);
  EXPECT_DOUBLE_EQ(t.share_of("T-KET"), 1.0);
  EXPECT_EQ(t.size(), 7u);
  EXPECT_EQ(talk_move_distribution(c, SpeakerRole::kStudent).size(), 5u);
}

TEST(TalkMoveDistributionTest, Empty) {
  const auto d = talk_move_distribution(Corpus{});
  EXPECT_EQ(d.total, 0u);
  for (double s : d.shares) EXPECT_EQ(s, 0.0);
}

TEST(DialogueActDistributionTest, HandCount) {
  const auto d = dialogue_act_distribution(single({"T-PRA", "T-PRA", "T-PRA", "T-PRA"},
                                                  {"sd", "sd", "qw", "+"}),
                                           0.0);
  EXPECT_DOUBLE_EQ(d.distribution.share_of("sd"), 0.5);
  EXPECT_DOUBLE_EQ(d.distribution.share_of("qw"), 0.25);
  EXPECT_DOUBLE_EQ(d.distribution.share_of("+"), 0.25);
  EXPECT_EQ(d.distribution.size(), 43u);
  ASSERT_EQ(d.display.size(), 3u);
  EXPECT_EQ(d.display[0].label, "sd");
}

TEST(DialogueActDistributionTest, SingleUtterance) {
  const auto d = dialogue_act_distribution(single({"T-PRA"}, {"qy"}), 0.005);
  EXPECT_DOUBLE_EQ(d.distribution.share_of("qy"), 1.0);
  ASSERT_EQ(d.display.size(), 1u);
}

TEST(DialogueActDistributionTest, DisplayRuleGroupsSmallShares) {
  // 1 of 201 is below 0.5%, 2 of 201 is not.
  std::vector<std::string> acts(198, "sd");
  acts.push_back("qw");
  acts.push_back("qw");
  acts.push_back("qy");
  const auto d = dialogue_act_distribution(
      single(std::vector<std::string>(acts.size(), "T-PRA"), acts), 0.005);
  ASSERT_EQ(d.display.size(), 3u);
  EXPECT_EQ(d.display[1].label, "qw");
  EXPECT_EQ(d.display[2].label, kBelowThresholdBucket);
  EXPECT_EQ(d.display[2].count, 1u);
  EXPECT_THROW(dialogue_act_distribution(Corpus{}, 1.0), ConfigError);
  EXPECT_THROW(dialogue_act_distribution(Corpus{}, -0.1), ConfigError);
}

TEST(CrossTabTest, ContinuationExclusion) {
  const Corpus c = single({"T-PRA", "T-PRA", "T-PRA"}, {"qw", "qy", "+"});
  const auto with = crosstab_talkmove_dialogueact(c, true);
  const auto* row = with.row("T-PRA");
  ASSERT_NE(row, nullptr);
  EXPECT_EQ(row->acts.total, 2u);
  EXPECT_DOUBLE_EQ(row->acts.share_of("qw"), 0.5);
  EXPECT_DOUBLE_EQ(row->acts.share_of("qy"), 0.5);
  EXPECT_TRUE(with.continuation_excluded);

  const auto without = crosstab_talkmove_dialogueact(c, false);
  row = without.row("T-PRA");
  EXPECT_DOUBLE_EQ(row->acts.share_of("qw"), 1.0 / 3);
  EXPECT_DOUBLE_EQ(row->acts.share_of("+"), 1.0 / 3);
  EXPECT_EQ(without.rows.size(), 12u);
}

TEST(TopKTest, HandSums) {
  CountMap counts = {{"a", 40}, {"b", 30}, {"c", 20}, {"d", 10}};
  const auto d = Distribution::from_counts(counts);
  const auto three = top_k_with_coverage(d, 3, 0.5);
  EXPECT_EQ(three.labels, (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_DOUBLE_EQ(three.achieved_coverage, 0.9);
  EXPECT_TRUE(three.target_met);
  const auto one = top_k_with_coverage(d, 1, 0.5);
  EXPECT_EQ(one.labels, (std::vector<std::string>{"a"}));
  EXPECT_DOUBLE_EQ(one.achieved_coverage, 0.4);
  EXPECT_FALSE(one.target_met);
}

TEST(TopKTest, UniformExhaustive) {
  const auto d = Distribution::from_counts({{"w", 1}, {"x", 1}, {"y", 1}, {"z", 1}});
  const auto all = top_k_with_coverage(d, 4, 1.0);
  EXPECT_EQ(all.labels.size(), 4u);
  EXPECT_DOUBLE_EQ(all.achieved_coverage, 1.0);
  EXPECT_TRUE(all.target_met);
  EXPECT_THROW(top_k_with_coverage(d, 0, 0.5), ConfigError);
  EXPECT_THROW(top_k_with_coverage(d, 1, 0.0), ConfigError);
  EXPECT_THROW(top_k_with_coverage(d, 1, 1.5), ConfigError);
}

TEST(TopKTest, EmptyDistribution) {
  const auto sel = top_k_with_coverage(Distribution::from_counts({}, {"a", "b"}), 3, 0.5);
  EXPECT_TRUE(sel.labels.empty());
  EXPECT_EQ(sel.achieved_coverage, 0.0);
  EXPECT_FALSE(sel.target_met);
}

TEST(DistributionTest, OrderingTiesLexicographic) {
  const auto d = Distribution::from_counts({{"b", 2}, {"a", 2}, {"c", 5}}, {"z"});
  EXPECT_EQ(d.labels, (std::vector<std::string>{"c", "a", "b", "z"}));
  EXPECT_EQ(d.total, 9u);
}

TEST(UnigramPropertyTest, RandomCorpora) {
  testing::Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    Corpus c = testing::random_corpus(rng);
    const auto all = talk_move_distribution(c);
    const auto t = talk_move_distribution(c, SpeakerRole::kTeacher);
    const auto s = talk_move_distribution(c, SpeakerRole::kStudent);
    EXPECT_EQ(t.total + s.total, all.total);

    const auto oracle = testing::brute_move_counts(c);
    for (const auto& [label, n] : oracle) EXPECT_EQ(all.count_of(label), n);

    const auto with = crosstab_talkmove_dialogueact(c, true);
    const auto without = crosstab_talkmove_dialogueact(c, false);
    for (const auto& row : with.rows) {
      EXPECT_LE(row.acts.total, without.row(row.talk_move.str())->acts.total);
    }

    for (const auto& row : without.rows) {
      double last = -1.0;
      for (std::size_t k = 1; k <= 8; ++k) {
        const double cov = top_k_with_coverage(row.acts, k, 0.5).achieved_coverage;
        EXPECT_GE(cov, last);
        last = cov;
      }
    }

    std::shuffle(c.sessions.begin(), c.sessions.end(), rng);
    EXPECT_EQ(talk_move_distribution(c), all);
    EXPECT_EQ(crosstab_talkmove_dialogueact(c, false).rows.size(), without.rows.size());
    EXPECT_EQ(talk_move_distribution(c, std::nullopt, VocabularySet::defaults(), Parallelism{4}),
              all);
  }
}

}  // namespace
}  // namespace discourse_lens
