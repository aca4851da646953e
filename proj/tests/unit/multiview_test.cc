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

#include "corpus_gen.h"
#include "discourse_lens/error.h"
#include "discourse_lens/multiview.h"
#include "discourse_lens/sequence.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace discourse_lens {
namespace {

const TalkMove kSMClaim("S-MClaim");
const TalkMove kTPRA("T-PRA");

DiscourseEdge edge(std::size_t s, std::size_t t, std::string rel) {
  return {s, t, RelationLabel(std::move(rel))};
}

TEST(BigramRelationTest, HandCount) {
  Corpus c;
  Session s = make_session("s", {"S-MClaim", "T-PRA", "S-MClaim", "T-PRA", "S-MClaim", "T-PRA"});
  s.edges = {edge(0, 1, "Clarification_question"), edge(4, 5, "Acknowledgement"),
             edge(0, 2, "Elaboration")};
  c.sessions.push_back(s);
  const auto r = bigram_relation_distribution(c, kSMClaim, kTPRA);
  EXPECT_EQ(r.instances, 3u);
  EXPECT_DOUBLE_EQ(r.distribution.share_of("Clarification_question"), 1.0 / 3);
  EXPECT_DOUBLE_EQ(r.distribution.share_of("Acknowledgement"), 1.0 / 3);
  EXPECT_DOUBLE_EQ(r.distribution.share_of(kNoEdgeBucket), 1.0 / 3);
  EXPECT_EQ(r.distribution.count_of("Elaboration"), 0u);
}

TEST(BigramRelationTest, MultipleRelationsOnOneEdge) {
  Corpus c;
  Session s = make_session("s", {"S-MClaim", "T-PRA"});
  s.edges = {edge(0, 1, "Acknowledgement"), edge(0, 1, "Elaboration")};
  c.sessions.push_back(s);
  const auto r = bigram_relation_distribution(c, kSMClaim, kTPRA);
  EXPECT_EQ(r.instances, 1u);
  EXPECT_EQ(r.distribution.total, 2u);
}

TEST(BigramRelationTest, NoInstances) {
  const auto r = bigram_relation_distribution(Corpus{}, kSMClaim, kTPRA);
  EXPECT_EQ(r.instances, 0u);
  EXPECT_EQ(r.distribution.total, 0u);
}

TEST(ToNoneTest, HandCount) {
  Corpus c;
  c.sessions.push_back(make_session(
      "s", {"T-RES", "T-None", "T-RES", "T-None", "T-RES", "T-None", "T-RES", "S-None"},
      {"qw", "sd", "qw", "sd", "qw", "ad", "qw", "b"}));
  const auto d = talkmove_to_none_da_distribution(c, TalkMove("T-RES"));
  EXPECT_EQ(d.total, 3u);
  EXPECT_DOUBLE_EQ(d.share_of("sd"), 2.0 / 3);
  EXPECT_DOUBLE_EQ(d.share_of("ad"), 1.0 / 3);
  EXPECT_EQ(talkmove_to_none_da_distribution(c, TalkMove("T-KET")).total, 0u);
}

TEST(TripleTest, HandCount) {
  Corpus c;
  c.sessions.push_back(make_session(
      "s",
      {"T-PRA", "T-None", "S-MClaim", "T-PRA", "T-None", "S-MClaim", "T-PRA", "T-None",
       "S-MClaim", "T-PRA", "T-None", "S-MClaim", "T-PRA", "T-None", "T-None", "S-MClaim"},
      {"qw", "ad", "sd", "qw", "sd", "sd", "qw", "ad", "sd", "qw", "b", "sd", "qw", "ad", "ad",
       "sd"}));
  const auto d = triple_none_da_distribution(c, kTPRA, kSMClaim);
  EXPECT_EQ(d.total, 4u);
  EXPECT_DOUBLE_EQ(d.share_of("ad"), 0.5);
  EXPECT_DOUBLE_EQ(d.share_of("sd"), 0.25);
  EXPECT_DOUBLE_EQ(d.share_of("b"), 0.25);
  EXPECT_EQ(triple_instances(c, kTPRA, kSMClaim).size(), 4u);
  EXPECT_EQ(triple_none_da_distribution(c, kSMClaim, kSMClaim).total, 0u);
  EXPECT_THROW(triple_none_da_distribution(c, TalkMove("T-None"), kSMClaim), InvalidPairError);
}

TEST(NormalizeTokensTest, Rules) {
  EXPECT_EQ(normalize_tokens("So, first..."), (std::vector<std::string>{"so", "first"}));
  EXPECT_EQ(normalize_tokens("  \"SO\"  we ... add!"),
            (std::vector<std::string>{"so", "we", "add"}));
  EXPECT_TRUE(normalize_tokens("").empty());
  EXPECT_TRUE(normalize_tokens(" ?! ").empty());
  EXPECT_EQ(normalize_tokens("don't"), (std::vector<std::string>{"don't"}));
}

Corpus lexical_corpus(const std::vector<std::string>& second_texts) {
  Corpus c;
  for (std::size_t i = 0; i < second_texts.size(); ++i) {
    Session s = make_session("s" + std::to_string(i), {"S-ProEvi", "S-ProEvi"});
    s.utterances[1].text = second_texts[i];
    c.sessions.push_back(s);
  }
  return c;
}

TEST(LexicalMarkerTest, Examples) {
  const TalkMove p("S-ProEvi");
  const auto half = lexical_marker_share(lexical_corpus({"So we add them", "We add them"}), p, p,
                                         {"so"}, MarkerPosition::kLeadingToken);
  EXPECT_DOUBLE_EQ(half.share, 0.5);
  EXPECT_EQ(half.population, 2u);
  ASSERT_EQ(half.matches.size(), 1u);
  EXPECT_EQ(half.matches[0].session_id, "s0");

  EXPECT_EQ(lexical_marker_share(lexical_corpus({"We add", "Then"}), p, p, {"so"},
                                 MarkerPosition::kAnyToken)
                .share,
            0.0);
  EXPECT_DOUBLE_EQ(lexical_marker_share(lexical_corpus({"So, first..."}), p, p, {"so"},
                                        MarkerPosition::kLeadingToken)
                       .share,
                   1.0);
  EXPECT_DOUBLE_EQ(lexical_marker_share(lexical_corpus({"and so on"}), p, p, {"so"},
                                        MarkerPosition::kAnyToken)
                       .share,
                   1.0);
  EXPECT_THROW(lexical_marker_share(Corpus{}, p, p, {}, MarkerPosition::kAnyToken), ConfigError);
  EXPECT_THROW(lexical_marker_share(Corpus{}, p, p, {"so then"}, MarkerPosition::kAnyToken),
               ConfigError);
  EXPECT_EQ(lexical_marker_share(Corpus{}, p, p, {"so"}, MarkerPosition::kAnyToken).share, 0.0);
}

TEST(MarkerPositionTest, Names) {
  EXPECT_EQ(parse_marker_position("leading"), MarkerPosition::kLeadingToken);
  EXPECT_EQ(parse_marker_position("any_token"), MarkerPosition::kAnyToken);
  EXPECT_FALSE(parse_marker_position("middle").has_value());
}

TEST(PatternTest, Parse) {
  EXPECT_TRUE(std::holds_alternative<TriplePattern>(parse_instance_pattern("triple:T-PRA,S-MClaim")));
  EXPECT_TRUE(std::holds_alternative<BigramPattern>(parse_instance_pattern("bigram:T-PRA,S-MClaim")));
  const auto m = parse_instance_pattern("move_with_act:T-PRA,qw");
  ASSERT_TRUE(std::holds_alternative<MoveWithActPattern>(m));
  EXPECT_EQ(std::get<MoveWithActPattern>(m).act.str(), "qw");
  for (const char* bad : {"T-PRA,S-MClaim", "quad:a,b", "bigram:a", "bigram:a,b,c", "bigram:,b"}) {
    EXPECT_THROW(parse_instance_pattern(bad), ConfigError) << bad;
  }
}

TEST(ExtractInstancesTest, OrderingAndContext) {
  Corpus c;
  Session s = make_session("a", {"T-PRA", "S-MClaim", "T-KET", "T-PRA", "S-MClaim"});
  s.edges = {edge(0, 1, "Acknowledgement"), edge(1, 4, "Elaboration")};
  c.sessions = {s, make_session("b", {"T-PRA", "S-MClaim"})};
  const auto pattern = parse_instance_pattern("bigram:T-PRA,S-MClaim");

  const auto first = extract_instances(c, pattern, 1, 0);
  ASSERT_EQ(first.size(), 1u);
  EXPECT_EQ(first[0].session_id, "a");
  EXPECT_EQ(first[0].match_begin, 0u);

  const auto all = extract_instances(c, pattern, 10, 1);
  ASSERT_EQ(all.size(), 3u);
  EXPECT_EQ(all[0].span_begin, 0u);  // clipped
  EXPECT_EQ(all[0].span_end, 2u);
  ASSERT_EQ(all[0].edges.size(), 1u);
  EXPECT_EQ(all[1].span_begin, 2u);
  EXPECT_EQ(all[1].span_end, 4u);  // clipped
  EXPECT_EQ(all[1].utterances.size(), 3u);
  EXPECT_EQ(all[2].session_id, "b");

  EXPECT_TRUE(extract_instances(c, parse_instance_pattern("bigram:T-REV,S-MClaim"), 5, 1).empty());
  EXPECT_THROW(extract_instances(c, pattern, 0, 1), ConfigError);
}

TEST(MultiviewPropertyTest, CrossModuleConsistency) {
  testing::Rng rng(41);
  const auto& vocab = VocabularySet::defaults();
  const auto all_moves = vocab.all_talk_moves();
  const auto non_none = vocab.non_none_talk_moves();
  for (int i = 0; i < 40; ++i) {
    Corpus c = testing::random_corpus(rng);
    const auto direct = transition_counts(c, false);
    const auto gaps = all_gap_histograms(c);
    for (const auto& a : all_moves) {
      for (const auto& b : all_moves) {
        EXPECT_EQ(bigram_instances(c, a, b).size(), direct.count(a.str(), b.str()));
        const auto rel = bigram_relation_distribution(c, a, b);
        EXPECT_EQ(rel.instances, direct.count(a.str(), b.str()));
        const auto leading = lexical_marker_share(c, a, b, {"so"}, MarkerPosition::kLeadingToken);
        const auto any = lexical_marker_share(c, a, b, {"so"}, MarkerPosition::kAnyToken);
        EXPECT_GE(leading.share, 0.0);
        EXPECT_LE(any.share, 1.0);
        EXPECT_LE(leading.share, any.share);
      }
    }
    for (const auto& a : non_none) {
      for (const auto& b : non_none) {
        const auto it = gaps.find({a, b});
        const std::uint64_t at_one = it == gaps.end() ? 0 : it->second.count_at(1);
        EXPECT_EQ(triple_instances(c, a, b).size(), at_one);
        EXPECT_EQ(testing::brute_triple_count(c, a.str(), b.str()), at_one);
      }
    }
    const auto before = bigram_relation_distribution(c, kSMClaim, kTPRA);
    std::shuffle(c.sessions.begin(), c.sessions.end(), rng);
    EXPECT_EQ(bigram_relation_distribution(c, kSMClaim, kTPRA, Parallelism{3}).distribution,
              before.distribution);
  }
}

}  // namespace
}  // namespace discourse_lens
