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
#include <filesystem>

#include "corpus_gen.h"
#include "discourse_lens/error.h"
#include "discourse_lens/ingest.h"
#include "discourse_lens/report.h"
#include "gtest/gtest.h"

namespace discourse_lens {
namespace {

using nlohmann::json;

Corpus worked_fixture() {
  Corpus c;
  c.corpus_id = "worked";
  c.sessions.push_back(make_session(
      "w", {"T-PRA", "T-None", "T-None", "S-MClaim", "T-PRA", "S-MClaim"}));
  return c;
}

TEST(AnalysisConfigTest, DefaultsAndValidation) {
  const AnalysisConfig c;
  EXPECT_EQ(c.transition_threshold, 0.10);
  EXPECT_EQ(c.gap_min_share, 0.05);
  EXPECT_EQ(c.topk_talkmove_das, 3u);
  EXPECT_EQ(c.topk_none_das, 7u);
  EXPECT_EQ(c.coverage_targets, (std::vector<double>{0.50, 0.75}));
  EXPECT_EQ(c.da_display_min_share, 0.005);
  EXPECT_TRUE(c.exclude_continuation_in_crosstab);
  EXPECT_EQ(c.markers, (std::vector<std::string>{"so"}));
  EXPECT_NO_THROW(c.validate());

  auto bad = [](auto mutate) {
    AnalysisConfig c;
    mutate(c);
    EXPECT_THROW(c.validate(), ConfigError);
  };
  bad([](AnalysisConfig& c) { c.transition_threshold = 1.0; });
  bad([](AnalysisConfig& c) { c.gap_min_share = -0.01; });
  bad([](AnalysisConfig& c) { c.topk_talkmove_das = 0; });
  bad([](AnalysisConfig& c) { c.topk_none_das = 0; });
  bad([](AnalysisConfig& c) { c.coverage_targets = {0.5}; });
  bad([](AnalysisConfig& c) { c.da_display_min_share = 1.5; });
  bad([](AnalysisConfig& c) { c.markers.clear(); });
  bad([](AnalysisConfig& c) { c.markers = {"so what"}; });
}

TEST(FullReportTest, EmptyCorpus) {
  Corpus c;
  c.corpus_id = "empty";
  const auto r = full_report(c, AnalysisConfig{});
  const json& d = r.document();
  EXPECT_EQ(d["summary"]["utterances"], 0);
  EXPECT_EQ(d["unigram"]["talk_moves"]["all"]["total"], 0);
  EXPECT_TRUE(d["gaps"]["cells"].empty());
  EXPECT_TRUE(d["transitions"]["filtered_direct"]["edges"].empty());
  EXPECT_TRUE(d["multiview"]["bigram_relations"].empty());
  for (const char* key : {"content_digest", "corpus_id", "tool_version", "config", "notes",
                          "summary", "unigram", "crosstab", "transitions", "gaps", "multiview",
                          "lexical"}) {
    EXPECT_TRUE(d.contains(key)) << key;
  }
  EXPECT_EQ(AnalysisReport::parse(r.text()).text(), r.text());
}

TEST(FullReportTest, WorkedFixture) {
  const auto r = full_report(worked_fixture(), AnalysisConfig{});
  const json& d = r.document();
  const json* cell = nullptr;
  for (const auto& c : d["gaps"]["cells"]) {
    if (c["from"] == "T-PRA" && c["to"] == "S-MClaim") cell = &c;
  }
  ASSERT_NE(cell, nullptr);
  EXPECT_EQ((*cell)["value"].get<double>(), 100.0);
  EXPECT_EQ((*cell)["retained_instances"], 2);

  const json& direct = d["transitions"]["direct"];
  EXPECT_EQ(direct["total"], 5);
  std::map<std::pair<std::string, std::string>, int> counts;
  for (const auto& row : direct["rows"]) {
    for (const auto& c : row["cells"]) counts[{row["from"], c["to"]}] = c["count"];
  }
  const std::map<std::pair<std::string, std::string>, int> expected = {
      {{"T-PRA", "T-None"}, 1},   {{"T-None", "T-None"}, 1}, {{"T-None", "S-MClaim"}, 1},
      {{"S-MClaim", "T-PRA"}, 1}, {{"T-PRA", "S-MClaim"}, 1}};
  EXPECT_EQ(counts, expected);
  EXPECT_NE(r.text().find("\"value\": 100.000000"), std::string::npos);
}

TEST(FullReportTest, DigestIsStableAndVerified) {
  const auto a = full_report(worked_fixture(), AnalysisConfig{});
  const auto b = full_report(worked_fixture(), AnalysisConfig{});
  EXPECT_EQ(a.digest(), b.digest());
  EXPECT_EQ(a.text(), b.text());
  EXPECT_EQ(a.digest().rfind("sha256:", 0), 0u);
  std::string tampered = a.text();
  tampered.replace(tampered.find("\"utterances\": 6"), 15, "\"utterances\": 7");
  EXPECT_THROW(AnalysisReport::parse(tampered), SchemaError);
  EXPECT_THROW(AnalysisReport::parse("not json"), SchemaError);
  EXPECT_THROW(AnalysisReport::parse("{}"), SchemaError);
  EXPECT_THROW(AnalysisReport::parse("1e400"), SchemaError);
}

TEST(FullReportTest, InvalidConfigThrows) {
  AnalysisConfig c;
  c.topk_none_das = 0;
  EXPECT_THROW(full_report(worked_fixture(), c), ConfigError);
}

TEST(FullReportTest, DeterministicAcrossThreadsAndOrder) {
  testing::Rng rng(51);
  for (int i = 0; i < 5; ++i) {
    Corpus c = testing::random_corpus(rng);
    const auto base = full_report(c, AnalysisConfig{}, VocabularySet::defaults(), Parallelism{1});
    std::shuffle(c.sessions.begin(), c.sessions.end(), rng);
    for (unsigned t : {2u, 7u}) {
      EXPECT_EQ(full_report(c, AnalysisConfig{}, VocabularySet::defaults(), Parallelism{t}).text(),
                base.text());
    }
  }
}

TEST(CompareTest, SelfComparisonIsZero) {
  testing::Rng rng(52);
  for (int i = 0; i < 5; ++i) {
    const auto r = full_report(testing::random_corpus(rng), AnalysisConfig{});
    const auto delta = compare(r, r);
    EXPECT_FALSE(delta.deltas.empty());
    for (const auto& e : delta.deltas) EXPECT_EQ(e.difference, 0.0) << e.path;
    EXPECT_TRUE(delta.one_sided.empty());
  }
}

TEST(CompareTest, PercentagePointDelta) {
  // T-None share 0.50 in a, 0.558 in b.
  Corpus a;
  a.sessions.push_back(make_session("a", {"T-None", "T-PRA"}));
  std::vector<std::string> moves(1000, "T-PRA");
  std::fill(moves.begin(), moves.begin() + 558, "T-None");
  Corpus b;
  b.sessions.push_back(make_session("b", moves));
  const auto delta = compare(full_report(a, AnalysisConfig{}), full_report(b, AnalysisConfig{}));
  const DeltaEntry* share = nullptr;
  for (const auto& e : delta.deltas) {
    if (e.path == "unigram/talk_moves/all/entries/T-None/share") share = &e;
  }
  ASSERT_NE(share, nullptr);
  EXPECT_EQ(share->unit, "points");
  EXPECT_EQ(share->value_a, 0.5);
  EXPECT_EQ(share->value_b, 0.558);
  EXPECT_EQ(share->difference, 5.8);
}

TEST(CompareTest, OneSidedAndMismatch) {
  Corpus a;
  a.sessions.push_back(make_session("a", {"T-PRA", "S-MClaim"}));
  Corpus b;
  b.sessions.push_back(make_session("b", {"T-KET", "S-MClaim"}));
  const auto ra = full_report(a, AnalysisConfig{});
  const auto rb = full_report(b, AnalysisConfig{});
  const auto delta = compare(ra, rb);
  bool only_a = false;
  bool only_b = false;
  for (const auto& o : delta.one_sided) {
    if (o.path.find("T-PRA->S-MClaim") != std::string::npos && o.present_in == "a") only_a = true;
    if (o.path.find("T-KET->S-MClaim") != std::string::npos && o.present_in == "b") only_b = true;
  }
  EXPECT_TRUE(only_a);
  EXPECT_TRUE(only_b);
  const json out = delta.to_json();
  EXPECT_TRUE(out.contains("one_sided"));

  AnalysisConfig other;
  other.transition_threshold = 0.2;
  EXPECT_THROW(compare(ra, full_report(b, other)), ConfigMismatchError);
}

TEST(RenderSummaryTest, NumbersComeFromReport) {
  const auto r = full_report(worked_fixture(), AnalysisConfig{});
  const std::string text = render_summary(r);
  EXPECT_NE(text.find(r.digest()), std::string::npos);
  EXPECT_NE(text.find("T-PRA -> S-MClaim  100.00"), std::string::npos) << text;
  // Editing a statistic in the document changes the rendered summary.
  json doc = r.document();
  for (auto& c : doc["gaps"]["cells"]) {
    if (c["from"] == "T-PRA") c["value"] = 42.0;
  }
  const std::string edited = render_summary(AnalysisReport(doc));
  EXPECT_NE(edited.find("T-PRA -> S-MClaim  42.00"), std::string::npos) << edited;
}

}  // namespace
}  // namespace discourse_lens
