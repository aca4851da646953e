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

#ifndef DISCOURSE_LENS_REPORT_H_
#define DISCOURSE_LENS_REPORT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "discourse_lens/corpus.h"
#include "discourse_lens/labels.h"
#include "discourse_lens/parallel.h"
#include "json.hpp"

namespace discourse_lens {

inline constexpr std::string_view kToolVersion = "discourse-lens 1.0.0";

struct AnalysisConfig {
  double transition_threshold = 0.10;
  double gap_min_share = 0.05;
  std::size_t topk_talkmove_das = 3;
  std::size_t topk_none_das = 7;
  // Coverage targets for the talk-move and the None-move top-k selections.
  std::vector<double> coverage_targets = {0.50, 0.75};
  double da_display_min_share = 0.005;
  bool exclude_continuation_in_crosstab = true;
  std::vector<std::string> markers = {"so"};

  // Throws ConfigError: fractions must lie in [0, 1), integers be >= 1,
  // exactly two coverage targets, at least one marker.
  void validate() const;
  nlohmann::json to_json() const;

  friend bool operator==(const AnalysisConfig&, const AnalysisConfig&) = default;
};

// The canonical aggregate of every statistic for one corpus.
class AnalysisReport {
 public:
  AnalysisReport() = default;

  // Adopts a report document, recomputing its canonical text and digest.
  explicit AnalysisReport(nlohmann::json document);

  // Parses report JSON as written by `text()`. Throws SchemaError.
  static AnalysisReport parse(std::string_view text, std::string_view source_name = "<memory>");

  const nlohmann::json& document() const { return document_; }
  // Canonical bytes, including the digest field.
  const std::string& text() const { return text_; }
  // "sha256:<hex>" over the canonical bytes of the document without the
  // digest field.
  const std::string& digest() const { return digest_; }

 private:
  nlohmann::json document_;
  std::string text_;
  std::string digest_;
};

// Runs every analysis with `config` and assembles the report. Independent
// sections are computed on up to `parallelism.threads` workers; the output is
// byte-identical for any thread count and session order.
AnalysisReport full_report(const Corpus& corpus, const AnalysisConfig& config,
                           const VocabularySet& vocab = VocabularySet::defaults(),
                           Parallelism parallelism = {});

struct DeltaEntry {
  std::string path;
  std::string unit;  // "points" (fractions, delta x 100), "raw" or "count"
  double value_a = 0.0;
  double value_b = 0.0;
  double difference = 0.0;
};

struct OneSidedEntry {
  std::string path;
  std::string present_in;  // "a" or "b"
  double value = 0.0;
};

struct DeltaReport {
  std::string corpus_a;
  std::string corpus_b;
  std::vector<DeltaEntry> deltas;
  std::vector<OneSidedEntry> one_sided;

  nlohmann::json to_json() const;
  std::string text() const;
};

// Aligns every numeric statistic of two reports by path. Differences are
// computed on the printed decimals, so they are exact. Throws
// ConfigMismatchError when config or tool version differ.
DeltaReport compare(const AnalysisReport& a, const AnalysisReport& b);

// Human-readable digest of a report, derived from the report document only.
std::string render_summary(const AnalysisReport& report);

}  // namespace discourse_lens

#endif  // DISCOURSE_LENS_REPORT_H_
