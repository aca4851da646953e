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

#include "discourse_lens/report.h"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "discourse_lens/error.h"
#include "discourse_lens/format.h"
#include "discourse_lens/multiview.h"
#include "discourse_lens/render.h"
#include "discourse_lens/sequence.h"
#include "discourse_lens/unigram.h"

namespace discourse_lens {

using nlohmann::json;

namespace {

bool is_fraction(double v) { return v >= 0.0 && v < 1.0; }

json distribution_json(const Distribution& d) {
  json entries = json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    entries.push_back({{"label", d.labels[i]}, {"count", d.counts[i]}, {"share", d.shares[i]}});
  }
  return {{"total", d.total}, {"entries", std::move(entries)}};
}

json matrix_json(const TransitionMatrix& m) {
  json rows = json::array();
  for (std::size_t f = 0; f < m.size(); ++f) {
    json cells = json::array();
    for (std::size_t t = 0; t < m.size(); ++t) {
      if (m.count(f, t) == 0) continue;
      cells.push_back({{"to", m.labels()[t]},
                       {"count", m.count(f, t)},
                       {"probability", m.probability(f, t)}});
    }
    rows.push_back({{"from", m.labels()[f]}, {"total", m.row_total(f)}, {"cells", cells}});
  }
  return {{"mode", std::string(transition_mode_name(m.mode()))},
          {"labels", m.labels()},
          {"total", m.total()},
          {"rows", std::move(rows)}};
}

json gap_entries_json(const std::vector<GapEntry>& entries) {
  json out = json::array();
  for (const auto& e : entries) out.push_back({{"gap_length", e.gap_length}, {"count", e.count}});
  return out;
}

json selection_json(const CoverageSelection& sel, std::size_t k, double target) {
  return {{"k", k},
          {"coverage_target", target},
          {"labels", sel.labels},
          {"achieved_coverage", sel.achieved_coverage},
          {"target_met", sel.target_met}};
}

json summary_section(const Corpus& corpus) {
  std::uint64_t teacher = 0;
  std::uint64_t student = 0;
  std::map<std::string, std::uint64_t> domains;
  for (const Session& s : corpus.sessions) {
    ++domains[std::string(domain_name(s.domain))];
    for (const Utterance& u : s.utterances) {
      (u.speaker == SpeakerRole::kTeacher ? teacher : student) += 1;
    }
  }
  json domain_counts = json::object();
  for (const auto& [name, n] : domains) domain_counts[name] = n;
  return {{"sessions", corpus.sessions.size()},
          {"utterances", corpus.utterance_count()},
          {"edges", corpus.edge_count()},
          {"teacher_utterances", teacher},
          {"student_utterances", student},
          {"sessions_by_domain", std::move(domain_counts)}};
}

json unigram_section(const Corpus& corpus, const AnalysisConfig& config,
                     const VocabularySet& vocab, Parallelism par) {
  const Distribution all = talk_move_distribution(corpus, std::nullopt, vocab, par);
  const Distribution teacher = talk_move_distribution(corpus, SpeakerRole::kTeacher, vocab, par);
  const Distribution student = talk_move_distribution(corpus, SpeakerRole::kStudent, vocab, par);
  const std::uint64_t none = all.count_of(kTeacherNone) + all.count_of(kStudentNone);
  const double none_share =
      all.total == 0 ? 0.0 : static_cast<double>(none) / static_cast<double>(all.total);

  const DialogueActDistribution acts =
      dialogue_act_distribution(corpus, config.da_display_min_share, vocab, par);
  json display = json::array();
  for (const auto& row : acts.display) {
    display.push_back({{"label", row.label}, {"count", row.count}, {"share", row.share}});
  }
  return {{"talk_moves",
           {{"all", distribution_json(all)},
            {"teacher", distribution_json(teacher)},
            {"student", distribution_json(student)},
            {"none_count", none},
            {"none_share", none_share}}},
          {"dialogue_acts",
           {{"distribution", distribution_json(acts.distribution)},
            {"min_share_display", acts.min_share_display},
            {"display", std::move(display)}}}};
}

json crosstab_section(const Corpus& corpus, const AnalysisConfig& config,
                      const VocabularySet& vocab, Parallelism par) {
  const CrossTab tab =
      crosstab_talkmove_dialogueact(corpus, config.exclude_continuation_in_crosstab, vocab, par);
  json rows = json::array();
  for (const auto& row : tab.rows) {
    const bool none = is_none(row.talk_move);
    const std::size_t k = none ? config.topk_none_das : config.topk_talkmove_das;
    const double target = config.coverage_targets[none ? 1 : 0];
    rows.push_back({{"talk_move", row.talk_move.str()},
                    {"acts", distribution_json(row.acts)},
                    {"top_k", selection_json(top_k_with_coverage(row.acts, k, target), k, target)}});
  }
  return {{"continuation_excluded", tab.continuation_excluded}, {"rows", std::move(rows)}};
}

json transitions_section(const Corpus& corpus, const AnalysisConfig& config,
                         const VocabularySet& vocab, Parallelism par) {
  const TransitionMatrix direct = transition_counts(corpus, false, vocab, par);
  const TransitionMatrix collapsed = transition_counts(corpus, true, vocab, par);
  return {{"direct", matrix_json(direct)},
          {"collapsed", matrix_json(collapsed)},
          {"filtered_direct",
           transitions_json(filter_transitions(direct, config.transition_threshold))},
          {"filtered_collapsed",
           transitions_json(filter_transitions(collapsed, config.transition_threshold))}};
}

json gaps_section(const Corpus& corpus, const AnalysisConfig& config, const VocabularySet& vocab,
                  Parallelism par) {
  const GapMatrix m = gap_matrix(corpus, config.gap_min_share, vocab, par);
  json cells = json::array();
  const auto& labels = m.labels();
  for (std::size_t f = 0; f < labels.size(); ++f) {
    for (std::size_t t = 0; t < labels.size(); ++t) {
      const auto& cell = m.cell(f, t);
      if (!cell) continue;
      cells.push_back({{"from", labels[f]},
                       {"to", labels[t]},
                       {"value", cell->statistic.value},
                       {"retained_instances", cell->statistic.retained_instances},
                       {"total_instances", cell->histogram.total_instances},
                       {"histogram", gap_entries_json(cell->histogram.entries)},
                       {"excluded", gap_entries_json(cell->statistic.excluded_entries)}});
    }
  }
  return {{"min_share", config.gap_min_share},
          {"labels", labels},
          {"unit", "expected intervening T-None x 100"},
          {"cells", std::move(cells)}};
}

json multiview_section(const Corpus& corpus, const VocabularySet& vocab, Parallelism par) {
  const TransitionMatrix direct = transition_counts(corpus, false, vocab, par);
  const auto moves = vocab.all_talk_moves();

  json bigrams = json::array();
  for (const auto& a : moves) {
    for (const auto& b : moves) {
      if (direct.count(a.str(), b.str()) == 0) continue;
      const RelationDistribution rel = bigram_relation_distribution(corpus, a, b, par);
      bigrams.push_back({{"from", a.str()},
                         {"to", b.str()},
                         {"instances", rel.instances},
                         {"relations", distribution_json(rel.distribution)}});
    }
  }

  json to_none = json::array();
  for (const auto& a : moves) {
    const Distribution d = talkmove_to_none_da_distribution(corpus, a, par);
    if (d.total == 0) continue;
    to_none.push_back({{"from", a.str()}, {"acts", distribution_json(d)}});
  }

  json triples = json::array();
  const auto histograms = all_gap_histograms(corpus, par);
  for (const auto& a : vocab.non_none_talk_moves()) {
    for (const auto& b : vocab.non_none_talk_moves()) {
      const auto it = histograms.find({a, b});
      if (it == histograms.end() || it->second.count_at(1) == 0) continue;
      const Distribution d = triple_none_da_distribution(corpus, a, b, par);
      triples.push_back({{"from", a.str()}, {"to", b.str()}, {"acts", distribution_json(d)}});
    }
  }
  return {{"bigram_relations", std::move(bigrams)},
          {"talkmove_to_tnone", std::move(to_none)},
          {"tnone_triples", std::move(triples)}};
}

json lexical_section(const Corpus& corpus, const AnalysisConfig& config,
                     const VocabularySet& vocab, Parallelism par) {
  const TransitionMatrix direct = transition_counts(corpus, false, vocab, par);
  const auto moves = vocab.all_talk_moves();
  json pairs = json::array();
  for (const auto& a : moves) {
    for (const auto& b : moves) {
      if (direct.count(a.str(), b.str()) == 0) continue;
      const auto leading =
          lexical_marker_share(corpus, a, b, config.markers, MarkerPosition::kLeadingToken);
      const auto any = lexical_marker_share(corpus, a, b, config.markers, MarkerPosition::kAnyToken);
      pairs.push_back({{"from", a.str()},
                       {"to", b.str()},
                       {"population", leading.population},
                       {"leading_token_matches", leading.matches.size()},
                       {"leading_token_share", leading.share},
                       {"any_token_matches", any.matches.size()},
                       {"any_token_share", any.share}});
    }
  }
  return {{"markers", config.markers}, {"pairs", std::move(pairs)}};
}

json notes() {
  return json::array({
      "thresholds compare unrounded probabilities; rounding happens only when printing",
      "transition probabilities are per-row conditionals over all successors; the "
      "receiver-role split is a display grouping, not a separate normalization",
      "gap values are expected counts of intervening T-None utterances multiplied by 100",
      "bigram relations credit only the edge between the two adjacent utterances",
  });
}

}  // namespace

// ---------------------------------------------------------------------------
// AnalysisConfig

void AnalysisConfig::validate() const {
  auto fraction = [](double v, const char* name) {
    if (!is_fraction(v)) throw ConfigError(std::string(name) + " must lie in [0, 1)");
  };
  fraction(transition_threshold, "transition_threshold");
  fraction(gap_min_share, "gap_min_share");
  fraction(da_display_min_share, "da_display_min_share");
  if (topk_talkmove_das < 1) throw ConfigError("topk_talkmove_das must be >= 1");
  if (topk_none_das < 1) throw ConfigError("topk_none_das must be >= 1");
  if (coverage_targets.size() != 2) {
    throw ConfigError("coverage_targets needs exactly two values (talk moves, None moves)");
  }
  for (double t : coverage_targets) {
    // top_k_with_coverage additionally rejects a zero target.
    if (!is_fraction(t) || t == 0.0) throw ConfigError("coverage targets must lie in (0, 1)");
  }
  if (markers.empty()) throw ConfigError("at least one marker is required");
  for (const auto& m : markers) {
    if (normalize_tokens(m).size() != 1) {
      throw ConfigError("marker \"" + m + "\" must normalize to exactly one token");
    }
  }
}

json AnalysisConfig::to_json() const {
  return {{"transition_threshold", transition_threshold},
          {"gap_min_share", gap_min_share},
          {"topk_talkmove_das", topk_talkmove_das},
          {"topk_none_das", topk_none_das},
          {"coverage_targets", coverage_targets},
          {"da_display_min_share", da_display_min_share},
          {"exclude_continuation_in_crosstab", exclude_continuation_in_crosstab},
          {"markers", markers}};
}

// ---------------------------------------------------------------------------
// AnalysisReport

AnalysisReport::AnalysisReport(json document) : document_(std::move(document)) {
  document_.erase("content_digest");
  digest_ = "sha256:" + sha256_hex(canonical_json(document_));
  document_["content_digest"] = digest_;
  text_ = canonical_json(document_);
}

AnalysisReport AnalysisReport::parse(std::string_view text, std::string_view source_name) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string(source_name), 1, e.byte == 0 ? 1 : e.byte,
                      std::string("invalid report JSON: ") + e.what());
  } catch (const json::exception& e) {
    throw SchemaError(std::string(source_name), 1, 1,
                      std::string("invalid report JSON: ") + e.what());
  }
  for (const char* key : {"config", "tool_version", "corpus_id", "content_digest"}) {
    if (!doc.is_object() || !doc.contains(key)) {
      throw SchemaError(std::string(source_name), 1, 1,
                        std::string("report lacks \"") + key + "\"");
    }
  }
  const json stored = doc["content_digest"];
  AnalysisReport report(std::move(doc));
  if (!stored.is_string() || stored.get<std::string>() != report.digest()) {
    throw SchemaError(std::string(source_name), 1, 1,
                      "content digest does not match the report body");
  }
  return report;
}

AnalysisReport full_report(const Corpus& corpus, const AnalysisConfig& config,
                           const VocabularySet& vocab, Parallelism parallelism) {
  config.validate();
  const Parallelism par = parallelism;
  const std::vector<std::function<json()>> sections = {
      [&] { return summary_section(corpus); },
      [&] { return unigram_section(corpus, config, vocab, par); },
      [&] { return crosstab_section(corpus, config, vocab, par); },
      [&] { return transitions_section(corpus, config, vocab, par); },
      [&] { return gaps_section(corpus, config, vocab, par); },
      [&] { return multiview_section(corpus, vocab, par); },
      [&] { return lexical_section(corpus, config, vocab, par); },
  };
  static const char* const kNames[] = {"summary",  "unigram",   "crosstab", "transitions",
                                       "gaps",     "multiview", "lexical"};
  std::vector<json> results = run_tasks<json>(sections, parallelism);

  json doc;
  doc["corpus_id"] = corpus.corpus_id;
  doc["tool_version"] = std::string(kToolVersion);
  doc["config"] = config.to_json();
  doc["notes"] = notes();
  for (std::size_t i = 0; i < results.size(); ++i) doc[kNames[i]] = std::move(results[i]);
  return AnalysisReport(std::move(doc));
}

// ---------------------------------------------------------------------------
// compare

namespace {

struct Leaf {
  json value;
  std::string key;
};

std::string element_key(const json& element, std::size_t index) {
  if (element.is_object()) {
    if (element.contains("label") && element["label"].is_string()) {
      return element["label"].get<std::string>();
    }
    if (element.contains("from") && element.contains("to")) {
      return element["from"].get<std::string>() + "->" + element["to"].get<std::string>();
    }
    if (element.contains("from")) return element["from"].get<std::string>();
    if (element.contains("talk_move")) return element["talk_move"].get<std::string>();
    if (element.contains("gap_length")) return "n=" + element["gap_length"].dump();
  }
  return "#" + std::to_string(index);
}

void flatten(const json& v, const std::string& path, const std::string& key,
             std::map<std::string, Leaf>& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      flatten(it.value(), path.empty() ? it.key() : path + "/" + it.key(), it.key(), out);
    }
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      flatten(v[i], path + "/" + element_key(v[i], i), key, out);
    }
  } else if (v.is_number()) {
    out[path] = {v, key};
  }
}

bool is_fraction_key(std::string_view key) {
  return key.ends_with("share") || key.ends_with("probability") || key.ends_with("coverage");
}

std::map<std::string, Leaf> statistics_of(const AnalysisReport& report) {
  json body = report.document();
  for (const char* skip : {"config", "content_digest", "tool_version", "corpus_id", "notes"}) {
    body.erase(skip);
  }
  std::map<std::string, Leaf> leaves;
  flatten(body, "", "", leaves);
  return leaves;
}

std::int64_t scaled(const json& v) {
  std::int64_t out = 0;
  if (v.is_number_float()) {
    parse_scaled_decimal(format_fixed(v.get<double>(), kReportFractionDigits),
                         kReportFractionDigits, out);
  } else if (v.is_number_unsigned()) {
    out = static_cast<std::int64_t>(v.get<std::uint64_t>());
  } else {
    out = v.get<std::int64_t>();
  }
  return out;
}

double as_double(const json& v) { return v.get<double>(); }

}  // namespace

DeltaReport compare(const AnalysisReport& a, const AnalysisReport& b) {
  const json& da = a.document();
  const json& db = b.document();
  if (da.value("tool_version", json()) != db.value("tool_version", json())) {
    throw ConfigMismatchError("reports come from different tool versions");
  }
  if (da.value("config", json()) != db.value("config", json())) {
    throw ConfigMismatchError("reports were produced with different configurations");
  }
  DeltaReport out;
  out.corpus_a = da.value("corpus_id", "");
  out.corpus_b = db.value("corpus_id", "");

  const auto la = statistics_of(a);
  const auto lb = statistics_of(b);
  for (const auto& [path, leaf] : la) {
    const auto it = lb.find(path);
    if (it == lb.end()) {
      out.one_sided.push_back({path, "a", as_double(leaf.value)});
      continue;
    }
    const Leaf& other = it->second;
    DeltaEntry entry;
    entry.path = path;
    entry.value_a = as_double(leaf.value);
    entry.value_b = as_double(other.value);
    const bool floating = leaf.value.is_number_float() || other.value.is_number_float();
    if (!floating) {
      entry.unit = "count";
      entry.difference = static_cast<double>(scaled(other.value) - scaled(leaf.value));
    } else {
      json va = leaf.value, vb = other.value;
      if (!va.is_number_float()) va = as_double(va);
      if (!vb.is_number_float()) vb = as_double(vb);
      const std::int64_t diff = scaled(vb) - scaled(va);  // units of 1e-6
      if (is_fraction_key(leaf.key)) {
        entry.unit = "points";
        // x100 turns 1e-6 fraction units into 1e-4 percentage points.
        entry.difference = std::stod(format_scaled_decimal(diff, kReportFractionDigits - 2));
      } else {
        entry.unit = "raw";
        entry.difference = std::stod(format_scaled_decimal(diff, kReportFractionDigits));
      }
    }
    out.deltas.push_back(std::move(entry));
  }
  for (const auto& [path, leaf] : lb) {
    if (!la.contains(path)) out.one_sided.push_back({path, "b", as_double(leaf.value)});
  }
  std::sort(out.one_sided.begin(), out.one_sided.end(),
            [](const OneSidedEntry& x, const OneSidedEntry& y) { return x.path < y.path; });
  return out;
}

json DeltaReport::to_json() const {
  json deltas_json = json::array();
  for (const auto& d : deltas) {
    json entry = {{"path", d.path}, {"unit", d.unit}};
    if (d.unit == "count") {
      entry["value_a"] = static_cast<std::int64_t>(d.value_a);
      entry["value_b"] = static_cast<std::int64_t>(d.value_b);
      entry["difference"] = static_cast<std::int64_t>(d.difference);
    } else {
      entry["value_a"] = d.value_a;
      entry["value_b"] = d.value_b;
      entry["difference"] = d.difference;
    }
    deltas_json.push_back(std::move(entry));
  }
  json one_sided_json = json::array();
  for (const auto& o : one_sided) {
    one_sided_json.push_back({{"path", o.path}, {"present_in", o.present_in}, {"value", o.value}});
  }
  return {{"corpus_a", corpus_a},
          {"corpus_b", corpus_b},
          {"deltas", std::move(deltas_json)},
          {"one_sided", std::move(one_sided_json)}};
}

std::string DeltaReport::text() const { return canonical_json(to_json()); }

// ---------------------------------------------------------------------------
// Summary

namespace {

std::string percent(const json& share) { return format_fixed(share.get<double>() * 100.0, 1) + "%"; }

}  // namespace

std::string render_summary(const AnalysisReport& report) {
  const json& d = report.document();
  std::ostringstream out;
  out << "corpus " << d["corpus_id"].get<std::string>() << " (" << d["tool_version"].get<std::string>()
      << ")\n";
  out << "digest " << report.digest() << "\n";
  const json& s = d["summary"];
  out << "sessions " << s["sessions"] << ", utterances " << s["utterances"] << " (teacher "
      << s["teacher_utterances"] << ", student " << s["student_utterances"] << "), edges "
      << s["edges"] << "\n\n";

  const json& tm = d["unigram"]["talk_moves"];
  out << "talk moves (share of all utterances):\n";
  for (const auto& e : tm["all"]["entries"]) {
    if (e["count"].get<std::uint64_t>() == 0) continue;
    out << "  " << e["label"].get<std::string>() << "  " << percent(e["share"]) << "  ("
        << e["count"] << ")\n";
  }
  out << "  non-talk-move utterances: " << percent(tm["none_share"]) << "\n\n";

  out << "dialogue acts (display rows):\n";
  for (const auto& e : d["unigram"]["dialogue_acts"]["display"]) {
    out << "  " << e["label"].get<std::string>() << "  " << percent(e["share"]) << "\n";
  }

  out << "\ntop dialogue acts per talk move:\n";
  for (const auto& row : d["crosstab"]["rows"]) {
    const json& top = row["top_k"];
    if (top["labels"].empty()) continue;
    out << "  " << row["talk_move"].get<std::string>() << ": ";
    bool first = true;
    for (const auto& label : top["labels"]) {
      if (!first) out << ", ";
      first = false;
      out << label.get<std::string>();
      for (const auto& e : row["acts"]["entries"]) {
        if (e["label"] == label) out << " " << percent(e["share"]);
      }
    }
    out << "  [coverage " << percent(top["achieved_coverage"])
        << (top["target_met"].get<bool>() ? ", target met]" : ", below target]") << "\n";
  }

  const json& filtered = d["transitions"]["filtered_direct"];
  out << "\ntransitions at or above " << percent(filtered["threshold"]) << ":\n";
  for (const auto& e : filtered["edges"]) {
    out << "  " << e["from"].get<std::string>() << " -> " << e["to"].get<std::string>() << "  "
        << percent(e["probability"]) << "  (to " << e["receiver_role"].get<std::string>() << ")\n";
  }

  out << "\nintervening T-None gap values (x100):\n";
  for (const auto& c : d["gaps"]["cells"]) {
    out << "  " << c["from"].get<std::string>() << " -> " << c["to"].get<std::string>() << "  "
        << format_fixed(c["value"].get<double>(), 2) << "  (" << c["retained_instances"]
        << " retained)\n";
  }
  return out.str();
}

}  // namespace discourse_lens
