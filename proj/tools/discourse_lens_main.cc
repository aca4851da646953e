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

// discourse-lens command-line entry point.
//
// Exit codes: 0 success, 1 data or validation error, 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "discourse_lens/corpus.h"
#include "discourse_lens/error.h"
#include "discourse_lens/format.h"
#include "discourse_lens/ingest.h"
#include "discourse_lens/labels.h"
#include "discourse_lens/multiview.h"
#include "discourse_lens/render.h"
#include "discourse_lens/report.h"
#include "discourse_lens/sequence.h"
#include "discourse_lens/unigram.h"
#include "discourse_lens/validation.h"

namespace dl = discourse_lens;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

// Raised for bad flag combinations discovered after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  unsigned threads = 1;
  bool strict = false;
  std::string format = "jsonl";
  std::vector<std::string> inputs;
  std::optional<std::string> corpus_id;
  std::string domain = "other";
  std::optional<std::string> talkmove_vocab;
  std::optional<std::string> da_vocab;
  std::optional<std::string> relation_vocab;
  std::string out;
  dl::AnalysisConfig config;
  bool include_continuation = false;
};

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::cout << bytes;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw dl::IoError("cannot write " + path);
  out << bytes;
  if (!out) throw dl::IoError("error while writing " + path);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dl::IoError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void print_violations(const dl::ValidationReport& report, std::ostream& out) {
  for (const auto& v : report.violations) {
    out << dl::severity_name(v.severity) << " " << v.code << " " << v.location << ": " << v.message
        << "\n";
  }
}

dl::VocabularySet load_vocab(const GlobalOptions& g) {
  auto opt_path = [](const std::optional<std::string>& s) -> std::optional<fs::path> {
    if (!s) return std::nullopt;
    return fs::path(*s);
  };
  return dl::VocabularySet::load(opt_path(g.talkmove_vocab), opt_path(g.da_vocab),
                                 opt_path(g.relation_vocab));
}

dl::CorpusSource make_source(const GlobalOptions& g) {
  dl::CorpusSource source;
  const auto format = dl::parse_format(g.format);
  if (!format) throw UsageError("unknown --format " + g.format);
  const auto domain = dl::parse_domain(g.domain);
  if (!domain) throw UsageError("unknown --domain " + g.domain);
  if (g.inputs.empty()) throw UsageError("no input corpus given (use --in)");
  source.format = *format;
  source.csv_domain = *domain;
  source.strictness = g.strict ? dl::Strictness::kStrict : dl::Strictness::kLenient;
  source.corpus_id = g.corpus_id;
  source.threads = g.threads;
  for (const auto& p : g.inputs) source.paths.emplace_back(p);
  return source;
}

// Parses the corpus for an analysis command. Warnings go to stderr; any
// error-level violation stops the run.
dl::Corpus load_corpus(const GlobalOptions& g, const dl::VocabularySet& vocab) {
  dl::ParseResult parsed = dl::parse_corpus(make_source(g), vocab);
  print_violations(parsed.report, std::cerr);
  if (parsed.report.has_errors()) throw dl::ValidationFailed(parsed.report);
  return std::move(parsed.corpus);
}

dl::Parallelism parallelism(const GlobalOptions& g) { return {std::max(1u, g.threads)}; }

dl::TalkMove checked_move(const std::string& label, const dl::VocabularySet& vocab) {
  if (!vocab.talk_moves.contains(label)) throw UsageError("unknown talk move " + label);
  return dl::TalkMove(label);
}

std::pair<dl::TalkMove, dl::TalkMove> parse_pair(const std::string& text,
                                                 const dl::VocabularySet& vocab) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--pair expects FROM,TO");
  return {checked_move(text.substr(0, comma), vocab), checked_move(text.substr(comma + 1), vocab)};
}

json distribution_json(const dl::Distribution& d) {
  json entries = json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    entries.push_back({{"label", d.labels[i]}, {"count", d.counts[i]}, {"share", d.shares[i]}});
  }
  return {{"total", d.total}, {"entries", std::move(entries)}};
}

json bigram_json(const dl::BigramInstance& b) {
  json out = {{"session_id", b.session_id},
              {"first_index", b.first_index},
              {"second_index", b.second_index}};
  if (b.relation) out["relation"] = b.relation->str();
  return out;
}

json utterance_json(const dl::Utterance& u) {
  json out = {{"idx", u.index},
              {"speaker", std::string(dl::role_name(u.speaker))},
              {"text", u.text},
              {"talk_move", u.talk_move.str()},
              {"dialogue_act", u.dialogue_act.str()}};
  if (u.speaker_id) out["speaker_id"] = *u.speaker_id;
  return out;
}

// ---------------------------------------------------------------------------
// Subcommands

int run_validate(const GlobalOptions& g) {
  const dl::VocabularySet vocab = load_vocab(g);
  dl::ParseResult parsed;
  try {
    parsed = dl::parse_corpus(make_source(g), vocab);
  } catch (const dl::ValidationFailed& e) {
    parsed.report = e.report();
  }
  std::ostringstream text;
  print_violations(parsed.report, text);
  text << parsed.report.error_count() << " error(s), " << parsed.report.warning_count()
       << " warning(s)";
  if (!parsed.report.has_errors()) {
    text << "; " << parsed.corpus.sessions.size() << " session(s), "
         << parsed.corpus.utterance_count() << " utterance(s)";
  }
  text << "\n";
  write_output(g.out, text.str());
  return parsed.report.has_errors() ? kExitData : 0;
}

struct UnigramOptions {
  std::string view = "talkmove";
  std::optional<std::string> role;
  std::optional<std::size_t> top_k;
  std::optional<double> coverage;
};

int run_unigram(const GlobalOptions& g, const UnigramOptions& u) {
  const dl::VocabularySet vocab = load_vocab(g);
  std::optional<dl::SpeakerRole> role;
  if (u.role) {
    if (*u.role == "teacher") {
      role = dl::SpeakerRole::kTeacher;
    } else if (*u.role == "student") {
      role = dl::SpeakerRole::kStudent;
    } else {
      throw UsageError("--role expects teacher or student");
    }
  }
  const dl::Corpus corpus = load_corpus(g, vocab);
  json doc = {{"corpus_id", corpus.corpus_id}, {"view", u.view}};
  if (u.view == "talkmove") {
    doc["distribution"] = distribution_json(dl::talk_move_distribution(corpus, role, vocab,
                                                                       parallelism(g)));
    if (role) doc["role"] = std::string(dl::role_name(*role));
  } else if (u.view == "da") {
    const auto d = dl::dialogue_act_distribution(corpus, g.config.da_display_min_share, vocab,
                                                 parallelism(g));
    json display = json::array();
    for (const auto& row : d.display) {
      display.push_back({{"label", row.label}, {"count", row.count}, {"share", row.share}});
    }
    doc["distribution"] = distribution_json(d.distribution);
    doc["min_share_display"] = d.min_share_display;
    doc["display"] = std::move(display);
  } else if (u.view == "crosstab") {
    const bool exclude = g.config.exclude_continuation_in_crosstab && !g.include_continuation;
    const auto tab = dl::crosstab_talkmove_dialogueact(corpus, exclude, vocab, parallelism(g));
    json rows = json::array();
    for (const auto& row : tab.rows) {
      const bool none = dl::is_none(row.talk_move);
      const std::size_t k =
          u.top_k.value_or(none ? g.config.topk_none_das : g.config.topk_talkmove_das);
      const double target = u.coverage.value_or(g.config.coverage_targets[none ? 1 : 0]);
      const auto sel = dl::top_k_with_coverage(row.acts, k, target);
      rows.push_back({{"talk_move", row.talk_move.str()},
                      {"acts", distribution_json(row.acts)},
                      {"top_k",
                       {{"k", k},
                        {"coverage_target", target},
                        {"labels", sel.labels},
                        {"achieved_coverage", sel.achieved_coverage},
                        {"target_met", sel.target_met}}}});
    }
    doc["continuation_excluded"] = tab.continuation_excluded;
    doc["rows"] = std::move(rows);
  } else {
    throw UsageError("--view expects talkmove, da or crosstab");
  }
  write_output(g.out, dl::canonical_json(doc));
  return 0;
}

int run_transitions(const GlobalOptions& g, bool collapse_none) {
  const dl::VocabularySet vocab = load_vocab(g);
  const dl::Corpus corpus = load_corpus(g, vocab);
  const auto matrix = dl::transition_counts(corpus, collapse_none, vocab, parallelism(g));
  json doc = dl::transitions_json(dl::filter_transitions(matrix, g.config.transition_threshold));
  doc["corpus_id"] = corpus.corpus_id;
  write_output(g.out, dl::canonical_json(doc));
  return 0;
}

int run_gaps(const GlobalOptions& g) {
  const dl::VocabularySet vocab = load_vocab(g);
  const dl::Corpus corpus = load_corpus(g, vocab);
  const auto matrix = dl::gap_matrix(corpus, g.config.gap_min_share, vocab, parallelism(g));
  write_output(g.out, dl::emit_gaps_csv(matrix));
  return 0;
}

int run_multiview(const GlobalOptions& g, const std::string& pair_text) {
  const dl::VocabularySet vocab = load_vocab(g);
  const auto [first, second] = parse_pair(pair_text, vocab);
  const dl::Corpus corpus = load_corpus(g, vocab);
  const auto par = parallelism(g);
  const auto rel = dl::bigram_relation_distribution(corpus, first, second, par);
  json doc = {{"corpus_id", corpus.corpus_id},
              {"from", first.str()},
              {"to", second.str()},
              {"bigram_instances", rel.instances},
              {"relations", distribution_json(rel.distribution)},
              {"from_to_tnone_acts",
               distribution_json(dl::talkmove_to_none_da_distribution(corpus, first, par))}};
  if (!dl::is_none(first) && !dl::is_none(second)) {
    doc["tnone_triple_acts"] =
        distribution_json(dl::triple_none_da_distribution(corpus, first, second, par));
  }
  write_output(g.out, dl::canonical_json(doc));
  return 0;
}

int run_lexical(const GlobalOptions& g, const std::string& pair_text,
                const std::string& position_text) {
  const dl::VocabularySet vocab = load_vocab(g);
  const auto [first, second] = parse_pair(pair_text, vocab);
  const auto position = dl::parse_marker_position(position_text);
  if (!position) throw UsageError("--position expects leading or any");
  const dl::Corpus corpus = load_corpus(g, vocab);
  const auto result = dl::lexical_marker_share(corpus, first, second, g.config.markers, *position);
  json matches = json::array();
  for (const auto& m : result.matches) matches.push_back(bigram_json(m));
  json doc = {{"corpus_id", corpus.corpus_id},
              {"from", first.str()},
              {"to", second.str()},
              {"markers", g.config.markers},
              {"position", std::string(dl::marker_position_name(*position))},
              {"population", result.population},
              {"share", result.share},
              {"matches", std::move(matches)}};
  write_output(g.out, dl::canonical_json(doc));
  return 0;
}

int run_examples(const GlobalOptions& g, const std::string& pattern_text, std::size_t limit,
                 std::size_t context) {
  const dl::VocabularySet vocab = load_vocab(g);
  const auto pattern = dl::parse_instance_pattern(pattern_text);
  const dl::Corpus corpus = load_corpus(g, vocab);
  json excerpts = json::array();
  for (const auto& ex : dl::extract_instances(corpus, pattern, limit, context)) {
    json utterances = json::array();
    for (const auto& u : ex.utterances) utterances.push_back(utterance_json(u));
    json edges = json::array();
    for (const auto& e : ex.edges) {
      edges.push_back({{"source", e.source}, {"target", e.target}, {"relation", e.relation.str()}});
    }
    excerpts.push_back({{"session_id", ex.session_id},
                        {"match", {ex.match_begin, ex.match_end}},
                        {"span", {ex.span_begin, ex.span_end}},
                        {"utterances", std::move(utterances)},
                        {"edges", std::move(edges)}});
  }
  json doc = {{"corpus_id", corpus.corpus_id},
              {"pattern", pattern_text},
              {"excerpts", std::move(excerpts)}};
  write_output(g.out, dl::canonical_json(doc));
  return 0;
}

struct ReportOptions {
  std::string dot_dir;
  std::string heatmaps_dir;
  std::string summary_path;
};

void write_file(const fs::path& dir, const std::string& name, const std::string& bytes) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw dl::IoError("cannot create directory " + dir.string() + ": " + ec.message());
  write_output((dir / name).string(), bytes);
}

int run_report(const GlobalOptions& g, const ReportOptions& r) {
  const dl::VocabularySet vocab = load_vocab(g);
  const dl::Corpus corpus = load_corpus(g, vocab);
  const auto par = parallelism(g);
  const dl::AnalysisReport report = dl::full_report(corpus, g.config, vocab, par);
  write_output(g.out, report.text());

  if (!r.dot_dir.empty() || !r.heatmaps_dir.empty()) {
    const auto direct = dl::transition_counts(corpus, false, vocab, par);
    const auto collapsed = dl::transition_counts(corpus, true, vocab, par);
    if (!r.dot_dir.empty()) {
      const auto fd = dl::filter_transitions(direct, g.config.transition_threshold);
      const auto fc = dl::filter_transitions(collapsed, g.config.transition_threshold);
      for (auto grouping :
           {dl::DotGrouping::kToTeacher, dl::DotGrouping::kToStudent, dl::DotGrouping::kAll}) {
        const std::string suffix = std::string(dl::dot_grouping_name(grouping)) + ".dot";
        write_file(r.dot_dir, "direct_" + suffix, dl::emit_dot(fd, grouping));
        write_file(r.dot_dir, "collapsed_" + suffix, dl::emit_dot(fc, grouping));
      }
    }
    if (!r.heatmaps_dir.empty()) {
      const auto gaps = dl::gap_matrix(corpus, g.config.gap_min_share, vocab, par);
      write_file(r.heatmaps_dir, "gaps.csv", dl::emit_heatmap_csv(gaps));
      write_file(r.heatmaps_dir, "transitions_direct.csv", dl::emit_heatmap_csv(direct));
      write_file(r.heatmaps_dir, "transitions_collapsed.csv", dl::emit_heatmap_csv(collapsed));
    }
  }
  if (!r.summary_path.empty()) write_output(r.summary_path, dl::render_summary(report));
  return 0;
}

int run_compare(const GlobalOptions& g, const std::string& a_path, const std::string& b_path) {
  const auto a = dl::AnalysisReport::parse(read_text(a_path), a_path);
  const auto b = dl::AnalysisReport::parse(read_text(b_path), b_path);
  write_output(g.out, dl::compare(a, b).text());
  return 0;
}

int run_summary(const GlobalOptions& g, const std::string& path) {
  write_output(g.out, dl::render_summary(dl::AnalysisReport::parse(read_text(path), path)));
  return 0;
}

void add_input_options(CLI::App& cmd, GlobalOptions& g) {
  cmd.add_option("--in,inputs", g.inputs,
                 "Corpus files (jsonl) or directories / utterances.csv paths (csv)");
  cmd.add_option("--out", g.out, "Output path (default: stdout)");
}

void add_global_options(CLI::App& app, GlobalOptions& g) {
  auto& c = g.config;
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.add_flag("--strict", g.strict, "Reject unknown labels and crossing edges");
  app.add_option("--format", g.format, "Corpus format: jsonl or csv");
  app.add_option("--corpus-id", g.corpus_id, "Corpus identifier for reports");
  app.add_option("--domain", g.domain, "Domain for csv corpora: teaching, tutoring or other");
  app.add_option("--talkmove-vocab", g.talkmove_vocab, "Talk-move label file");
  app.add_option("--da-vocab", g.da_vocab, "Dialogue-act label file");
  app.add_option("--relation-vocab", g.relation_vocab, "Discourse-relation label file");
  app.add_option("--threshold,--transition-threshold", c.transition_threshold,
                 "Minimum transition probability kept");
  app.add_option("--min-share,--gap-min-share", c.gap_min_share,
                 "Gap lengths below this share of a pair's instances are dropped");
  app.add_option("--topk-talkmove-das", c.topk_talkmove_das, "Top-k dialogue acts per talk move");
  app.add_option("--topk-none-das", c.topk_none_das, "Top-k dialogue acts per None move");
  app.add_option("--coverage-targets", c.coverage_targets,
                 "Coverage targets for talk moves and None moves")
      ->expected(2);
  app.add_option("--da-display-min-share", c.da_display_min_share,
                 "Dialogue acts below this share are grouped in the display");
  app.add_flag("--include-continuation", g.include_continuation,
               "Keep continuation acts in the talk-move x dialogue-act cross-tab");
  app.add_option("--markers", c.markers, "Lexical markers")->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discourse analytics over talk-move, dialogue-act and relation annotations",
               "discourse-lens"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  add_global_options(app, g);

  auto* validate = app.add_subcommand("validate", "Check a corpus against the schema");
  add_input_options(*validate, g);

  UnigramOptions uopt;
  bool exclude_continuation = false;
  auto* unigram = app.add_subcommand("unigram", "Talk-move and dialogue-act distributions");
  add_input_options(*unigram, g);
  unigram->add_option("--view", uopt.view, "talkmove, da or crosstab");
  unigram->add_option("--role", uopt.role, "teacher or student");
  unigram->add_flag("--exclude-continuation", exclude_continuation,
                    "Drop continuation acts from the cross-tab (default)");
  unigram->add_option("--top-k", uopt.top_k, "k for every cross-tab row")
      ->check(CLI::PositiveNumber);
  unigram->add_option("--coverage", uopt.coverage, "Coverage target for every cross-tab row");

  bool collapse_none = false;
  auto* transitions = app.add_subcommand("transitions", "Filtered bigram transitions");
  add_input_options(*transitions, g);
  transitions->add_flag("--collapse-none", collapse_none, "Delete None utterances first");

  auto* gaps = app.add_subcommand("gaps", "Intervening T-None gap statistics as CSV");
  add_input_options(*gaps, g);

  std::string pair;
  auto* multiview = app.add_subcommand("multiview", "Relation and dialogue-act joins for a pair");
  add_input_options(*multiview, g);
  multiview->add_option("--pair", pair, "FROM,TO talk moves")->required();

  std::string position = "leading";
  auto* lexical = app.add_subcommand("lexical", "Lexical marker share for a pair");
  add_input_options(*lexical, g);
  lexical->add_option("--pair", pair, "FROM,TO talk moves")->required();
  lexical->add_option("--position", position, "leading or any");

  std::string pattern;
  std::size_t limit = 10;
  std::size_t context = 1;
  auto* examples = app.add_subcommand("examples", "Excerpts matching a pattern");
  add_input_options(*examples, g);
  examples->add_option("--pattern", pattern,
                       "bigram:A,B, triple:A,B or move_with_act:TM,DA")
      ->required();
  examples->add_option("--limit", limit, "Maximum excerpts")->check(CLI::PositiveNumber);
  examples->add_option("--context", context, "Utterances of context on each side");

  ReportOptions ropt;
  auto* report = app.add_subcommand("report", "Full canonical analysis report");
  add_input_options(*report, g);
  report->add_option("--dot-dir", ropt.dot_dir, "Write Graphviz transition diagrams here");
  report->add_option("--heatmaps-dir", ropt.heatmaps_dir, "Write heatmap CSV tables here");
  report->add_option("--summary", ropt.summary_path, "Also write a human-readable summary");

  std::string a_path;
  std::string b_path;
  auto* compare = app.add_subcommand("compare", "Per-statistic deltas between two reports");
  compare->add_option("a", a_path, "Baseline report")->required();
  compare->add_option("b", b_path, "Other report")->required();
  compare->add_option("--out", g.out, "Output path (default: stdout)");

  std::string summary_in;
  auto* summary = app.add_subcommand("summary", "Human-readable digest of a report");
  summary->add_option("report", summary_in, "Report JSON")->required();
  summary->add_option("--out", g.out, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (exclude_continuation && g.include_continuation) {
      throw UsageError("--exclude-continuation conflicts with --include-continuation");
    }
    g.config.validate();
    if (*validate) return run_validate(g);
    if (*unigram) return run_unigram(g, uopt);
    if (*transitions) return run_transitions(g, collapse_none);
    if (*gaps) return run_gaps(g);
    if (*multiview) return run_multiview(g, pair);
    if (*lexical) return run_lexical(g, pair, position);
    if (*examples) return run_examples(g, pattern, limit, context);
    if (*report) return run_report(g, ropt);
    if (*compare) return run_compare(g, a_path, b_path);
    if (*summary) return run_summary(g, summary_in);
  } catch (const UsageError& e) {
    std::cerr << "discourse-lens: " << e.what() << "\n";
    return kExitUsage;
  } catch (const dl::ConfigError& e) {
    std::cerr << "discourse-lens: invalid configuration: " << e.what() << "\n";
    return kExitUsage;
  } catch (const dl::InvalidPairError& e) {
    std::cerr << "discourse-lens: " << e.what() << "\n";
    return kExitUsage;
  } catch (const dl::ValidationFailed& e) {
    print_violations(e.report(), std::cerr);
    std::cerr << "discourse-lens: corpus failed validation\n";
    return kExitData;
  } catch (const dl::Error& e) {
    std::cerr << "discourse-lens: " << dl::error_code_name(e.code()) << ": " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
