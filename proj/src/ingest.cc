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

#include "discourse_lens/ingest.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "csv.h"
#include "discourse_lens/error.h"
#include "discourse_lens/parallel.h"
#include "json.hpp"
#include "text_util.h"

namespace discourse_lens {

using nlohmann::json;

std::optional<CorpusFormat> parse_format(std::string_view name) {
  if (name == "jsonl") return CorpusFormat::kJsonl;
  if (name == "csv") return CorpusFormat::kCsv;
  return std::nullopt;
}

namespace {

struct ParsedPart {
  std::vector<Session> sessions;
  ValidationReport report;
};

// Where a value came from, for error messages.
struct Where {
  std::string_view source;
  std::size_t line;
};

[[noreturn]] void schema_fail(const Where& at, const std::string& reason,
                              std::size_t column = 1) {
  throw SchemaError(std::string(at.source), at.line, column, reason);
}

std::optional<SpeakerRole> parse_speaker(std::string_view s) {
  if (s == "teacher" || s == "tutor") return SpeakerRole::kTeacher;
  if (s == "student") return SpeakerRole::kStudent;
  return std::nullopt;
}

std::optional<std::string> normalize_speaker_id(std::string id) {
  if (id.empty()) return std::nullopt;
  return id;
}

// Strict parsing rejects unknown labels outright.
void check_labels_strict(const Session& session, const std::vector<std::size_t>& utterance_lines,
                         const std::vector<std::size_t>& edge_lines, std::string_view source,
                         const VocabularySet& vocab) {
  for (std::size_t p = 0; p < session.utterances.size(); ++p) {
    const Utterance& u = session.utterances[p];
    if (!vocab.talk_moves.contains(u.talk_move.str())) {
      throw LabelError(std::string(source), utterance_lines[p], u.talk_move.str());
    }
    if (!vocab.dialogue_acts.contains(u.dialogue_act.str())) {
      throw LabelError(std::string(source), utterance_lines[p], u.dialogue_act.str());
    }
  }
  for (std::size_t e = 0; e < session.edges.size(); ++e) {
    if (!vocab.relations.contains(session.edges[e].relation.str())) {
      throw LabelError(std::string(source), edge_lines[e], session.edges[e].relation.str());
    }
  }
}

// Sorts utterances, rejects duplicate or missing indices, canonicalizes edges.
void finish_session_structure(Session& session, const std::vector<std::size_t>& lines,
                              std::string_view source,
                              std::vector<std::size_t>* sorted_lines) {
  std::vector<std::size_t> order(session.utterances.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return session.utterances[a].index < session.utterances[b].index;
  });
  std::vector<Utterance> sorted;
  sorted.reserve(order.size());
  sorted_lines->clear();
  for (std::size_t p = 0; p < order.size(); ++p) {
    const Utterance& u = session.utterances[order[p]];
    if (p > 0 && sorted.back().index == u.index) {
      schema_fail({source, lines[order[p]]}, "session \"" + session.session_id +
                                                 "\": duplicate utterance index " +
                                                 std::to_string(u.index));
    }
    sorted.push_back(u);
    sorted_lines->push_back(lines[order[p]]);
  }
  for (std::size_t p = 0; p < sorted.size(); ++p) {
    if (sorted[p].index != p) {
      schema_fail({source, (*sorted_lines)[p]},
                  "session \"" + session.session_id + "\": utterance indices must run 0.." +
                      std::to_string(sorted.size() - 1) + "; index " + std::to_string(p) +
                      " is missing");
    }
  }
  session.utterances = std::move(sorted);
}

// Validates one assembled session, applies lenient remapping, and appends the
// session to `part`.
void admit_session(Session session, const std::vector<std::size_t>& utterance_lines,
                   std::vector<std::size_t> edge_lines, std::string_view source,
                   Strictness strictness, const VocabularySet& vocab, ParsedPart& part) {
  std::vector<std::size_t> sorted_lines;
  finish_session_structure(session, utterance_lines, source, &sorted_lines);

  if (strictness == Strictness::kStrict) {
    check_labels_strict(session, sorted_lines, edge_lines, source, vocab);
  }
  std::sort(session.edges.begin(), session.edges.end());

  part.report.append(validate_session(session, strictness, vocab));
  if (strictness == Strictness::kLenient && vocab.dialogue_acts.contains(kOtherDialogueAct)) {
    for (Utterance& u : session.utterances) {
      if (!vocab.dialogue_acts.contains(u.dialogue_act.str())) {
        u.dialogue_act = DialogueAct(std::string(kOtherDialogueAct));
      }
    }
  }
  part.sessions.push_back(std::move(session));
}

// ---------------------------------------------------------------------------
// JSONL

const std::set<std::string, std::less<>> kSessionKeys = {"session_id", "domain", "utterances",
                                                         "discourse_edges"};
const std::set<std::string, std::less<>> kUtteranceKeys = {
    "idx", "speaker", "speaker_id", "text", "talk_move", "dialogue_act"};
const std::set<std::string, std::less<>> kEdgeKeys = {"source", "target", "relation"};

void check_keys(const json& obj, const std::set<std::string, std::less<>>& allowed,
                const std::string& path, const Where& at, Strictness strictness) {
  if (strictness != Strictness::kStrict) return;
  for (const auto& item : obj.items()) {
    if (!allowed.contains(item.key())) {
      schema_fail(at, path + ": unexpected key \"" + item.key() + "\"");
    }
  }
}

const json& require(const json& obj, const char* key, const std::string& path, const Where& at) {
  const auto it = obj.find(key);
  if (it == obj.end()) schema_fail(at, path + ": missing \"" + key + "\"");
  return *it;
}

std::string require_string(const json& obj, const char* key, const std::string& path,
                           const Where& at) {
  const json& v = require(obj, key, path, at);
  if (!v.is_string()) schema_fail(at, path + "." + key + ": expected a string");
  return v.get<std::string>();
}

std::size_t require_index(const json& obj, const char* key, const std::string& path,
                          const Where& at) {
  const json& v = require(obj, key, path, at);
  if (v.is_number_unsigned()) return v.get<std::size_t>();
  schema_fail(at, path + "." + key + ": expected a non-negative integer");
}

std::string label_field(const json& obj, const char* key, const std::string& path,
                        const Where& at) {
  return std::string(internal::trim(require_string(obj, key, path, at)));
}

void parse_jsonl_line(std::string_view line_text, const Where& at, Strictness strictness,
                      const VocabularySet& vocab, ParsedPart& part) {
  json doc;
  try {
    doc = json::parse(line_text);
  } catch (const json::parse_error& e) {
    const std::size_t column = e.byte == 0 ? 1 : e.byte;
    schema_fail(at, std::string("invalid JSON: ") + e.what(), column);
  } catch (const json::exception& e) {
    schema_fail(at, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_fail(at, "a session line must be a JSON object");
  check_keys(doc, kSessionKeys, "session", at, strictness);

  Session session;
  session.session_id = require_string(doc, "session_id", "session", at);
  if (session.session_id.empty()) schema_fail(at, "session.session_id: must not be empty");
  const std::string domain = require_string(doc, "domain", "session", at);
  const auto parsed_domain = parse_domain(domain);
  if (!parsed_domain) schema_fail(at, "session.domain: unknown domain \"" + domain + "\"");
  session.domain = *parsed_domain;

  const json& utterances = require(doc, "utterances", "session", at);
  if (!utterances.is_array()) schema_fail(at, "session.utterances: expected an array");
  for (std::size_t i = 0; i < utterances.size(); ++i) {
    const json& uj = utterances[i];
    const std::string path = "utterances[" + std::to_string(i) + "]";
    if (!uj.is_object()) schema_fail(at, path + ": expected an object");
    check_keys(uj, kUtteranceKeys, path, at, strictness);
    Utterance u;
    u.index = require_index(uj, "idx", path, at);
    const std::string speaker = require_string(uj, "speaker", path, at);
    const auto role = parse_speaker(speaker);
    if (!role) schema_fail(at, path + ".speaker: unknown speaker \"" + speaker + "\"");
    u.speaker = *role;
    if (const auto it = uj.find("speaker_id"); it != uj.end() && !it->is_null()) {
      if (!it->is_string()) schema_fail(at, path + ".speaker_id: expected a string");
      u.speaker_id = normalize_speaker_id(it->get<std::string>());
    }
    u.text = require_string(uj, "text", path, at);
    u.talk_move = TalkMove(label_field(uj, "talk_move", path, at));
    u.dialogue_act = DialogueAct(label_field(uj, "dialogue_act", path, at));
    session.utterances.push_back(std::move(u));
  }

  if (const auto it = doc.find("discourse_edges"); it != doc.end()) {
    if (!it->is_array()) schema_fail(at, "session.discourse_edges: expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& ej = (*it)[i];
      const std::string path = "discourse_edges[" + std::to_string(i) + "]";
      if (!ej.is_object()) schema_fail(at, path + ": expected an object");
      check_keys(ej, kEdgeKeys, path, at, strictness);
      DiscourseEdge e;
      e.source = require_index(ej, "source", path, at);
      e.target = require_index(ej, "target", path, at);
      e.relation = RelationLabel(label_field(ej, "relation", path, at));
      session.edges.push_back(std::move(e));
    }
  }

  const std::vector<std::size_t> utterance_lines(session.utterances.size(), at.line);
  std::vector<std::size_t> edge_lines(session.edges.size(), at.line);
  admit_session(std::move(session), utterance_lines, std::move(edge_lines), at.source,
                strictness, vocab, part);
}

ParsedPart parse_jsonl_part(std::string_view text, Strictness strictness,
                            const VocabularySet& vocab, std::string_view source) {
  ParsedPart part;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    ++line_no;
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                            : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (internal::trim(line).empty()) continue;
    parse_jsonl_line(line, {source, line_no}, strictness, vocab, part);
  }
  return part;
}

// ---------------------------------------------------------------------------
// CSV

constexpr std::string_view kUtteranceHeader[] = {"session_id", "idx",       "speaker",
                                                 "speaker_id", "text",      "talk_move",
                                                 "dialogue_act"};
constexpr std::string_view kEdgeHeader[] = {"session_id", "source", "target", "relation"};

template <std::size_t N>
void check_header(const internal::CsvRecord& record, const std::string_view (&expected)[N],
                  std::string_view source) {
  bool ok = record.fields.size() == N;
  for (std::size_t i = 0; ok && i < N; ++i) ok = record.fields[i] == expected[i];
  if (!ok) {
    std::string want;
    for (std::size_t i = 0; i < N; ++i) {
      if (i) want += ",";
      want += expected[i];
    }
    throw SchemaError(std::string(source), record.line, 1, "expected header \"" + want + "\"");
  }
}

std::string_view strip_bom(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  return text;
}

void require_utf8(std::string_view text, std::string_view source) {
  if (const auto bad = internal::first_invalid_utf8(text)) {
    const auto pos = internal::position_of(text, *bad);
    throw SchemaError(std::string(source), pos.line, pos.column, "invalid UTF-8");
  }
}

ParsedPart parse_csv_part(std::string_view utterances_csv, std::string_view edges_csv,
                          DomainTag domain, Strictness strictness, const VocabularySet& vocab,
                          std::string_view utterance_source, std::string_view edge_source) {
  utterances_csv = strip_bom(utterances_csv);
  edges_csv = strip_bom(edges_csv);
  require_utf8(utterances_csv, utterance_source);
  require_utf8(edges_csv, edge_source);

  struct Pending {
    Session session;
    std::vector<std::size_t> utterance_lines;
    std::vector<std::size_t> edge_lines;
  };
  std::vector<Pending> pending;
  std::map<std::string, std::size_t, std::less<>> by_id;

  const auto rows = internal::read_csv(utterances_csv, utterance_source);
  if (!rows.empty()) {
    check_header(rows.front(), kUtteranceHeader, utterance_source);
    for (std::size_t r = 1; r < rows.size(); ++r) {
      const auto& rec = rows[r];
      const Where at{utterance_source, rec.line};
      if (rec.fields.size() != 7) {
        schema_fail(at, "expected 7 fields, found " + std::to_string(rec.fields.size()));
      }
      const std::string& id = rec.fields[0];
      if (id.empty()) schema_fail(at, "session_id must not be empty");
      auto [it, inserted] = by_id.try_emplace(id, pending.size());
      if (inserted) {
        Pending p;
        p.session.session_id = id;
        p.session.domain = domain;
        pending.push_back(std::move(p));
      }
      Pending& target = pending[it->second];
      Utterance u;
      const auto idx = internal::parse_index(rec.fields[1]);
      if (!idx) schema_fail(at, "idx: expected a non-negative integer");
      u.index = *idx;
      const auto role = parse_speaker(rec.fields[2]);
      if (!role) schema_fail(at, "speaker: unknown speaker \"" + rec.fields[2] + "\"");
      u.speaker = *role;
      u.speaker_id = normalize_speaker_id(rec.fields[3]);
      u.text = rec.fields[4];
      u.talk_move = TalkMove(std::string(internal::trim(rec.fields[5])));
      u.dialogue_act = DialogueAct(std::string(internal::trim(rec.fields[6])));
      target.session.utterances.push_back(std::move(u));
      target.utterance_lines.push_back(rec.line);
    }
  }

  const auto edge_rows = internal::read_csv(edges_csv, edge_source);
  if (!edge_rows.empty()) {
    check_header(edge_rows.front(), kEdgeHeader, edge_source);
    for (std::size_t r = 1; r < edge_rows.size(); ++r) {
      const auto& rec = edge_rows[r];
      const Where at{edge_source, rec.line};
      if (rec.fields.size() != 4) {
        schema_fail(at, "expected 4 fields, found " + std::to_string(rec.fields.size()));
      }
      const auto it = by_id.find(rec.fields[0]);
      if (it == by_id.end()) {
        schema_fail(at, "edge refers to unknown session \"" + rec.fields[0] + "\"");
      }
      DiscourseEdge e;
      const auto source = internal::parse_index(rec.fields[1]);
      const auto target = internal::parse_index(rec.fields[2]);
      if (!source || !target) schema_fail(at, "source/target: expected non-negative integers");
      e.source = *source;
      e.target = *target;
      e.relation = RelationLabel(std::string(internal::trim(rec.fields[3])));
      pending[it->second].session.edges.push_back(std::move(e));
      pending[it->second].edge_lines.push_back(rec.line);
    }
  }

  ParsedPart part;
  for (Pending& p : pending) {
    // Edge lines follow the canonical edge order used by admit_session.
    std::vector<std::size_t> order(p.session.edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return p.session.edges[a] < p.session.edges[b];
    });
    std::vector<DiscourseEdge> edges;
    std::vector<std::size_t> lines;
    for (std::size_t i : order) {
      edges.push_back(p.session.edges[i]);
      lines.push_back(p.edge_lines[i]);
    }
    p.session.edges = std::move(edges);
    // Label errors in edges are reported against the edges file.
    if (strictness == Strictness::kStrict) {
      for (std::size_t e = 0; e < p.session.edges.size(); ++e) {
        if (!vocab.relations.contains(p.session.edges[e].relation.str())) {
          throw LabelError(std::string(edge_source), lines[e],
                           p.session.edges[e].relation.str());
        }
      }
    }
    admit_session(std::move(p.session), p.utterance_lines, std::move(lines), utterance_source,
                  strictness, vocab, part);
  }
  return part;
}

// ---------------------------------------------------------------------------

Corpus assemble(std::vector<ParsedPart> parts, ValidationReport& report, Strictness strictness,
                std::string corpus_id) {
  Corpus corpus;
  corpus.corpus_id = std::move(corpus_id);
  for (ParsedPart& part : parts) {
    report.append(part.report);
    for (Session& s : part.sessions) corpus.sessions.push_back(std::move(s));
  }
  std::set<std::string> ids;
  for (const Session& s : corpus.sessions) {
    if (!ids.insert(s.session_id).second) {
      report.violations.push_back({Severity::kError, std::string(codes::kDuplicateSessionId),
                                   s.session_id, "session id appears more than once"});
    }
  }
  if (strictness == Strictness::kStrict && report.has_errors()) {
    throw ValidationFailed(report);
  }
  return corpus;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error while reading " + path.string());
  return bytes;
}

struct CsvLocation {
  std::filesystem::path utterances;
  std::filesystem::path edges;
};

CsvLocation locate_csv(const std::filesystem::path& path) {
  std::error_code ec;
  const std::filesystem::path dir =
      std::filesystem::is_directory(path, ec) ? path : path.parent_path();
  CsvLocation loc;
  loc.utterances =
      std::filesystem::is_directory(path, ec) ? dir / kUtterancesCsvName : path;
  loc.edges = dir / kEdgesCsvName;
  return loc;
}

}  // namespace

ParseResult parse_jsonl(std::string_view text, Strictness strictness, const VocabularySet& vocab,
                        std::string_view source_name, std::string corpus_id) {
  std::vector<ParsedPart> parts;
  parts.push_back(parse_jsonl_part(text, strictness, vocab, source_name));
  ParseResult result;
  result.corpus = assemble(std::move(parts), result.report, strictness,
                           std::move(corpus_id));
  return result;
}

ParseResult parse_csv(std::string_view utterances_csv, std::string_view edges_csv,
                      DomainTag domain, Strictness strictness, const VocabularySet& vocab,
                      std::string_view source_name, std::string corpus_id) {
  const std::string utt_source = std::string(source_name) + "/" + std::string(kUtterancesCsvName);
  const std::string edge_source = std::string(source_name) + "/" + std::string(kEdgesCsvName);
  std::vector<ParsedPart> parts;
  parts.push_back(parse_csv_part(utterances_csv, edges_csv, domain, strictness, vocab,
                                 utt_source, edge_source));
  ParseResult result;
  result.corpus = assemble(std::move(parts), result.report, strictness,
                           std::move(corpus_id));
  return result;
}

ParseResult parse_corpus(const CorpusSource& source, const VocabularySet& vocab) {
  if (source.paths.empty()) throw IoError("no input paths given");

  std::vector<std::function<ParsedPart()>> tasks;
  for (const auto& path : source.paths) {
    tasks.push_back([&source, &vocab, path]() -> ParsedPart {
      if (source.format == CorpusFormat::kJsonl) {
        const std::string bytes = read_file(path);
        return parse_jsonl_part(bytes, source.strictness, vocab, path.string());
      }
      const CsvLocation loc = locate_csv(path);
      const std::string utterances = read_file(loc.utterances);
      std::string edges;
      std::error_code ec;
      if (std::filesystem::exists(loc.edges, ec)) edges = read_file(loc.edges);
      return parse_csv_part(utterances, edges, source.csv_domain, source.strictness, vocab,
                            loc.utterances.string(), loc.edges.string());
    });
  }
  const unsigned workers =
      std::min<unsigned>(std::max(1u, source.threads), static_cast<unsigned>(tasks.size()));
  auto parts = run_tasks<ParsedPart>(tasks, Parallelism{workers});

  ParseResult result;
  result.corpus = assemble(std::move(parts), result.report, source.strictness,
                           source.corpus_id.value_or(default_corpus_id(source.paths)));
  return result;
}

std::string default_corpus_id(const std::vector<std::filesystem::path>& paths) {
  std::vector<std::string> stems;
  for (const auto& p : paths) {
    std::filesystem::path q = p;
    if (q.filename() == kUtterancesCsvName) q = q.parent_path();
    if (!q.has_filename()) q = q.parent_path();
    stems.push_back(q.stem().string());
  }
  if (stems.empty()) return "corpus";
  std::sort(stems.begin(), stems.end());
  std::string id;
  for (const auto& s : stems) {
    if (!id.empty()) id += "+";
    id += s;
  }
  return id;
}

// ---------------------------------------------------------------------------
// Serialization

std::string serialize_jsonl(const Corpus& corpus) {
  std::string out;
  for (const Session& s : corpus.sessions) {
    nlohmann::ordered_json doc;
    doc["session_id"] = s.session_id;
    doc["domain"] = std::string(domain_name(s.domain));
    auto& utterances = doc["utterances"] = nlohmann::ordered_json::array();
    for (const Utterance& u : s.utterances) {
      nlohmann::ordered_json uj;
      uj["idx"] = u.index;
      uj["speaker"] = std::string(role_name(u.speaker));
      if (u.speaker_id) uj["speaker_id"] = *u.speaker_id;
      uj["text"] = u.text;
      uj["talk_move"] = u.talk_move.str();
      uj["dialogue_act"] = u.dialogue_act.str();
      utterances.push_back(std::move(uj));
    }
    std::vector<DiscourseEdge> edges = s.edges;
    std::sort(edges.begin(), edges.end());
    auto& edge_array = doc["discourse_edges"] = nlohmann::ordered_json::array();
    for (const DiscourseEdge& e : edges) {
      nlohmann::ordered_json ej;
      ej["source"] = e.source;
      ej["target"] = e.target;
      ej["relation"] = e.relation.str();
      edge_array.push_back(std::move(ej));
    }
    out += doc.dump(-1, ' ', false, nlohmann::ordered_json::error_handler_t::replace);
    out += '\n';
  }
  return out;
}

CsvText serialize_csv(const Corpus& corpus) {
  CsvText out;
  internal::append_csv_row(out.utterances, {kUtteranceHeader[0], kUtteranceHeader[1],
                                            kUtteranceHeader[2], kUtteranceHeader[3],
                                            kUtteranceHeader[4], kUtteranceHeader[5],
                                            kUtteranceHeader[6]});
  internal::append_csv_row(out.edges,
                           {kEdgeHeader[0], kEdgeHeader[1], kEdgeHeader[2], kEdgeHeader[3]});
  for (const Session& s : corpus.sessions) {
    for (const Utterance& u : s.utterances) {
      const std::string idx = std::to_string(u.index);
      internal::append_csv_row(out.utterances,
                               {s.session_id, idx, role_name(u.speaker),
                                u.speaker_id.value_or(""), u.text, u.talk_move.str(),
                                u.dialogue_act.str()});
    }
    std::vector<DiscourseEdge> edges = s.edges;
    std::sort(edges.begin(), edges.end());
    for (const DiscourseEdge& e : edges) {
      internal::append_csv_row(out.edges, {s.session_id, std::to_string(e.source),
                                           std::to_string(e.target), e.relation.str()});
    }
  }
  return out;
}

std::vector<SerializedFile> serialize_corpus(const Corpus& corpus, CorpusFormat format) {
  if (format == CorpusFormat::kJsonl) return {{"corpus.jsonl", serialize_jsonl(corpus)}};
  CsvText csv = serialize_csv(corpus);
  return {{std::string(kUtterancesCsvName), std::move(csv.utterances)},
          {std::string(kEdgesCsvName), std::move(csv.edges)}};
}

}  // namespace discourse_lens
