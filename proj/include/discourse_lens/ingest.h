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

// Corpus file formats.
//
// JSONL: one session per line, keys in this order when written:
//
//   {"session_id": str, "domain": "teaching"|"tutoring"|"other",
//    "utterances": [{"idx": int, "speaker": "teacher"|"student",
//                    "speaker_id": str (optional), "text": str,
//                    "talk_move": str, "dialogue_act": str}],
//    "discourse_edges": [{"source": int, "target": int, "relation": str}]}
//
// CSV: a directory holding `utterances.csv`
//   session_id,idx,speaker,speaker_id,text,talk_move,dialogue_act
// and optionally `edges.csv`
//   session_id,source,target,relation
// with RFC-4180 quoting. CSV has no domain column, so a CSV corpus carries a
// single domain supplied by the caller, and sessions without utterances
// cannot be represented.
//
// Written output is canonical: LF line endings, sessions in corpus order,
// utterances by index, edges sorted by (source, target, relation), quoting
// only where RFC-4180 requires it. An empty speaker_id is read as absent.
// Label fields are trimmed of surrounding whitespace and matched
// case-sensitively. The speaker value "tutor" is accepted as "teacher".

#ifndef DISCOURSE_LENS_INGEST_H_
#define DISCOURSE_LENS_INGEST_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "discourse_lens/corpus.h"
#include "discourse_lens/labels.h"
#include "discourse_lens/validation.h"

namespace discourse_lens {

enum class CorpusFormat { kJsonl, kCsv };

std::optional<CorpusFormat> parse_format(std::string_view name);

inline constexpr std::string_view kUtterancesCsvName = "utterances.csv";
inline constexpr std::string_view kEdgesCsvName = "edges.csv";

struct CorpusSource {
  CorpusFormat format = CorpusFormat::kJsonl;
  // JSONL files, or for CSV either directories or paths to utterances.csv.
  std::vector<std::filesystem::path> paths;
  Strictness strictness = Strictness::kLenient;
  // Defaults to the sorted file stems joined by '+', so the id does not
  // depend on the order paths are listed in.
  std::optional<std::string> corpus_id;
  DomainTag csv_domain = DomainTag::kOther;
  unsigned threads = 1;
};

struct ParseResult {
  Corpus corpus;
  ValidationReport report;
};

// Reads every path (in parallel when threads > 1) and merges sessions in path
// order. Throws IoError, SchemaError, and in strict mode LabelError or
// ValidationFailed; a throw never leaves a partial corpus behind.
ParseResult parse_corpus(const CorpusSource& source,
                         const VocabularySet& vocab = VocabularySet::defaults());

ParseResult parse_jsonl(std::string_view text, Strictness strictness,
                        const VocabularySet& vocab = VocabularySet::defaults(),
                        std::string_view source_name = "<memory>",
                        std::string corpus_id = "");

ParseResult parse_csv(std::string_view utterances_csv, std::string_view edges_csv,
                      DomainTag domain, Strictness strictness,
                      const VocabularySet& vocab = VocabularySet::defaults(),
                      std::string_view source_name = "<memory>",
                      std::string corpus_id = "");

std::string serialize_jsonl(const Corpus& corpus);

struct CsvText {
  std::string utterances;
  std::string edges;
};
CsvText serialize_csv(const Corpus& corpus);

struct SerializedFile {
  std::string name;
  std::string bytes;
};

// "corpus.jsonl" for JSONL; "utterances.csv" and "edges.csv" for CSV.
std::vector<SerializedFile> serialize_corpus(const Corpus& corpus, CorpusFormat format);

std::string default_corpus_id(const std::vector<std::filesystem::path>& paths);

}  // namespace discourse_lens

#endif  // DISCOURSE_LENS_INGEST_H_
