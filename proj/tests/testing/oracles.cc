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

#include "oracles.h"

namespace discourse_lens::testing {
namespace {

bool only_tnone_between(const std::vector<Utterance>& u, std::size_t i, std::size_t j) {
  for (std::size_t k = i + 1; k < j; ++k) {
    if (u[k].talk_move.str() != "T-None") return false;
  }
  return true;
}

bool none_label(const std::string& m) { return m == "T-None" || m == "S-None"; }

}  // namespace

std::map<std::size_t, std::uint64_t> brute_gap_histogram(const Corpus& corpus,
                                                         const std::string& first,
                                                         const std::string& second) {
  std::map<std::size_t, std::uint64_t> out;
  for (const Session& s : corpus.sessions) {
    const auto& u = s.utterances;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i].talk_move.str() != first) continue;
      for (std::size_t j = i + 1; j < u.size(); ++j) {
        if (!only_tnone_between(u, i, j)) break;  // holds for no larger j either
        if (u[j].talk_move.str() == second) ++out[j - i - 1];
      }
    }
  }
  return out;
}

std::map<std::pair<std::string, std::string>, std::map<std::size_t, std::uint64_t>>
brute_all_gap_histograms(const Corpus& corpus) {
  std::map<std::pair<std::string, std::string>, std::map<std::size_t, std::uint64_t>> out;
  for (const Session& s : corpus.sessions) {
    const auto& u = s.utterances;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (none_label(u[i].talk_move.str())) continue;
      for (std::size_t j = i + 1; j < u.size(); ++j) {
        if (!only_tnone_between(u, i, j)) break;
        if (none_label(u[j].talk_move.str())) continue;
        ++out[{u[i].talk_move.str(), u[j].talk_move.str()}][j - i - 1];
      }
    }
  }
  return out;
}

BruteGap brute_gap_value(const std::map<std::size_t, std::uint64_t>& histogram,
                         double min_share) {
  std::uint64_t total = 0;
  for (const auto& [n, c] : histogram) total += c;
  std::uint64_t weighted = 0;
  BruteGap out;
  for (const auto& [n, c] : histogram) {
    if (static_cast<double>(c) / static_cast<double>(total) < min_share) continue;
    weighted += n * c;
    out.retained += c;
  }
  if (out.retained > 0) {
    out.value = 100.0 * static_cast<double>(weighted) / static_cast<double>(out.retained);
  }
  return out;
}

PairCounts brute_direct_counts(const Corpus& corpus) {
  PairCounts out;
  for (const Session& s : corpus.sessions) {
    for (std::size_t i = 1; i < s.utterances.size(); ++i) {
      ++out[{s.utterances[i - 1].talk_move.str(), s.utterances[i].talk_move.str()}];
    }
  }
  return out;
}

Corpus delete_none(const Corpus& corpus) {
  Corpus out;
  out.corpus_id = corpus.corpus_id;
  for (const Session& s : corpus.sessions) {
    Session t;
    t.session_id = s.session_id;
    t.domain = s.domain;
    for (const Utterance& u : s.utterances) {
      const std::string& m = u.talk_move.str();
      if (m == "T-None" || m == "S-None") continue;
      Utterance v = u;
      v.index = t.utterances.size();
      t.utterances.push_back(v);
    }
    out.sessions.push_back(t);
  }
  return out;
}

std::uint64_t brute_triple_count(const Corpus& corpus, const std::string& first,
                                 const std::string& second) {
  std::uint64_t n = 0;
  for (const Session& s : corpus.sessions) {
    const auto& u = s.utterances;
    for (std::size_t i = 0; i + 2 < u.size(); ++i) {
      if (u[i].talk_move.str() == first && u[i + 1].talk_move.str() == "T-None" &&
          u[i + 2].talk_move.str() == second) {
        ++n;
      }
    }
  }
  return n;
}

std::map<std::string, std::uint64_t> brute_move_counts(const Corpus& corpus) {
  std::map<std::string, std::uint64_t> out;
  for (const Session& s : corpus.sessions) {
    for (const Utterance& u : s.utterances) ++out[u.talk_move.str()];
  }
  return out;
}

std::map<std::string, std::uint64_t> brute_act_counts(const Corpus& corpus) {
  std::map<std::string, std::uint64_t> out;
  for (const Session& s : corpus.sessions) {
    for (const Utterance& u : s.utterances) ++out[u.dialogue_act.str()];
  }
  return out;
}

}  // namespace discourse_lens::testing
