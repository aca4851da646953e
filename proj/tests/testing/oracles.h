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

// Brute-force reference implementations. Deliberately naive and written
// without reuse of the library's scanning code.

#ifndef DISCOURSE_LENS_TESTING_ORACLES_H_
#define DISCOURSE_LENS_TESTING_ORACLES_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "discourse_lens/corpus.h"

namespace discourse_lens::testing {

using PairCounts = std::map<std::pair<std::string, std::string>, std::uint64_t>;

// gap length -> instance count, by trying every (i, j) position pair.
std::map<std::size_t, std::uint64_t> brute_gap_histogram(const Corpus& corpus,
                                                         const std::string& first,
                                                         const std::string& second);

// Histograms of every non-None pair in one pass over all (i, j) pairs.
std::map<std::pair<std::string, std::string>, std::map<std::size_t, std::uint64_t>>
brute_all_gap_histograms(const Corpus& corpus);

struct BruteGap {
  double value = 0.0;
  std::uint64_t retained = 0;
};
BruteGap brute_gap_value(const std::map<std::size_t, std::uint64_t>& histogram,
                         double min_share);

// Consecutive talk-move pairs within sessions.
PairCounts brute_direct_counts(const Corpus& corpus);

// Copy of `corpus` with T-None and S-None utterances removed and indices
// renumbered; edges are dropped.
Corpus delete_none(const Corpus& corpus);

// Occurrences of first, T-None, second.
std::uint64_t brute_triple_count(const Corpus& corpus, const std::string& first,
                                 const std::string& second);

// Unnormalized label tallies.
std::map<std::string, std::uint64_t> brute_move_counts(const Corpus& corpus);
std::map<std::string, std::uint64_t> brute_act_counts(const Corpus& corpus);

}  // namespace discourse_lens::testing

#endif  // DISCOURSE_LENS_TESTING_ORACLES_H_
