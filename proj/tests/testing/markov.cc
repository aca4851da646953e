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

#include "markov.h"

#include <cmath>

namespace discourse_lens::testing {

MarkovChain shift_chain(const std::vector<double>& weights) {
  static const std::size_t kShifts[] = {1, 5, 7};
  MarkovChain chain;
  chain.labels = VocabularySet::defaults().talk_moves.labels();
  const std::size_t n = chain.labels.size();
  chain.p.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t from = 0; from < n; ++from) {
    for (std::size_t k = 0; k < weights.size() && k < 3; ++k) {
      chain.p[from][(from + kShifts[k]) % n] += weights[k];
    }
  }
  return chain;
}

MarkovChain recovery_chain() { return shift_chain({0.975, 0.015, 0.01}); }

Corpus sample_chain(Rng& rng, const MarkovChain& chain, std::size_t n) {
  std::vector<std::discrete_distribution<std::size_t>> rows;
  for (const auto& row : chain.p) rows.emplace_back(row.begin(), row.end());
  std::vector<std::string> moves;
  moves.reserve(n);
  std::size_t state = uniform(rng, 0, chain.labels.size() - 1);
  for (std::size_t i = 0; i < n; ++i) {
    moves.push_back(chain.labels[state]);
    state = rows[state](rng);
  }
  Corpus c;
  c.corpus_id = "markov";
  c.sessions.push_back(make_session("chain", moves));
  return c;
}

std::vector<double> row_l1_errors(const MarkovChain& chain, const TransitionMatrix& estimate) {
  std::vector<double> out;
  for (std::size_t f = 0; f < chain.labels.size(); ++f) {
    const std::size_t ef = *estimate.index_of(chain.labels[f]);
    double err = 0.0;
    for (std::size_t t = 0; t < chain.labels.size(); ++t) {
      const std::size_t et = *estimate.index_of(chain.labels[t]);
      err += std::fabs(estimate.probability(ef, et) - chain.p[f][t]);
    }
    out.push_back(err);
  }
  return out;
}

}  // namespace discourse_lens::testing
