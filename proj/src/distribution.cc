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

#include "discourse_lens/distribution.h"

#include <algorithm>
#include <numeric>

namespace discourse_lens {

Distribution Distribution::from_counts(const CountMap& counts,
                                       const std::vector<std::string>& universe) {
  CountMap merged = counts;
  for (const auto& label : universe) merged.try_emplace(label, 0);

  std::vector<std::pair<std::string, std::uint64_t>> entries(merged.begin(), merged.end());
  // std::map iteration is lexicographic, so a stable sort by count keeps ties
  // in label order.
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });

  Distribution d;
  for (const auto& [label, count] : entries) d.total += count;
  d.labels.reserve(entries.size());
  d.counts.reserve(entries.size());
  d.shares.reserve(entries.size());
  for (auto& [label, count] : entries) {
    d.labels.push_back(label);
    d.counts.push_back(count);
    d.shares.push_back(d.total == 0 ? 0.0
                                    : static_cast<double>(count) / static_cast<double>(d.total));
  }
  return d;
}

std::uint64_t Distribution::count_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return counts[i];
  }
  return 0;
}

double Distribution::share_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return shares[i];
  }
  return 0.0;
}

}  // namespace discourse_lens
