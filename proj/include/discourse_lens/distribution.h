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

#ifndef DISCOURSE_LENS_DISTRIBUTION_H_
#define DISCOURSE_LENS_DISTRIBUTION_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace discourse_lens {

using CountMap = std::map<std::string, std::uint64_t>;

// Integer counts over labels with their shares. Entries are sorted by count
// descending, ties broken lexicographically. A zero total gives zero shares.
struct Distribution {
  std::vector<std::string> labels;
  std::vector<std::uint64_t> counts;
  std::vector<double> shares;
  std::uint64_t total = 0;

  // `universe` labels appear with a zero count when unobserved.
  static Distribution from_counts(const CountMap& counts,
                                  const std::vector<std::string>& universe = {});

  std::size_t size() const { return labels.size(); }
  bool empty() const { return total == 0; }
  std::uint64_t count_of(std::string_view label) const;
  double share_of(std::string_view label) const;

  friend bool operator==(const Distribution&, const Distribution&) = default;
};

}  // namespace discourse_lens

#endif  // DISCOURSE_LENS_DISTRIBUTION_H_
