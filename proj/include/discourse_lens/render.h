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

// Text renderings handed to external plotting: Graphviz DOT transition
// diagrams and CSV heatmap tables.

#ifndef DISCOURSE_LENS_RENDER_H_
#define DISCOURSE_LENS_RENDER_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "discourse_lens/sequence.h"
#include "json.hpp"

namespace discourse_lens {

enum class DotGrouping { kToTeacher, kToStudent, kAll };

std::string_view dot_grouping_name(DotGrouping grouping);

// One digraph. Edge labels are percentages with no decimals; penwidth grows
// linearly from 1.0 at the threshold to 5.0 at probability 1.0.
std::string emit_dot(const FilteredTransitions& transitions, DotGrouping grouping);

struct HeatmapTable {
  std::vector<std::string> row_labels;
  std::vector<std::string> column_labels;
  std::vector<std::optional<double>> cells;  // row-major, nullopt = absent
};

// Gap values; absent pairs stay empty.
HeatmapTable heatmap_table(const GapMatrix& matrix);
// Transition probabilities; rows without outgoing transitions stay empty.
HeatmapTable heatmap_table(const TransitionMatrix& matrix);

// Header "from,<to labels...>", one row per `from` label, 4-decimal cells.
std::string emit_heatmap_csv(const HeatmapTable& table);
inline std::string emit_heatmap_csv(const GapMatrix& m) { return emit_heatmap_csv(heatmap_table(m)); }
inline std::string emit_heatmap_csv(const TransitionMatrix& m) {
  return emit_heatmap_csv(heatmap_table(m));
}

// "from,to,value,retained_instances" rows for present cells.
std::string emit_gaps_csv(const GapMatrix& matrix);

nlohmann::json transitions_json(const FilteredTransitions& transitions);

}  // namespace discourse_lens

#endif  // DISCOURSE_LENS_RENDER_H_
