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

#include "discourse_lens/render.h"

#include <algorithm>
#include <set>
#include <tuple>

#include "discourse_lens/format.h"

namespace discourse_lens {

std::string_view dot_grouping_name(DotGrouping grouping) {
  switch (grouping) {
    case DotGrouping::kToTeacher: return "to_teacher";
    case DotGrouping::kToStudent: return "to_student";
    case DotGrouping::kAll: return "all";
  }
  return "all";
}

namespace {

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

bool keep(const TransitionEdge& e, DotGrouping grouping) {
  switch (grouping) {
    case DotGrouping::kToTeacher: return e.receiver_role == SpeakerRole::kTeacher;
    case DotGrouping::kToStudent: return e.receiver_role == SpeakerRole::kStudent;
    case DotGrouping::kAll: return true;
  }
  return true;
}

double penwidth(double probability, double threshold) {
  if (threshold >= 1.0) return 5.0;
  const double t = std::clamp((probability - threshold) / (1.0 - threshold), 0.0, 1.0);
  return 1.0 + 4.0 * t;
}

}  // namespace

std::string emit_dot(const FilteredTransitions& transitions, DotGrouping grouping) {
  std::vector<TransitionEdge> edges;
  for (const auto& e : transitions.edges) {
    if (keep(e, grouping)) edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end(), [](const TransitionEdge& a, const TransitionEdge& b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
  });
  std::set<std::string> nodes;
  for (const auto& e : edges) {
    nodes.insert(e.from);
    nodes.insert(e.to);
  }

  std::string out = "digraph transitions {\n";
  out += "  rankdir=LR;\n";
  out += "  node [shape=ellipse];\n";
  for (const auto& node : nodes) {
    const auto role = implied_role(node);
    out += "  " + dot_quote(node) + " [color=" +
           (role == SpeakerRole::kStudent ? "\"blue\"" : "\"darkcyan\"") + "];\n";
  }
  for (const auto& e : edges) {
    out += "  " + dot_quote(e.from) + " -> " + dot_quote(e.to) + " [label=\"" +
           format_fixed(e.probability * 100.0, 0) + "%\", penwidth=" +
           format_fixed(penwidth(e.probability, transitions.threshold), 4) + "];\n";
  }
  out += "}\n";
  return out;
}

HeatmapTable heatmap_table(const GapMatrix& matrix) {
  HeatmapTable table;
  table.row_labels = matrix.labels();
  table.column_labels = matrix.labels();
  const std::size_t n = matrix.labels().size();
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t t = 0; t < n; ++t) {
      const auto& cell = matrix.cell(f, t);
      table.cells.push_back(cell ? std::optional<double>(cell->statistic.value) : std::nullopt);
    }
  }
  return table;
}

HeatmapTable heatmap_table(const TransitionMatrix& matrix) {
  HeatmapTable table;
  table.row_labels = matrix.labels();
  table.column_labels = matrix.labels();
  const std::size_t n = matrix.size();
  for (std::size_t f = 0; f < n; ++f) {
    const bool has_row = matrix.row_total(f) > 0;
    for (std::size_t t = 0; t < n; ++t) {
      table.cells.push_back(has_row ? std::optional<double>(matrix.probability(f, t))
                                    : std::nullopt);
    }
  }
  return table;
}

std::string emit_heatmap_csv(const HeatmapTable& table) {
  std::string out = "from";
  for (const auto& label : table.column_labels) out += "," + label;
  out += "\n";
  const std::size_t cols = table.column_labels.size();
  for (std::size_t r = 0; r < table.row_labels.size(); ++r) {
    out += table.row_labels[r];
    for (std::size_t c = 0; c < cols; ++c) {
      out += ",";
      if (const auto& v = table.cells[r * cols + c]) out += format_fixed(*v, 4);
    }
    out += "\n";
  }
  return out;
}

std::string emit_gaps_csv(const GapMatrix& matrix) {
  std::string out = "from,to,value,retained_instances\n";
  const auto& labels = matrix.labels();
  for (std::size_t f = 0; f < labels.size(); ++f) {
    for (std::size_t t = 0; t < labels.size(); ++t) {
      const auto& cell = matrix.cell(f, t);
      if (!cell) continue;
      out += labels[f] + "," + labels[t] + "," + format_fixed(cell->statistic.value, 4) + "," +
             std::to_string(cell->statistic.retained_instances) + "\n";
    }
  }
  return out;
}

nlohmann::json transitions_json(const FilteredTransitions& transitions) {
  nlohmann::json doc;
  doc["mode"] = std::string(transition_mode_name(transitions.mode));
  doc["threshold"] = transitions.threshold;
  doc["edges"] = nlohmann::json::array();
  for (const auto& e : transitions.edges) {
    doc["edges"].push_back({{"from", e.from},
                            {"to", e.to},
                            {"count", e.count},
                            {"probability", e.probability},
                            {"receiver_role", std::string(role_name(e.receiver_role))}});
  }
  return doc;
}

}  // namespace discourse_lens
