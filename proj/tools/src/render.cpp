// Copyright 2026 The Baccara Solver Authors
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

#include "baccara_cli/render.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace baccara::cli {
namespace {

using Row = std::array<std::string, kThirdCardSlots>;

struct Line {
  std::string total;
  std::string hand;
  Row cells;
};

std::string header(bool with_hand) {
  std::ostringstream out;
  out << "| total |" << (with_hand ? " hand |" : "");
  for (int k = 0; k < 10; ++k) out << ' ' << k << " |";
  out << " ∅ |\n|---|" << (with_hand ? "---|" : "");
  for (int k = 0; k < kThirdCardSlots; ++k) out << "---|";
  out << '\n';
  return out.str();
}

std::string render(const std::vector<Line>& lines, bool with_hand) {
  std::ostringstream out;
  out << header(with_hand);
  for (const auto& l : lines) {
    out << "| " << l.total << " |";
    if (with_hand) out << ' ' << l.hand << " |";
    for (const auto& c : l.cells) out << ' ' << c << " |";
    out << '\n';
  }
  return out.str();
}

// Rows keyed by (total, hand label) in point order.
std::vector<std::pair<int, std::pair<std::string, Row>>> collect_rows(
    const std::vector<DecisionPoint>& points, const CellMap& cells) {
  std::vector<std::pair<int, std::pair<std::string, Row>>> rows;
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const DecisionPoint& p = points[i];
    const std::string key = p.hand ? p.hand->to_string() : std::to_string(p.total);
    auto it = seen.find(key);
    if (it == seen.end()) {
      it = seen.emplace(key, rows.size()).first;
      rows.push_back({p.total, {p.hand ? key : std::string(), Row{}}});
    }
    rows[it->second].second.second[p.obs.slot()] = cells[i];
  }
  return rows;
}

// Appends rows for the totals in [lo, hi], collapsing them to one unlabeled
// row when all rows agree.
void append_group(std::vector<Line>& lines,
                  const std::vector<std::pair<int, std::pair<std::string, Row>>>& rows, int lo,
                  int hi, bool collapse) {
  std::vector<const std::pair<int, std::pair<std::string, Row>>*> members;
  for (const auto& r : rows) {
    if (r.first >= lo && r.first <= hi) members.push_back(&r);
  }
  if (members.empty()) return;
  bool uniform = collapse;
  for (const auto* m : members) uniform = uniform && m->second.second == members.front()->second.second;
  if (uniform) {
    std::string label;
    for (int t = lo; t <= hi; ++t) label += (t == lo ? "" : ",") + std::to_string(t);
    lines.push_back({label, "", members.front()->second.second});
    return;
  }
  for (const auto* m : members) lines.push_back({std::to_string(m->first), m->second.first, m->second.second});
}

}  // namespace

std::string classification_grid(const std::vector<DecisionPoint>& points, const CellMap& cells) {
  const bool hands = !points.empty() && points.front().hand.has_value();
  const auto rows = collect_rows(points, cells);
  std::vector<Line> lines;
  append_group(lines, rows, 0, 2, true);
  for (int t = 3; t <= 6; ++t) append_group(lines, rows, t, t, !hands);
  append_group(lines, rows, 7, 7, true);
  return render(lines, hands);
}

std::string banker_grid(const std::vector<DecisionPoint>& points, const CellMap& cells) {
  // Per (total, slot): hands grouped by cell.
  std::map<std::pair<int, int>, std::vector<std::pair<std::string, std::string>>> by_cell;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const DecisionPoint& p = points[i];
    by_cell[{p.total, p.obs.slot()}].push_back({p.hand ? p.hand->to_string() : "", cells[i]});
  }

  std::vector<std::string> notes;
  std::vector<std::pair<int, Row>> totals;
  for (int t = 0; t <= 7; ++t) {
    Row row;
    for (int k = 0; k < kThirdCardSlots; ++k) {
      const auto& entries = by_cell[{t, k}];
      bool uniform = true;
      for (const auto& e : entries) uniform = uniform && e.second == entries.front().second;
      if (uniform) {
        row[k] = entries.front().second;
        continue;
      }
      std::vector<std::pair<std::string, std::string>> groups;  // move -> hands
      for (const auto& e : entries) {
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return g.first == e.second; });
        if (it == groups.end()) {
          groups.push_back({e.second, e.first});
        } else {
          it->second += "," + e.first;
        }
      }
      std::ostringstream note;
      note << '[' << notes.size() + 1 << "] total " << t << ", Player "
           << (k == 10 ? std::string("stands") : "third card " + std::to_string(k)) << ':';
      for (std::size_t g = 0; g < groups.size(); ++g) {
        note << (g ? ";" : "") << ' ' << groups[g].first << " on " << groups[g].second;
      }
      notes.push_back(note.str());
      row[k] = "[" + std::to_string(notes.size()) + "]";
    }
    totals.push_back({t, row});
  }

  std::vector<Line> lines;
  const bool low_uniform = totals[0].second == totals[1].second && totals[1].second == totals[2].second;
  for (const auto& [t, row] : totals) {
    if (t <= 2 && low_uniform) {
      if (t == 0) lines.push_back({"0,1,2", "", row});
      continue;
    }
    lines.push_back({std::to_string(t), "", row});
  }
  std::string out = render(lines, false);
  if (!notes.empty()) {
    out += '\n';
    for (const auto& n : notes) out += n + "\n";
  }
  return out;
}

CellMap banker_cells(const GameSolution& solution) {
  CellMap out;
  const std::size_t n = solution.banker.front().table.size();
  for (std::size_t i = 0; i < n; ++i) {
    bool draw = false;
    bool stand = false;
    for (const auto& c : solution.banker) {
      (c.table[i] == Move::Draw ? draw : stand) = true;
    }
    out.push_back(draw && stand ? "(S,D)" : (draw ? "D" : "S"));
  }
  return out;
}

CellMap classification_cells(const ClassificationTable& table) {
  CellMap out;
  for (Mark m : table.marks()) out.push_back(m == Mark::Contested ? "*" : std::string(1, mark_symbol(m)));
  return out;
}

std::vector<std::pair<std::string, std::string>> player_moves(const GameSolution& solution) {
  auto move_of = [](const Rational& p) -> std::string {
    if (p == 0) return "S";
    if (p == 1) return "D";
    return "(S,D)";
  };
  std::vector<std::pair<std::string, std::string>> rows;
  if (solution.info != InfoModel::FullComposition) {
    rows.push_back({"total 5", move_of(player_draw_probability(solution, 0))});
    return rows;
  }
  const auto hands = free_player_hands();
  for (int pos = 0; pos < 5; ++pos) {
    const std::string move = move_of(player_draw_probability(solution, pos));
    auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return r.second == move; });
    if (it == rows.end()) {
      rows.push_back({hands[pos].to_string(), move});
    } else {
      it->first += "," + hands[pos].to_string();
    }
  }
  return rows;
}

std::string describe_point(const DecisionPoint& point) {
  const std::string who = point.hand ? point.hand->to_string() : "total " + std::to_string(point.total);
  if (point.obs.is_stand()) return who + " on Player stand";
  return who + " on Player third card " + std::to_string(point.obs.card().value());
}

}  // namespace baccara::cli
