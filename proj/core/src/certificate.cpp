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

#include <algorithm>
#include <functional>
#include <numeric>

#include "baccara/solver.hpp"

namespace baccara {

Rational banker_draw_probability(const GameSolution& s, std::size_t point) {
  Rational p = 0;
  for (const auto& c : s.banker) {
    if (c.table.at(point) == Move::Draw) p += c.weight;
  }
  return p;
}

Rational player_draw_probability(const GameSolution& s, int position) {
  Rational p = 0;
  for (const auto& c : s.player) {
    if (c.mask.draws_on(position)) p += c.weight;
  }
  return p;
}

CertificateReport certify(const GameSolution& solution, const PayoffBlocks& blocks,
                          const ClassificationTable& table, std::size_t max_failing_columns) {
  CertificateReport report;
  const Rational& v = solution.value;

  // Player side. Against a fixed Player mixture, Banker's best column picks
  // the cheaper move independently at every point.
  std::vector<std::pair<std::size_t, Rational>> player_rows;
  for (const auto& c : solution.player) player_rows.emplace_back(blocks.row_index(c.mask), c.weight);

  const auto contested = contested_indices(table);
  std::vector<Rational> deviation(contested.size());
  std::vector<bool> best_draw(contested.size());
  std::vector<std::size_t> contested_slot(blocks.point_count(), contested.size());
  for (std::size_t i = 0; i < contested.size(); ++i) contested_slot[contested[i]] = i;

  Rational best_total = 0;
  for (std::size_t l = 0; l < blocks.point_count(); ++l) {
    Rational stand = 0;
    Rational draw = 0;
    for (const auto& [r, w] : player_rows) {
      const BlockEntry& e = blocks.at(r, l);
      stand += w * e.prob * e.ev_stand;
      draw += w * e.prob * e.ev_draw;
    }
    const Mark m = table.mark(l);
    if (m == Mark::Draw) {
      best_total += draw;
    } else if (m == Mark::Stand) {
      best_total += stand;
    } else {
      const std::size_t i = contested_slot[l];
      best_draw[i] = draw < stand;
      best_total += best_draw[i] ? draw : stand;
      deviation[i] = abs(draw - stand);
    }
  }
  report.player_margin = best_total - v;
  report.player_side_ok = report.player_margin >= 0;

  if (!report.player_side_ok) {
    // Columns with best_total + sum(deviations taken) < v.
    const Rational slack = v - best_total;
    std::vector<std::size_t> order(contested.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return deviation[a] < deviation[b]; });
    constexpr std::size_t kCountCap = std::size_t{1} << 22;
    std::vector<bool> column = best_draw;
    std::function<void(std::size_t, const Rational&)> visit = [&](std::size_t k,
                                                                  const Rational& used) {
      if (report.failing_column_count >= kCountCap) {
        report.failing_columns_truncated = true;
        return;
      }
      if (k == order.size()) {
        ++report.failing_column_count;
        if (report.failing_columns.size() < max_failing_columns) {
          report.failing_columns.push_back(column);
        } else {
          report.failing_columns_truncated = true;
        }
        return;
      }
      visit(k + 1, used);
      const std::size_t i = order[k];
      const Rational next = used + deviation[i];
      if (next < slack) {
        column[i] = !column[i];
        visit(k + 1, next);
        column[i] = !column[i];
      }
    };
    visit(0, Rational(0));
    std::sort(report.failing_columns.begin(), report.failing_columns.end());
  }

  // Banker side: every Player row against the Banker mixture.
  bool first = true;
  for (std::size_t r = 0; r < blocks.row_count(); ++r) {
    Rational payoff = 0;
    for (const auto& c : solution.banker) payoff += c.weight * payoff_entry(blocks, r, c.table);
    const Rational margin = payoff - v;
    if (first || margin > report.banker_margin) report.banker_margin = margin;
    first = false;
    if (margin > 0) report.failing_rows.push_back(blocks.rows()[r]);
  }
  report.banker_side_ok = report.failing_rows.empty();
  return report;
}

}  // namespace baccara
