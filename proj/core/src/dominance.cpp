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

#include "baccara/dominance.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "baccara/errors.hpp"

namespace baccara {

char mark_symbol(Mark m) {
  switch (m) {
    case Mark::Draw:
      return 'D';
    case Mark::Stand:
      return 'S';
    case Mark::Contested:
      return '*';
  }
  return '?';
}

ClassificationTable::ClassificationTable(DealModel deal, InfoModel info,
                                         const std::vector<DecisionPoint>& points,
                                         std::vector<Mark> marks)
    : deal_(deal), info_(info), points_(&points), marks_(std::move(marks)) {
  if (marks_.size() != points_->size()) throw std::invalid_argument("mark count mismatch");
}

Mark ClassificationTable::mark(const DecisionPoint& point) const {
  for (std::size_t i = 0; i < points_->size(); ++i) {
    if ((*points_)[i] == point) return marks_[i];
  }
  throw std::out_of_range("point " + point.to_string() + " not classified");
}

std::size_t ClassificationTable::contested_count() const {
  return static_cast<std::size_t>(std::count(marks_.begin(), marks_.end(), Mark::Contested));
}

ClassificationTable classify(const PayoffBlocks& blocks, const std::vector<std::size_t>& rows) {
  if (rows.empty()) throw std::invalid_argument("classification needs at least one row");
  std::vector<Mark> marks(blocks.point_count());
  for (std::size_t l = 0; l < blocks.point_count(); ++l) {
    bool all_draw = true;
    bool all_stand = true;
    for (std::size_t r : rows) {
      const int s = sgn(blocks.at(r, l).b());
      if (s == 0) {
        throw TieError(blocks.points()[l].to_string(),
                       "row " + std::to_string(blocks.rows()[r].bits()) + " is indifferent");
      }
      if (s < 0) all_stand = false;
      if (s > 0) all_draw = false;
    }
    marks[l] = all_draw ? Mark::Draw : all_stand ? Mark::Stand : Mark::Contested;
  }
  return ClassificationTable(blocks.deal(), blocks.info(), blocks.points(), std::move(marks));
}

ClassificationTable classify(const PayoffBlocks& blocks) {
  std::vector<std::size_t> rows(blocks.row_count());
  std::iota(rows.begin(), rows.end(), 0);
  return classify(blocks, rows);
}

std::vector<std::size_t> contested_indices(const ClassificationTable& table) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < table.marks().size(); ++i) {
    if (table.mark(i) == Mark::Contested) out.push_back(i);
  }
  const auto& points = table.points();
  std::stable_sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
    return contested_less(points[a], points[b]);
  });
  return out;
}

std::vector<DecisionPoint> contested_points(const ClassificationTable& table) {
  std::vector<DecisionPoint> out;
  for (std::size_t i : contested_indices(table)) out.push_back(table.points()[i]);
  return out;
}

ReducedGame::ReducedGame(const PayoffBlocks& blocks, const ClassificationTable& table)
    : blocks_(&blocks) {
  if (&table.points() != &blocks.points() || !(table.deal() == blocks.deal())) {
    throw std::invalid_argument("classification and blocks come from different models");
  }
  free_ = contested_indices(table);
  forced_.assign(blocks.point_count(), Move::Stand);
  for (std::size_t l = 0; l < blocks.point_count(); ++l) {
    if (table.mark(l) == Mark::Draw) forced_[l] = Move::Draw;
  }
  const std::size_t rows = blocks.row_count();
  constant_.assign(rows, Rational(0));
  e_stand_.assign(rows, std::vector<Rational>(free_.size()));
  e_draw_.assign(rows, std::vector<Rational>(free_.size()));
  std::vector<bool> is_free(blocks.point_count(), false);
  for (std::size_t i : free_) is_free[i] = true;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t l = 0; l < blocks.point_count(); ++l) {
      if (!is_free[l]) constant_[r] += blocks.at(r, l).weighted(forced_[l]);
    }
    for (std::size_t i = 0; i < free_.size(); ++i) {
      const BlockEntry& e = blocks.at(r, free_[i]);
      e_stand_[r][i] = e.prob * e.ev_stand;
      e_draw_[r][i] = e.prob * e.ev_draw;
    }
  }
}

Rational ReducedGame::entry(std::size_t row, const std::vector<bool>& draws) const {
  if (draws.size() != free_.size()) throw std::invalid_argument("column size mismatch");
  Rational sum = constant_[row];
  for (std::size_t i = 0; i < free_.size(); ++i) sum += draws[i] ? e_draw_[row][i] : e_stand_[row][i];
  return sum;
}

MoveTable ReducedGame::expand(const std::vector<bool>& draws) const {
  if (draws.size() != free_.size()) throw std::invalid_argument("column size mismatch");
  MoveTable table = forced_;
  for (std::size_t i = 0; i < free_.size(); ++i) table[free_[i]] = draws[i] ? Move::Draw : Move::Stand;
  return table;
}

std::vector<bool> ReducedGame::restrict(const MoveTable& table) const {
  if (table.size() != forced_.size()) throw std::invalid_argument("move table size mismatch");
  std::vector<bool> is_free(forced_.size(), false);
  std::vector<bool> out(free_.size());
  for (std::size_t i = 0; i < free_.size(); ++i) {
    is_free[free_[i]] = true;
    out[i] = table[free_[i]] == Move::Draw;
  }
  for (std::size_t l = 0; l < forced_.size(); ++l) {
    if (!is_free[l] && table[l] != forced_[l]) {
      throw std::invalid_argument("move table departs from the forced move at " +
                                  blocks_->points()[l].to_string());
    }
  }
  return out;
}

TwoRowGame ReducedGame::two_row(std::size_t row0, std::size_t row1) const {
  TwoRowGame g;
  g.e0 = constant_.at(row0);
  g.e1 = constant_.at(row1);
  g.points.reserve(free_.size());
  for (std::size_t i = 0; i < free_.size(); ++i) {
    g.points.push_back({e_stand_[row0][i], e_draw_[row0][i], e_stand_[row1][i], e_draw_[row1][i]});
    g.labels.push_back(free_point(i).to_string());
  }
  return g;
}

ReducedGame reduce_game(const PayoffBlocks& blocks, const ClassificationTable& table) {
  return ReducedGame(blocks, table);
}

std::string column_bits(const std::vector<bool>& draws) {
  std::string out;
  out.reserve(draws.size());
  for (bool b : draws) out.push_back(b ? '1' : '0');
  return out;
}

std::uint64_t column_number(const std::vector<bool>& draws) {
  if (draws.size() > 63) throw std::invalid_argument("column label too wide");
  std::uint64_t n = 0;
  for (bool b : draws) n = (n << 1) | (b ? 1u : 0u);
  return n;
}

}  // namespace baccara
