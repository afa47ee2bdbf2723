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

#ifndef BACCARA_DOMINANCE_HPP_
#define BACCARA_DOMINANCE_HPP_

// Strict dominance among Banker pure strategies. A decision point where
// drawing is better for Banker against every Player row is forced Draw, one
// where standing is better against every row is forced Stand, and the rest
// are contested. Only contested points survive into the reduced game.

#include <cstdint>
#include <string>
#include <vector>

#include "baccara/envelope.hpp"
#include "baccara/payoff.hpp"

namespace baccara {

enum class Mark { Draw, Stand, Contested };

char mark_symbol(Mark m);  // 'D', 'S', '*'

class ClassificationTable {
 public:
  ClassificationTable(DealModel deal, InfoModel info, const std::vector<DecisionPoint>& points,
                      std::vector<Mark> marks);

  const DealModel& deal() const { return deal_; }
  InfoModel info() const { return info_; }
  const std::vector<DecisionPoint>& points() const { return *points_; }
  const std::vector<Mark>& marks() const { return marks_; }
  Mark mark(std::size_t index) const { return marks_[index]; }
  Mark mark(const DecisionPoint& point) const;
  std::size_t contested_count() const;

  friend bool operator==(const ClassificationTable& a, const ClassificationTable& b) {
    return a.marks_ == b.marks_ && a.points_ == b.points_;
  }

 private:
  DealModel deal_;
  InfoModel info_;
  const std::vector<DecisionPoint>* points_;
  std::vector<Mark> marks_;
};

// Classifies every point against all rows of the blocks. Throws TieError
// if some row is exactly indifferent at some point.
ClassificationTable classify(const PayoffBlocks& blocks);

// Same, against a subset of the block rows (indices into blocks.rows()).
ClassificationTable classify(const PayoffBlocks& blocks, const std::vector<std::size_t>& rows);

// Indices of the contested points, ordered by total, then third card with ∅
// last, then hand.
std::vector<std::size_t> contested_indices(const ClassificationTable& table);
std::vector<DecisionPoint> contested_points(const ClassificationTable& table);

// The game left after fixing Banker's move at every non-contested point.
// Columns are subsets of the free points (the ones where Banker draws).
class ReducedGame {
 public:
  ReducedGame(const PayoffBlocks& blocks, const ClassificationTable& table);

  const PayoffBlocks& blocks() const { return *blocks_; }
  std::size_t row_count() const { return constant_.size(); }
  std::size_t free_count() const { return free_.size(); }
  // Indices into blocks().points(), in contested order.
  const std::vector<std::size_t>& free_points() const { return free_; }
  DecisionPoint free_point(std::size_t i) const { return blocks_->points()[free_[i]]; }

  // Contribution of all forced points to row r.
  const Rational& constant(std::size_t row) const { return constant_[row]; }
  const Rational& e_stand(std::size_t row, std::size_t i) const { return e_stand_[row][i]; }
  const Rational& e_draw(std::size_t row, std::size_t i) const { return e_draw_[row][i]; }

  // Payoff of a row against the column drawing exactly on `draws` (one flag
  // per free point).
  Rational entry(std::size_t row, const std::vector<bool>& draws) const;

  // Full move table over blocks().points() for a column.
  MoveTable expand(const std::vector<bool>& draws) const;
  // Inverse of expand; throws std::invalid_argument if the table disagrees
  // with a forced move.
  std::vector<bool> restrict(const MoveTable& table) const;

  // 2 x 2^n game on two of the rows.
  TwoRowGame two_row(std::size_t row0, std::size_t row1) const;

 private:
  const PayoffBlocks* blocks_;
  MoveTable forced_;
  std::vector<std::size_t> free_;
  std::vector<Rational> constant_;
  std::vector<std::vector<Rational>> e_stand_;
  std::vector<std::vector<Rational>> e_draw_;
};

ReducedGame reduce_game(const PayoffBlocks& blocks, const ClassificationTable& table);

// Binary label of a column, most significant bit = first free point,
// '1' = draw.
std::string column_bits(const std::vector<bool>& draws);
std::uint64_t column_number(const std::vector<bool>& draws);

}  // namespace baccara

#endif  // BACCARA_DOMINANCE_HPP_
