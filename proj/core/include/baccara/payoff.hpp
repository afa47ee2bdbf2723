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

#ifndef BACCARA_PAYOFF_HPP_
#define BACCARA_PAYOFF_HPP_

// Exact payoff building blocks: for each Player row S and Banker decision
// point l, the probability p_S(l) of reaching l and Player's conditional
// expectation given each Banker move.

#include <span>
#include <utility>
#include <vector>

#include "baccara/game_core.hpp"
#include "baccara/rational.hpp"

namespace baccara {

// Expected sign of player_final against a drawing Banker whose two-card total
// is banker_total, with `removed` the cards already seen (Player's and
// Banker's hands, and Player's third card if any).
Rational banker_draw_ev(int player_final, std::span<const CardValue> removed, int banker_total,
                        const DealModel& deal);

// Outcome when Banker stands: sign of player_final - banker_total.
Rational stand_ev(int player_final, int banker_total);

// Conditional distribution of Player's two-card hand given that it lies in S
// (drawing) or S^c (standing), with `removed` taken from the shoe. Hands
// are listed in canonical order; zero-mass hands are omitted.
std::vector<std::pair<HandPair, Rational>> player_hand_distribution(
    PlayerMask mask, bool drawing, std::span<const CardValue> removed, const DealModel& deal);

// p_S(point): probability that neither hand is a natural, Banker holds the
// point's hand and Player's third card is the observed one.
Rational decision_point_prob(PlayerMask mask, const DecisionPoint& point, const DealModel& deal);

// Player's expected gain conditional on reaching the point, when Banker makes
// the given move.
Rational conditional_ev(PlayerMask mask, const DecisionPoint& point, Move banker_move,
                        const DealModel& deal);

// conditional_ev(Draw) - conditional_ev(Stand). Negative means Banker prefers
// to draw against this row.
Rational b_diff(PlayerMask mask, const DecisionPoint& point, const DealModel& deal);

struct BlockEntry {
  Rational prob;
  Rational ev_draw;
  Rational ev_stand;

  const Rational& ev(Move m) const { return m == Move::Draw ? ev_draw : ev_stand; }
  Rational weighted(Move m) const { return prob * ev(m); }
  Rational b() const { return ev_draw - ev_stand; }
};

// Banker's move at every point of a block set, indexed like
// PayoffBlocks::points().
using MoveTable = std::vector<Move>;

class PayoffBlocks {
 public:
  PayoffBlocks(DealModel deal, InfoModel info, std::vector<PlayerMask> rows,
               const std::vector<DecisionPoint>& points,
               std::vector<std::vector<BlockEntry>> entries);

  const DealModel& deal() const { return deal_; }
  InfoModel info() const { return info_; }
  const std::vector<PlayerMask>& rows() const { return rows_; }
  const std::vector<DecisionPoint>& points() const { return *points_; }
  std::size_t row_count() const { return rows_.size(); }
  std::size_t point_count() const { return points_->size(); }

  const BlockEntry& at(std::size_t row, std::size_t point) const { return entries_[row][point]; }

  // Throws std::out_of_range if absent.
  std::size_t row_index(PlayerMask mask) const;
  std::size_t point_index(const DecisionPoint& point) const;

  // Sum of p_S over all points for a row: P(no natural).
  Rational total_prob(std::size_t row) const;

 private:
  DealModel deal_;
  InfoModel info_;
  std::vector<PlayerMask> rows_;
  const std::vector<DecisionPoint>* points_;
  std::vector<std::vector<BlockEntry>> entries_;
};

// Hand-level blocks for the given rows.
PayoffBlocks build_hand_blocks(const DealModel& deal, std::span<const PlayerMask> rows);

// Blocks for a model: all 32 masks for FullComposition, masks {0, 31} for
// BankerComposition, and the total-level aggregate of those for TotalsOnly.
PayoffBlocks build_blocks(const DealModel& deal, InfoModel info);

// Regroups hand-level blocks (which must contain masks 0 and 31) by Banker
// total, giving the totals-only blocks.
PayoffBlocks aggregate_total_view(const PayoffBlocks& blocks);

// a_{S,T} for a block row and a full Banker move table. Naturals contribute
// zero, so this is the full matrix entry.
Rational payoff_entry(const PayoffBlocks& blocks, std::size_t row, const MoveTable& table);

// Same, computed from scratch for one mask and a hand-level Banker strategy
// given by the set of points where Banker draws.
Rational payoff_entry(PlayerMask mask, std::span<const DecisionPoint> banker_draws,
                      const DealModel& deal);

// Probability that Player holds a natural that beats Banker, and vice versa.
// The two are equal, which is why naturals drop out of every payoff entry.
std::pair<Rational, Rational> natural_win_probabilities(const DealModel& deal);

}  // namespace baccara

#endif  // BACCARA_PAYOFF_HPP_
