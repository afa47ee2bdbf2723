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

#include "baccara/payoff.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "baccara/errors.hpp"
#include "baccara/shoe.hpp"

namespace baccara {
namespace {

// Per-hand contribution of one Player hand at one decision point.
struct HandTerm {
  HandPair hand;
  std::int64_t weight = 0;    // relative probability of the hand
  Int128 draw_sum = 0;      // sum over Banker third cards of count * sign
  int stand_sign = 0;         // sign against a standing Banker
};

// Everything a decision point needs, independent of Player's mask.
struct PointTerms {
  BigInt reach_num;                // P(Banker hand, observed third card)
  BigInt reach_den;
  std::int64_t player_pair_total;  // normalizer of the hand weights
  std::int64_t third_card_total;   // normalizer of Banker's third card
  bool stand_point = false;
  std::vector<HandTerm> hands;
};

int sign_of(int x) { return (x > 0) - (x < 0); }

// Player drew (or stood) at the given observation.
bool hand_in_row(PlayerMask mask, const HandPair& hand) { return player_draws(mask, hand); }

PointTerms point_terms(const Composition& full, const HandPair& banker, ThirdCard obs) {
  PointTerms out;
  out.stand_point = obs.is_stand();
  Composition after_banker = full;
  after_banker.remove(banker.lo());
  after_banker.remove(banker.hi());
  out.reach_num = BigInt(static_cast<long>(full.pair_weight(banker.lo(), banker.hi())));
  out.reach_den = BigInt(static_cast<long>(full.pair_total()));

  Composition before_player = after_banker;
  if (!out.stand_point) {
    const int k = obs.card().value();
    out.reach_num *= static_cast<long>(after_banker.count(k));
    out.reach_den *= static_cast<long>(after_banker.size());
    before_player.remove(k);
  }
  out.player_pair_total = before_player.pair_total();

  const int banker_total = banker.total();
  for (const HandPair& hand : enumerate_banker_hands()) {
    HandTerm term;
    term.hand = hand;
    term.weight = before_player.pair_weight(hand.lo(), hand.hi());
    if (term.weight == 0) continue;
    Composition rest = before_player;
    rest.remove(hand.lo());
    rest.remove(hand.hi());
    out.third_card_total = rest.size();
    const int final_total =
        out.stand_point ? hand.total() : (hand.total() + obs.card().value()) % 10;
    for (int l = 0; l <= 9; ++l) {
      term.draw_sum += static_cast<Int128>(rest.count(l)) *
                       sign_of(final_total - (banker_total + l) % 10);
    }
    term.stand_sign = sign_of(final_total - banker_total);
    out.hands.push_back(term);
  }
  return out;
}

BlockEntry accumulate(const PointTerms& terms, PlayerMask mask) {
  Int128 mass = 0;
  Int128 draw_num = 0;
  Int128 stand_num = 0;
  for (const HandTerm& t : terms.hands) {
    // At a card observation the hand must be one Player draws on; at ∅ one
    // he stands on.
    if (hand_in_row(mask, t.hand) == terms.stand_point) continue;
    mass += t.weight;
    draw_num += t.weight * t.draw_sum;
    stand_num += static_cast<Int128>(t.weight) * t.stand_sign;
  }
  if (mass == 0) throw DomainError("empty conditioning set for Player's hand");
  BlockEntry e;
  const BigInt m = to_bigint(mass);
  e.prob = make_rational(terms.reach_num * m,
                         terms.reach_den * BigInt(static_cast<long>(terms.player_pair_total)));
  e.ev_draw = make_rational(to_bigint(draw_num),
                            m * BigInt(static_cast<long>(terms.third_card_total)));
  e.ev_stand = make_rational(to_bigint(stand_num), m);
  return e;
}

const HandPair& require_hand(const DecisionPoint& point) {
  if (!point.hand) throw DomainError("hand-level decision point required: " + point.to_string());
  return *point.hand;
}

BlockEntry single_entry(PlayerMask mask, const DecisionPoint& point, const DealModel& deal) {
  const auto terms = point_terms(Composition::full(deal), require_hand(point), point.obs);
  return accumulate(terms, mask);
}

}  // namespace

Rational banker_draw_ev(int player_final, std::span<const CardValue> removed, int banker_total,
                        const DealModel& deal) {
  if (player_final < 0 || player_final > 9 || banker_total < 0 || banker_total > 7) {
    throw DomainError("total out of range");
  }
  const Composition rest = Composition::full(deal).without(removed);
  std::int64_t num = 0;
  for (int l = 0; l <= 9; ++l) {
    num += rest.count(l) * sign_of(player_final - (banker_total + l) % 10);
  }
  return make_rational(num, rest.size());
}

Rational stand_ev(int player_final, int banker_total) {
  return Rational(compare_totals(player_final, banker_total));
}

std::vector<std::pair<HandPair, Rational>> player_hand_distribution(
    PlayerMask mask, bool drawing, std::span<const CardValue> removed, const DealModel& deal) {
  const Composition rest = Composition::full(deal).without(removed);
  std::int64_t mass = 0;
  std::vector<std::pair<HandPair, std::int64_t>> weights;
  for (const HandPair& hand : enumerate_banker_hands()) {
    if (player_draws(mask, hand) != drawing) continue;
    const std::int64_t w = rest.pair_weight(hand.lo(), hand.hi());
    if (w == 0) continue;
    weights.emplace_back(hand, w);
    mass += w;
  }
  if (mass == 0) throw DomainError("empty conditioning set for Player's hand");
  std::vector<std::pair<HandPair, Rational>> out;
  out.reserve(weights.size());
  for (const auto& [hand, w] : weights) out.emplace_back(hand, make_rational(w, mass));
  return out;
}

Rational decision_point_prob(PlayerMask mask, const DecisionPoint& point, const DealModel& deal) {
  return single_entry(mask, point, deal).prob;
}

Rational conditional_ev(PlayerMask mask, const DecisionPoint& point, Move banker_move,
                        const DealModel& deal) {
  return single_entry(mask, point, deal).ev(banker_move);
}

Rational b_diff(PlayerMask mask, const DecisionPoint& point, const DealModel& deal) {
  return single_entry(mask, point, deal).b();
}

PayoffBlocks::PayoffBlocks(DealModel deal, InfoModel info, std::vector<PlayerMask> rows,
                           const std::vector<DecisionPoint>& points,
                           std::vector<std::vector<BlockEntry>> entries)
    : deal_(deal),
      info_(info),
      rows_(std::move(rows)),
      points_(&points),
      entries_(std::move(entries)) {
  if (entries_.size() != rows_.size()) throw std::invalid_argument("block row count mismatch");
  for (const auto& row : entries_) {
    if (row.size() != points_->size()) throw std::invalid_argument("block point count mismatch");
  }
}

std::size_t PayoffBlocks::row_index(PlayerMask mask) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] == mask) return i;
  }
  throw std::out_of_range("row " + std::to_string(mask.bits()) + " not in blocks");
}

std::size_t PayoffBlocks::point_index(const DecisionPoint& point) const {
  for (std::size_t i = 0; i < points_->size(); ++i) {
    if ((*points_)[i] == point) return i;
  }
  throw std::out_of_range("point " + point.to_string() + " not in blocks");
}

Rational PayoffBlocks::total_prob(std::size_t row) const {
  Rational sum = 0;
  for (const auto& e : entries_.at(row)) sum += e.prob;
  return sum;
}

PayoffBlocks build_hand_blocks(const DealModel& deal, std::span<const PlayerMask> rows) {
  const auto& points = hand_decision_points();
  const Composition full = Composition::full(deal);
  std::vector<std::vector<BlockEntry>> entries(rows.size(), std::vector<BlockEntry>(points.size()));
  for (std::size_t l = 0; l < points.size(); ++l) {
    const auto terms = point_terms(full, *points[l].hand, points[l].obs);
    for (std::size_t r = 0; r < rows.size(); ++r) entries[r][l] = accumulate(terms, rows[r]);
  }
  const InfoModel info =
      rows.size() == PlayerMask::kCount ? InfoModel::FullComposition : InfoModel::BankerComposition;
  return PayoffBlocks(deal, info, std::vector<PlayerMask>(rows.begin(), rows.end()), points,
                      std::move(entries));
}

PayoffBlocks build_blocks(const DealModel& deal, InfoModel info) {
  if (info == InfoModel::FullComposition) {
    std::vector<PlayerMask> rows;
    for (int u = 0; u < PlayerMask::kCount; ++u) rows.emplace_back(u);
    return build_hand_blocks(deal, rows);
  }
  const std::array<PlayerMask, 2> rows = {PlayerMask::stand_on_five(), PlayerMask::draw_on_five()};
  PayoffBlocks hand = build_hand_blocks(deal, rows);
  if (info == InfoModel::BankerComposition) return hand;
  return aggregate_total_view(hand);
}

PayoffBlocks aggregate_total_view(const PayoffBlocks& blocks) {
  if (blocks.info() == InfoModel::TotalsOnly) {
    throw std::invalid_argument("blocks are already total-level");
  }
  const std::array<PlayerMask, 2> rows = {PlayerMask::stand_on_five(), PlayerMask::draw_on_five()};
  const auto& totals = total_decision_points();
  std::vector<std::vector<BlockEntry>> entries(rows.size(), std::vector<BlockEntry>(totals.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::size_t src_row = blocks.row_index(rows[r]);
    std::vector<Rational> draw_mass(totals.size()), stand_mass(totals.size());
    for (std::size_t l = 0; l < blocks.point_count(); ++l) {
      const DecisionPoint& p = blocks.points()[l];
      const std::size_t t = static_cast<std::size_t>(p.total * kThirdCardSlots + p.obs.slot());
      const BlockEntry& e = blocks.at(src_row, l);
      entries[r][t].prob += e.prob;
      draw_mass[t] += e.prob * e.ev_draw;
      stand_mass[t] += e.prob * e.ev_stand;
    }
    for (std::size_t t = 0; t < totals.size(); ++t) {
      BlockEntry& e = entries[r][t];
      if (e.prob == 0) {
        throw DomainError("zero probability at " + totals[t].to_string());
      }
      e.ev_draw = draw_mass[t] / e.prob;
      e.ev_stand = stand_mass[t] / e.prob;
    }
  }
  return PayoffBlocks(blocks.deal(), InfoModel::TotalsOnly,
                      std::vector<PlayerMask>(rows.begin(), rows.end()), totals,
                      std::move(entries));
}

Rational payoff_entry(const PayoffBlocks& blocks, std::size_t row, const MoveTable& table) {
  if (table.size() != blocks.point_count()) {
    throw std::invalid_argument("move table size does not match the point space");
  }
  Rational sum = 0;
  for (std::size_t l = 0; l < table.size(); ++l) {
    const BlockEntry& e = blocks.at(row, l);
    sum += e.prob * e.ev(table[l]);
  }
  return sum;
}

Rational payoff_entry(PlayerMask mask, std::span<const DecisionPoint> banker_draws,
                      const DealModel& deal) {
  const std::array<PlayerMask, 1> rows = {mask};
  const PayoffBlocks blocks = build_hand_blocks(deal, rows);
  MoveTable table(blocks.point_count(), Move::Stand);
  for (const auto& p : banker_draws) table[blocks.point_index(p)] = Move::Draw;
  return payoff_entry(blocks, 0, table);
}

std::pair<Rational, Rational> natural_win_probabilities(const DealModel& deal) {
  const Composition full = Composition::full(deal);
  BigInt player_wins = 0;
  BigInt banker_wins = 0;
  for (int a = 0; a <= 9; ++a) {
    for (int b = a; b <= 9; ++b) {
      const HandPair player(a, b);
      const std::int64_t wp = full.pair_weight(a, b);
      Composition rest = full;
      rest.remove(a);
      rest.remove(b);
      for (int c = 0; c <= 9; ++c) {
        for (int e = c; e <= 9; ++e) {
          const HandPair banker(c, e);
          const std::int64_t wb = rest.pair_weight(c, e);
          if (wp == 0 || wb == 0) continue;
          const BigInt w = BigInt(static_cast<long>(wp)) * static_cast<long>(wb);
          if (player.is_natural() && player.total() > banker.total()) player_wins += w;
          if (banker.is_natural() && banker.total() > player.total()) banker_wins += w;
        }
      }
    }
  }
  const BigInt den = BigInt(static_cast<long>(full.pair_total())) *
                     static_cast<long>(full.without(std::array{CardValue(0), CardValue(0)}).pair_total());
  return {make_rational(player_wins, den), make_rational(banker_wins, den)};
}

}  // namespace baccara
