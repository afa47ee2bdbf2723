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

#include <map>
#include <set>
#include <stdexcept>

#include "baccara/shoe.hpp"
#include "baccara/solver.hpp"

namespace baccara {
namespace {

// Draw probabilities of the canonical A1 solution, carried over to the
// duplicate-reduced A2/A3 games.
const Rational& player_target() {
  static const Rational r = make_rational(9, 11);
  return r;
}
const Rational& banker_target() {
  static const Rational r = make_rational(859, 2288);
  return r;
}

// Pairs (low, high) of class indices with low/den < target < high/den.
std::vector<MixturePair> straddling_pairs(int den, const Rational& target) {
  std::vector<MixturePair> out;
  for (int low = 0; low <= den; ++low) {
    if (make_rational(low, den) >= target) continue;
    for (int high = 0; high <= den; ++high) {
      if (make_rational(high, den) <= target) continue;
      out.push_back({low, high, (target * den - low) / (high - low)});
    }
  }
  return out;
}

bool same_row(const PayoffBlocks& blocks, std::size_t a, std::size_t b) {
  for (std::size_t l = 0; l < blocks.point_count(); ++l) {
    const BlockEntry& x = blocks.at(a, l);
    const BlockEntry& y = blocks.at(b, l);
    if (x.weighted(Move::Stand) != y.weighted(Move::Stand) ||
        x.weighted(Move::Draw) != y.weighted(Move::Draw)) {
      return false;
    }
  }
  return true;
}

}  // namespace

Rational draw_weight(PlayerMask mask) {
  int w = 0;
  for (int pos = 0; pos < 5; ++pos) {
    if (mask.draws_on(pos)) w += pos == 0 ? 4 : 1;
  }
  return make_rational(w, 8);
}

ExtremeEquilibria enumerate_extreme_equilibria(InfoModel info) {
  if (info == InfoModel::TotalsOnly) {
    throw std::invalid_argument("extreme equilibria are enumerated for A2 and A3 only");
  }
  ExtremeEquilibria e;
  e.banker_pairs = straddling_pairs(16, banker_target());
  if (info == InfoModel::FullComposition) e.player_pairs = straddling_pairs(8, player_target());
  e.count = e.banker_pairs.size() * std::max<std::size_t>(e.player_pairs.size(), 1);
  return e;
}

DedupStructure dedup_structure_A3() {
  const ModelContext ctx = build_context(DealModel::with_replacement(), InfoModel::FullComposition);
  const PayoffBlocks& blocks = ctx.blocks;

  DedupStructure out;
  out.row_classes.resize(9);
  for (int bits = 0; bits < PlayerMask::kCount; ++bits) {
    const PlayerMask mask(bits);
    const Rational scaled = draw_weight(mask) * 8;
    const int cls = static_cast<int>(scaled.get_num().get_si());
    out.row_classes[cls].push_back(mask);
  }
  for (const auto& members : out.row_classes) {
    const std::size_t first = blocks.row_index(members.front());
    for (const auto& m : members) {
      if (!same_row(blocks, first, blocks.row_index(m))) {
        throw std::logic_error("rows " + members.front().binary() + " and " + m.binary() +
                               " share a draw weight but differ in payoff");
      }
    }
  }

  // Contested points grouped by (total, third card).
  std::map<std::pair<int, int>, std::vector<std::size_t>> groups;
  for (std::size_t l : contested_indices(ctx.table)) {
    const DecisionPoint& pt = blocks.points()[l];
    groups[{pt.total, pt.obs.slot()}].push_back(l);
  }
  const Composition deck = Composition::full(DealModel::with_replacement());
  out.column_class_count = 1;
  for (const auto& [key, members] : groups) {
    std::vector<std::int64_t> weight;
    for (std::size_t l : members) {
      const HandPair& h = *blocks.points()[l].hand;
      weight.push_back(deck.pair_weight(h.lo(), h.hi()));
    }
    for (std::size_t r = 0; r < blocks.row_count(); ++r) {
      const Rational base = blocks.at(r, members[0]).weighted(Move::Draw) -
                            blocks.at(r, members[0]).weighted(Move::Stand);
      for (std::size_t i = 1; i < members.size(); ++i) {
        const Rational diff = blocks.at(r, members[i]).weighted(Move::Draw) -
                              blocks.at(r, members[i]).weighted(Move::Stand);
        if (diff * weight[0] != base * weight[i]) {
          throw std::logic_error("payoff differences at " + blocks.points()[members[i]].to_string() +
                                 " are not proportional to hand frequency");
        }
      }
    }
    std::set<std::int64_t> sums{0};
    for (std::int64_t w : weight) {
      std::set<std::int64_t> next = sums;
      for (std::int64_t s : sums) next.insert(s + w);
      sums = std::move(next);
    }
    out.group_class_counts.push_back(sums.size());
    out.column_class_count *= sums.size();
  }
  return out;
}

}  // namespace baccara
