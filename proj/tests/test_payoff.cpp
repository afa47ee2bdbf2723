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

#include <doctest.h>

#include <array>
#include <vector>

#include "baccara/payoff.hpp"
#include "baccara/solver.hpp"
#include "support/reference_tables.hpp"

using namespace baccara;
using namespace baccara::testing;

namespace {

std::array<std::int64_t, 10> card_counts(const DealModel& deal) {
  std::array<std::int64_t, 10> c{};
  const std::int64_t d = deal.is_shoe() ? deal.decks() : 1;
  for (int v = 0; v < 10; ++v) c[v] = (v == 0 ? 16 : 4) * d;
  return c;
}

// P(neither two-card hand is a natural), P(Player natural wins),
// P(Banker natural wins), by ordered enumeration of the first four cards.
struct FourCardOdds {
  Rational no_natural, player_natural_wins, banker_natural_wins;
};

FourCardOdds four_card_odds(const DealModel& deal) {
  auto c = card_counts(deal);
  const bool repl = !deal.is_shoe();
  const std::int64_t n = deal.is_shoe() ? 52 * deal.decks() : 52;
  BigInt none = 0, pwin = 0, bwin = 0, all = 0;
  for (int a = 0; a < 10; ++a) {
    BigInt wa = c[a];
    if (!repl) --c[a];
    for (int b = 0; b < 10; ++b) {
      BigInt wb = wa * c[b];
      if (!repl) --c[b];
      for (int x = 0; x < 10; ++x) {
        BigInt wx = wb * c[x];
        if (!repl) --c[x];
        for (int y = 0; y < 10; ++y) {
          const BigInt w = wx * c[y];
          const int pt = (a + b) % 10, bt = (x + y) % 10;
          all += w;
          if (pt < 8 && bt < 8) none += w;
          if (pt >= 8 && pt > bt) pwin += w;
          if (bt >= 8 && bt > pt) bwin += w;
        }
        if (!repl) ++c[x];
      }
      if (!repl) ++c[b];
    }
    if (!repl) ++c[a];
  }
  BigInt den = repl ? BigInt(n) * n * n * n : BigInt(n) * (n - 1) * (n - 2) * (n - 3);
  CHECK(all == den);
  return {frac(none, den), frac(pwin, den), frac(bwin, den)};
}

std::vector<DealModel> small_deals() {
  return {DealModel::shoe(1), DealModel::shoe(6), DealModel::with_replacement()};
}

}  // namespace

TEST_CASE("decision point probabilities sum to the no-natural probability") {
  for (const auto& deal : small_deals()) {
    const auto odds = four_card_odds(deal);
    const auto hands = build_blocks(deal, InfoModel::FullComposition);
    REQUIRE(hands.row_count() == 32);
    for (std::size_t r = 0; r < hands.row_count(); ++r) {
      CHECK(hands.total_prob(r) == odds.no_natural);
    }
    const auto totals = build_blocks(deal, InfoModel::TotalsOnly);
    for (std::size_t r = 0; r < totals.row_count(); ++r) {
      CHECK(totals.total_prob(r) == odds.no_natural);
    }
  }
}

TEST_CASE("natural wins are symmetric and match four-card enumeration") {
  for (const auto& deal : small_deals()) {
    const auto odds = four_card_odds(deal);
    const auto [player, banker] = natural_win_probabilities(deal);
    CHECK(player == banker);
    CHECK(player == odds.player_natural_wins);
    CHECK(banker == odds.banker_natural_wins);
  }
}

TEST_CASE("(3,3,6) differences follow the closed forms") {
  const auto point = DecisionPoint::of_hand(HandPair(3, 3), ThirdCard::card(6));
  for (std::int64_t d = 1; d <= 15; ++d) {
    CAPTURE(d);
    const auto deal = DealModel::shoe(d);
    const Rational b31 = b_diff(PlayerMask(31), point, deal);
    const Rational b0 = b_diff(PlayerMask(0), point, deal);
    CHECK(b31 == frac(-2 * poly({80, -832, 135, -2}, d),
                      poly({52, -5}, d) * poly({840, -114, 1}, d)));
    CHECK(b0 == frac(-2 * poly({848, -952, 135, -2}, d),
                     poly({52, -5}, d) * poly({712, -102, 1}, d)));
    CHECK(sign(b0) < 0);
    CHECK(sign(b31) == (d <= 10 ? 1 : -1));
  }
}

TEST_CASE("Model 1 (5,4) differences follow the closed forms") {
  const auto point = DecisionPoint::of_total(5, ThirdCard::card(4));
  for (std::int64_t d = 1; d <= 15; ++d) {
    CAPTURE(d);
    const auto blocks = build_blocks(DealModel::shoe(d), InfoModel::TotalsOnly);
    const auto l = blocks.point_index(point);
    const Rational b1 = blocks.at(blocks.row_index(PlayerMask(31)), l).b();
    const Rational b0 = blocks.at(blocks.row_index(PlayerMask(0)), l).b();
    CHECK(b1 == frac(-poly({15360, -45184, 9040, -588, 13}, d),
                     poly({52, -5}, d) * poly({26880, -4680, 242, -3}, d)));
    CHECK(b0 == frac(poly({1024, 37248, -7792, 492, -7}, d),
                     poly({52, -5}, d) * poly({22784, -3976, 194, -1}, d)));
    CHECK(sign(b1) == (d >= 3 ? -1 : 1));
    CHECK(sign(b0) > 0);
  }
}

TEST_CASE("block entries agree with the single-point helpers") {
  const auto deal = DealModel::shoe(2);
  const auto blocks = build_blocks(deal, InfoModel::FullComposition);
  for (int bits : {0, 13, 19, 31}) {
    const PlayerMask mask(bits);
    const auto r = blocks.row_index(mask);
    for (std::size_t l = 0; l < blocks.point_count(); l += 7) {
      const auto& point = blocks.points()[l];
      const auto& e = blocks.at(r, l);
      CHECK(e.prob == decision_point_prob(mask, point, deal));
      CHECK(e.ev_draw == conditional_ev(mask, point, Move::Draw, deal));
      CHECK(e.ev_stand == conditional_ev(mask, point, Move::Stand, deal));
      CHECK(e.b() == b_diff(mask, point, deal));
    }
  }
}

TEST_CASE("the totals view aggregates hand blocks") {
  for (const auto& deal : small_deals()) {
    const auto hands = build_blocks(deal, InfoModel::BankerComposition);
    const auto view = aggregate_total_view(hands);
    const auto totals = build_blocks(deal, InfoModel::TotalsOnly);
    REQUIRE(view.point_count() == 88);
    for (std::size_t r = 0; r < view.row_count(); ++r) {
      for (std::size_t l = 0; l < view.point_count(); ++l) {
        CHECK(view.at(r, l).weighted(Move::Draw) == totals.at(r, l).weighted(Move::Draw));
        CHECK(view.at(r, l).weighted(Move::Stand) == totals.at(r, l).weighted(Move::Stand));
      }
    }
  }
}

TEST_CASE("both payoff_entry overloads agree") {
  const auto deal = DealModel::shoe(3);
  const auto blocks = build_blocks(deal, InfoModel::FullComposition);
  std::vector<DecisionPoint> draws;
  MoveTable table(blocks.point_count(), Move::Stand);
  for (std::size_t l = 0; l < blocks.point_count(); ++l) {
    const auto& p = blocks.points()[l];
    if (p.total <= 3 || (p.total <= 5 && p.obs.is_stand()) || (l % 5 == 0)) {
      table[l] = Move::Draw;
      draws.push_back(p);
    }
  }
  for (int bits : {0, 19, 27, 31}) {
    CHECK(payoff_entry(blocks, blocks.row_index(PlayerMask(bits)), table) ==
          payoff_entry(PlayerMask(bits), draws, deal));
  }
}

TEST_CASE("Model A1 kernel entries") {
  const auto s = solve_model(DealModel::with_replacement(), InfoModel::TotalsOnly);
  const Rational scale = frac(16, BigInt(13 * 13 * 13) * (13 * 13 * 13));
  CHECK(s.kernel.matrix.a[0][0] == -4564 * scale);
  CHECK(s.kernel.matrix.a[0][1] == -2692 * scale);
  CHECK(s.kernel.matrix.a[1][0] == -3705 * scale);
  CHECK(s.kernel.matrix.a[1][1] == -4121 * scale);
}

TEST_CASE("d = 6 kernels of Models 1, 2 and 3") {
  const BigInt den("1525814595305");
  const auto deal = DealModel::shoe(6);
  const auto b1 = solve_model(deal, InfoModel::TotalsOnly).kernel.matrix;
  CHECK(b1.a[0][0] == frac(BigInt("-23256431632"), den));
  CHECK(b1.a[0][1] == frac(BigInt("-13884629124"), den));
  CHECK(b1.a[1][0] == frac(BigInt("-18880657128"), den));
  CHECK(b1.a[1][1] == frac(BigInt("-21061456188"), den));
  const auto b2 = solve_model(deal, InfoModel::BankerComposition).kernel.matrix;
  CHECK(b2.a[0][0] == frac(BigInt("-22721165499"), den));
  CHECK(b2.a[0][1] == frac(BigInt("-18033241115"), den));
  CHECK(b2.a[1][0] == frac(BigInt("-19018265931"), den));
  CHECK(b2.a[1][1] == frac(BigInt("-20151297323"), den));
  const auto b3 = solve_model(deal, InfoModel::FullComposition).kernel.matrix;
  CHECK(b3.a[0][0] == frac(BigInt("-19769569403"), den));
  CHECK(b3.a[0][1] == frac(BigInt("-19425699931"), den));
  CHECK(b3.a[1][0] == frac(BigInt("-19391857983"), den));
  CHECK(b3.a[1][1] == frac(BigInt("-19783609631"), den));
}

TEST_CASE("Model 1 kernel for d >= 4 follows the closed form") {
  for (std::int64_t d : {4, 5, 9, 12}) {
    CAPTURE(d);
    const auto k = solve_model(DealModel::shoe(d), InfoModel::TotalsOnly).kernel.matrix;
    const Rational scale = frac(-64 * BigInt(static_cast<long>(d * d)), falling52(d));
    CHECK(k.a[0][0] == Rational(4 * poly({1168384, -284720, 22320, -446, -11}, d)) * scale);
    CHECK(k.a[0][1] == Rational(poly({2756608, -470336, 4656, 3072, -159}, d)) * scale);
    CHECK(k.a[1][0] == Rational(2 * poly({1896960, -461984, 39392, -1266, 9}, d)) * scale);
    CHECK(k.a[1][1] == Rational(poly({4219904, -954112, 68384, -852, -57}, d)) * scale);
  }
}

TEST_CASE("stand outcomes compare final totals") {
  CHECK(stand_ev(5, 3) == 1);
  CHECK(stand_ev(3, 3) == 0);
  CHECK(stand_ev(2, 7) == -1);
}
