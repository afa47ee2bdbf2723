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

#include <initializer_list>

#include "baccara/errors.hpp"
#include "baccara/solver.hpp"

namespace baccara {
namespace {

// Horner evaluation; coefficients from the highest degree down.
BigInt poly(std::initializer_list<long> coeffs, const BigInt& d) {
  BigInt acc = 0;
  for (long c : coeffs) acc = acc * d + c;
  return acc;
}

BigInt falling6(const BigInt& d) {
  BigInt n = 52 * d;
  BigInt acc = 1;
  for (int i = 0; i < 6; ++i) acc *= n - i;
  return acc;
}

Rational frac(const BigInt& num, const BigInt& den) { return make_rational(num, den); }

struct Pqv {
  Rational p, q, v;
};

Pqv model1(std::int64_t decks) {
  const BigInt d = decks;
  const BigInt cubic = poly({5632, -1138, 69, -1}, d);
  const BigInt ff = falling6(d);
  Pqv r;
  r.p = frac(poly({36864, -9312, 732, -23}, d), 8 * cubic);
  if (decks <= 3) {
    r.q = frac(poly({224000, -55712, 2936, 163, -14}, d), 2 * (52 * d - 5) * cubic);
    r.v = frac(-32 * d * d *
                   poly({44396707840L, -18908426240L, 3279293696L, -294129728L, 14418160L,
                         -407352L, 9543L, -220L},
                        d),
               cubic * ff);
  } else {
    r.q = frac(poly({439808, -107456, 5248, 374, -31}, d), 4 * (52 * d - 5) * cubic);
    r.v = frac(-16 * d * d *
                   poly({89072336896L, -38873874432L, 6969345536L, -655761920L, 34638784L,
                         -1090952L, 26286L, -537L},
                        d),
               cubic * ff);
  }
  return r;
}

Pqv model2(std::int64_t decks) {
  const BigInt d = decks;
  const BigInt quad = poly({1408, -220, 9}, d);
  const BigInt ff = falling6(d);
  Pqv r;
  r.p = frac((8 * d - 1) * (12 * d - 1) * (24 * d - 1), 2 * d * quad);
  const BigInt qden = 8 * d * (52 * d - 5) * quad;
  if (decks == 1) {
    r.q = make_rational(290383, 450072);
    r.v = make_rational(-22932137, 1666583100);
  } else if (decks == 2) {
    r.q = make_rational(2591845, 4119192);
    r.v = make_rational(-8220886553L, 620866384425L);
  } else if (decks == 3) {
    r.q = make_rational(9294089, 14521368);
    r.v = make_rational(-210084639838L, 16053072820785L);
  } else if (decks <= 7) {
    r.q = frac(poly({368640, -68624, -2168, 981, -48}, d), qden);
    r.v = frac(-32 * d *
                   poly({11125325824L, -4182669312L, 615333888L, -43467904L, 1329008L, 5040L,
                         -1551L, 39L},
                        d),
               quad * ff);
  } else if (decks <= 9) {
    r.q = frac(poly({367616, -67728, -2416, 1015, -51}, d), qden);
    r.v = frac(-32 * d *
                   poly({11129683968L, -4218739712L, 635681024L, -47725760L, 1738944L, -14344L,
                         -1093L, 33L},
                        d),
               quad * ff);
  } else {
    r.q = frac(poly({366592, -67344, -2456, 1017, -51}, d), qden);
    r.v = frac(-32 * d *
                   poly({11134042112L, -4259389440L, 648152320L, -49007232L, 1788256L, -14816L,
                         -1089L, 33L},
                        d),
               quad * ff);
  }
  return r;
}

Pqv model3(std::int64_t decks) {
  const BigInt d = decks;
  const BigInt lin = 11 * d - 1;
  const BigInt ff = falling6(d);
  Pqv r;
  r.p = decks == 1 ? make_rational(1, 19)
                   : frac((12 * d - 1) * poly({16, -14, 1}, d), 32 * d * d * lin);
  const BigInt qden = 256 * d * d * lin * (52 * d - 5);
  if (decks == 1) {
    r.q = make_rational(4519, 10716);
    r.v = make_rational(-3439451, 25482800);
  } else if (decks == 2) {
    r.q = make_rational(17431, 64512);
    r.v = make_rational(-49424010137L, 3823801581600L);
  } else if (decks == 3) {
    r.q = make_rational(4425647, 11132928);
    r.v = make_rational(-31717439249L, 2461444457472L);
  } else if (decks <= 7) {
    r.q = frac(poly({92160, -120128, 26336, -2000, 47}, d), qden);
    r.v = frac(-2 * poly({1390665728L, -491115520L, 50698240L, 2428032L, -990512L, 89192L,
                          -3462L, 47L},
                         d),
               lin * ff);
  } else if (decks == 8) {
    r.q = make_rational(316815305, 585842688);
    r.v = make_rational(BigInt("-2789416947665657"), BigInt("217430324984396160"));
  } else {
    r.q = frac(poly({91648, -119488, 26032, -1932, 41}, d), qden);
    r.v = frac(-2 * poly({1391755264L, -500535296L, 54174464L, 1931136L, -948816L, 85792L,
                          -3238L, 41L},
                         d),
               lin * ff);
  }
  return r;
}

}  // namespace

GameSolution closed_form(InfoModel info, std::int64_t decks) {
  if (decks < 1) throw DomainError("decks must be at least 1");
  GameSolution s;
  s.deal = DealModel::shoe(decks);
  s.info = info;
  Pqv r;
  std::array<PlayerMask, 2> rows{PlayerMask::stand_on_five(), PlayerMask::draw_on_five()};
  switch (info) {
    case InfoModel::TotalsOnly:
      r = model1(decks);
      break;
    case InfoModel::BankerComposition:
      r = model2(decks);
      break;
    case InfoModel::FullComposition:
      r = model3(decks);
      rows = {PlayerMask(kKernelRowStandOnOneFour), PlayerMask(kKernelRowDrawOnOneFour)};
      break;
  }
  s.p = r.p;
  s.q = r.q;
  s.value = r.v;
  s.player = {{rows[0], 1 - r.p}, {rows[1], r.p}};

  const auto& points =
      info == InfoModel::TotalsOnly ? total_decision_points() : hand_decision_points();
  std::array<MoveTable, 2> tables{MoveTable(points.size()), MoveTable(points.size())};
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Mark m = final_banker_move(info, decks, points[i]);
    if (m == Mark::Contested) {
      s.mixing_point = points[i];
      tables[0][i] = Move::Stand;
      tables[1][i] = Move::Draw;
    } else {
      tables[0][i] = tables[1][i] = m == Mark::Draw ? Move::Draw : Move::Stand;
    }
  }
  s.banker = {{std::move(tables[0]), 1 - r.q}, {std::move(tables[1]), r.q}};
  s.kernel.rows = rows;
  s.unique_claimed = info != InfoModel::FullComposition;
  return s;
}

}  // namespace baccara
