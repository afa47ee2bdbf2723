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
#include <stdexcept>

#include "baccara/oracle.hpp"
#include "point_index.hpp"

namespace baccara::oracle {
namespace {

int outcome(int player, int banker) { return (player > banker) - (player < banker); }

}  // namespace

PointValues enumerate_point_values(PlayerMask mask, const DealModel& deal, InfoModel info) {
  const PointIndex index(info);
  const bool shoe = deal.is_shoe();
  std::array<std::int64_t, 10> c{};
  std::int64_t n = 0;
  for (int v = 0; v < 10; ++v) {
    c[v] = shoe ? (v == 0 ? 16 : 4) * deal.decks() : (v == 0 ? 4 : 1);
    n += c[v];
  }
  // scale[L]: factor bringing an L-card sequence weight to the common
  // six-card denominator.
  std::array<Int128, 7> scale{};
  Int128 denom = 1;
  for (int len = 6; len >= 0; --len) {
    scale[len] = 1;
    for (int i = len; i < 6; ++i) scale[len] *= shoe ? (n - i) : n;
  }
  denom = scale[0];

  std::vector<Int128> stand(index.size(), 0);
  std::vector<Int128> draw(index.size(), 0);
  Int128 natural = 0;

  auto take = [&](int v) -> std::int64_t {
    const std::int64_t w = c[v];
    if (shoe) --c[v];
    return w;
  };
  auto put = [&](int v) {
    if (shoe) ++c[v];
  };
  auto player_draws_on_five = [&](int a, int b) {
    static constexpr std::array<std::array<int, 2>, 5> kHands{{{0, 5}, {1, 4}, {2, 3}, {6, 9}, {7, 8}}};
    const int lo = std::min(a, b);
    for (int pos = 0; pos < 5; ++pos) {
      if (kHands[pos][0] == lo) return mask.draws_on(pos);
    }
    throw std::logic_error("not a total-5 hand");
  };

  for (int p1 = 0; p1 < 10; ++p1) {
    if (c[p1] == 0) continue;
    const Int128 w1 = take(p1);
    for (int b1 = 0; b1 < 10; ++b1) {
      if (c[b1] == 0) continue;
      const Int128 w2 = w1 * take(b1);
      for (int p2 = 0; p2 < 10; ++p2) {
        if (c[p2] == 0) continue;
        const Int128 w3 = w2 * take(p2);
        for (int b2 = 0; b2 < 10; ++b2) {
          if (c[b2] == 0) continue;
          const Int128 w4 = w3 * take(b2);
          const int pt = (p1 + p2) % 10;
          const int bt = (b1 + b2) % 10;
          if (pt >= 8 || bt >= 8) {
            natural += w4 * scale[4] * outcome(pt, bt);
          } else {
            const bool p_draws = pt <= 4 || (pt == 5 && player_draws_on_five(p1, p2));
            if (!p_draws) {
              const std::size_t l = index(b1, b2, 10);
              stand[l] += w4 * scale[4] * outcome(pt, bt);
              for (int b3 = 0; b3 < 10; ++b3) {
                if (c[b3] == 0) continue;
                draw[l] += w4 * c[b3] * scale[5] * outcome(pt, (bt + b3) % 10);
              }
            } else {
              for (int p3 = 0; p3 < 10; ++p3) {
                if (c[p3] == 0) continue;
                const Int128 w5 = w4 * take(p3);
                const int pf = (pt + p3) % 10;
                const std::size_t l = index(b1, b2, p3);
                stand[l] += w5 * scale[5] * outcome(pf, bt);
                for (int b3 = 0; b3 < 10; ++b3) {
                  if (c[b3] == 0) continue;
                  draw[l] += w5 * c[b3] * outcome(pf, (bt + b3) % 10);
                }
                put(p3);
              }
            }
          }
          put(b2);
        }
        put(p2);
      }
      put(b1);
    }
    put(p1);
  }

  const BigInt d = to_bigint(denom);
  PointValues out;
  out.natural = make_rational(to_bigint(natural), d);
  out.stand.reserve(index.size());
  out.draw.reserve(index.size());
  for (std::size_t l = 0; l < index.size(); ++l) {
    out.stand.push_back(make_rational(to_bigint(stand[l]), d));
    out.draw.push_back(make_rational(to_bigint(draw[l]), d));
  }
  return out;
}

Rational exact_payoff(const PointValues& values, const MoveTable& table) {
  if (table.size() != values.stand.size()) throw std::invalid_argument("table size mismatch");
  Rational total = values.natural;
  for (std::size_t l = 0; l < table.size(); ++l) {
    total += table[l] == Move::Draw ? values.draw[l] : values.stand[l];
  }
  return total;
}

SaddleReport saddle_report(const DealModel& deal, InfoModel info,
                           const std::vector<PlayerComponent>& player,
                           const std::vector<BankerComponent>& banker, const Rational& v) {
  std::vector<int> rows;
  if (info == InfoModel::FullComposition) {
    for (int b = 0; b < PlayerMask::kCount; ++b) rows.push_back(b);
  } else {
    rows = {0, 31};
  }
  std::vector<std::optional<PointValues>> values(PlayerMask::kCount);
  auto values_of = [&](PlayerMask m) -> const PointValues& {
    auto& slot = values[m.bits()];
    if (!slot) slot = enumerate_point_values(m, deal, info);
    return *slot;
  };

  SaddleReport report;
  // Banker's best reply to the Player mixture, choosing freely at every point.
  const std::size_t points = values_of(player.front().mask).stand.size();
  Rational best = 0;
  std::vector<Rational> s(points), d(points);
  for (const auto& c : player) {
    const PointValues& pv = values_of(c.mask);
    best += c.weight * pv.natural;
    for (std::size_t l = 0; l < points; ++l) {
      s[l] += c.weight * pv.stand[l];
      d[l] += c.weight * pv.draw[l];
    }
  }
  for (std::size_t l = 0; l < points; ++l) best += std::min(s[l], d[l]);
  report.player_margin = best - v;

  bool first = true;
  for (int r : rows) {
    const PointValues& pv = values_of(PlayerMask(r));
    Rational payoff = 0;
    for (const auto& c : banker) payoff += c.weight * exact_payoff(pv, c.table);
    Rational margin = payoff - v;
    if (first || margin > report.banker_margin) report.banker_margin = std::move(margin);
    first = false;
  }
  return report;
}

bool saddle_check(const DealModel& deal, InfoModel info,
                  const std::vector<PlayerComponent>& player,
                  const std::vector<BankerComponent>& banker, const Rational& v) {
  return saddle_report(deal, info, player, banker, v).ok();
}

bool saddle_check(const GameSolution& s) {
  return saddle_check(s.deal, s.info, s.player, s.banker, s.value);
}

}  // namespace baccara::oracle
