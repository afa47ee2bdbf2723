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

#include <stdexcept>

#include "baccara/errors.hpp"
#include "baccara/solver.hpp"

namespace baccara {
namespace {

Mark dm(bool draw) { return draw ? Mark::Draw : Mark::Stand; }

bool is(const HandPair& h, int a, int b) { return h == HandPair(a, b); }

// Final move for Model 1 points (totals only).
Mark totals_move(std::int64_t d, int total, int k) {
  if (total <= 2) return Mark::Draw;
  if (total == 7) return Mark::Stand;
  if (k == 10) return total == 6 ? Mark::Contested : Mark::Draw;
  switch (total) {
    case 3:
      return dm(k != 8);
    case 4:
      return dm(k >= 2 && k <= 7);
    case 5:
      if (k == 4) return dm(d >= 4);
      return dm(k >= 5 && k <= 7);
    default:
      return dm(k == 6 || k == 7);
  }
}

// Final move for Models 2 and 3 points (hand known to Banker).
Mark hands_move(bool full, std::int64_t d, const HandPair& h, int k) {
  const int total = h.total();
  if (total <= 2) return Mark::Draw;
  if (total == 7) return Mark::Stand;
  if (total == 3) {
    if (k != 8) return Mark::Draw;
    if (is(h, 4, 9)) return dm(d == 1);
    if (is(h, 6, 7)) return dm(full && d == 1);
    return Mark::Stand;
  }
  if (total == 4) {
    if (k == 10) return Mark::Draw;
    if (k == 1) return dm((is(h, 6, 8) || is(h, 7, 7)) && d <= 2);
    return dm(k >= 2 && k <= 7);
  }
  if (total == 5) {
    if (k == 10) return Mark::Draw;
    if (k == 4) {
      if (is(h, 0, 5) || is(h, 7, 8)) return dm(d >= 2);
      if (is(h, 1, 4)) return dm(d >= 8);
      if (is(h, 2, 3)) return dm(d >= (full ? 9 : 10));
      return dm(d >= (full ? 2 : 3));  // (6,9)
    }
    return dm(k >= 5 && k <= 7);
  }
  // Total 6.
  if (k == 10) {
    const bool low_mix = full && d == 1;
    if (is(h, 0, 6)) return low_mix ? Mark::Stand : Mark::Contested;
    if (is(h, 8, 8)) return low_mix ? Mark::Contested : Mark::Draw;
    return Mark::Stand;
  }
  if (k == 6) return dm(!is(h, 3, 3) || d >= 4);
  return dm(k == 7);
}

}  // namespace

Mark final_banker_move(InfoModel info, std::int64_t decks, const DecisionPoint& point) {
  if (decks < 1) throw DomainError("decks must be at least 1");
  const int k = point.obs.slot();
  if (info == InfoModel::TotalsOnly) {
    if (point.hand) throw std::invalid_argument("Model 1 points carry no hand");
    return totals_move(decks, point.total, k);
  }
  if (!point.hand) throw std::invalid_argument("composition models need a hand");
  return hands_move(info == InfoModel::FullComposition, decks, *point.hand, k);
}

}  // namespace baccara
