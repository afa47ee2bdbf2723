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

#include "baccara/shoe.hpp"

#include <string>

#include "baccara/errors.hpp"

namespace baccara {

Composition Composition::full(const DealModel& deal) {
  Composition c;
  c.with_replacement_ = !deal.is_shoe();
  for (int r = 0; r <= 9; ++r) {
    c.counts_[r] = c.with_replacement_ ? (r == 0 ? 4 : 1) : denom_count(CardValue(r), deal.decks());
    c.size_ += c.counts_[r];
  }
  return c;
}

void Composition::remove(int value) {
  if (with_replacement_) return;
  if (counts_[value] <= 0) {
    throw DomainError("no card of value " + std::to_string(value) + " left in the shoe");
  }
  --counts_[value];
  --size_;
}

void Composition::remove(std::span<const CardValue> cards) {
  for (CardValue c : cards) remove(c.value());
}

Composition Composition::without(std::span<const CardValue> cards) const {
  Composition c = *this;
  c.remove(cards);
  return c;
}

std::int64_t Composition::pair_weight(int a, int b) const {
  if (a != b) return 2 * counts_[a] * counts_[b];
  return with_replacement_ ? counts_[a] * counts_[a] : counts_[a] * (counts_[a] - 1);
}

std::int64_t Composition::pair_total() const {
  return with_replacement_ ? size_ * size_ : size_ * (size_ - 1);
}

}  // namespace baccara
