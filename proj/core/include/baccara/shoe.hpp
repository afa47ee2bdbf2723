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

#ifndef BACCARA_SHOE_HPP_
#define BACCARA_SHOE_HPP_

#include <array>
#include <cstdint>
#include <span>

#include "baccara/game_core.hpp"

namespace baccara {

// Multiset of card values still available to be dealt, as integer weights.
//
// For a d-deck shoe the weights are card counts and removing a card
// decrements its count. With replacement the weights are the per-deck
// frequencies (4 for value 0, 1 otherwise, out of 13) and removal is a no-op.
class Composition {
 public:
  static Composition full(const DealModel& deal);

  std::int64_t count(int value) const { return counts_[value]; }
  std::int64_t size() const { return size_; }
  bool with_replacement() const { return with_replacement_; }

  // Throws DomainError if no card of this value is left.
  void remove(int value);
  void remove(std::span<const CardValue> cards);
  Composition without(std::span<const CardValue> cards) const;

  // Weight of the next two cards forming the unordered hand {a, b}.
  // Weights over all 55 hands sum to pair_total().
  std::int64_t pair_weight(int a, int b) const;
  std::int64_t pair_total() const;

 private:
  Composition() = default;
  bool with_replacement_ = false;
  std::array<std::int64_t, 10> counts_{};
  std::int64_t size_ = 0;
};

}  // namespace baccara

#endif  // BACCARA_SHOE_HPP_
