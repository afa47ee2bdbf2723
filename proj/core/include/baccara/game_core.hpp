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

#ifndef BACCARA_GAME_CORE_HPP_
#define BACCARA_GAME_CORE_HPP_

// Rules layer: card values, hand totals, strategy index spaces and the
// comparison of final totals.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace baccara {

// Value of a card, 0..9. Ten and the court cards all have value 0.
class CardValue {
 public:
  constexpr CardValue() = default;
  explicit CardValue(int value);

  constexpr int value() const { return value_; }
  friend constexpr auto operator<=>(CardValue, CardValue) = default;

 private:
  int value_ = 0;
};

// Unordered two-card hand, stored with lo <= hi.
class HandPair {
 public:
  constexpr HandPair() = default;
  // Canonicalizes the order of the two cards.
  HandPair(int a, int b);

  constexpr int lo() const { return lo_.value(); }
  constexpr int hi() const { return hi_.value(); }
  int total() const;
  bool is_natural() const { return total() >= 8; }

  std::string to_string() const;  // "(lo,hi)"
  friend constexpr auto operator<=>(const HandPair&, const HandPair&) = default;

 private:
  CardValue lo_;
  CardValue hi_;
};

// Ascending (total, lo). This is the row order used throughout.
bool canonical_less(const HandPair& a, const HandPair& b);

// What Banker observes of Player's draw: a face-up card, or that Player stood.
class ThirdCard {
 public:
  static ThirdCard card(int value) { return ThirdCard(CardValue(value)); }
  static ThirdCard stand() { return ThirdCard(); }

  bool is_stand() const { return !card_.has_value(); }
  // Throws DomainError for the Stand variant.
  CardValue card() const;

  // 0..9 for cards, 10 for Stand. Used only for indexing and ordering.
  int slot() const { return card_ ? card_->value() : 10; }
  std::string to_string() const;  // "0".."9" or "∅"

  friend bool operator==(const ThirdCard&, const ThirdCard&) = default;

 private:
  ThirdCard() = default;
  explicit ThirdCard(CardValue c) : card_(c) {}
  std::optional<CardValue> card_;
};

inline constexpr int kThirdCardSlots = 11;

// A Banker information set. Under the composition models the hand is known;
// under the totals-only model only the total is.
struct DecisionPoint {
  int total = 0;
  std::optional<HandPair> hand;
  ThirdCard obs = ThirdCard::stand();

  static DecisionPoint of_hand(const HandPair& h, ThirdCard obs);
  static DecisionPoint of_total(int total, ThirdCard obs);

  // "(j1,j2,k)" / "(j1,j2,∅)" or "(j,k)" / "(j,∅)".
  std::string to_string() const;
  friend bool operator==(const DecisionPoint&, const DecisionPoint&) = default;
};

// Parses the labels produced by DecisionPoint::to_string. Accepts "-" or
// "S" in place of "∅". Throws std::invalid_argument.
DecisionPoint parse_decision_point(const std::string& text);

// Ordering used for contested points: total ascending, third card ascending
// with ∅ last, then hand ascending.
bool contested_less(const DecisionPoint& a, const DecisionPoint& b);

// Player pure strategy on the five free total-5 hands. Bit 4 (most
// significant) is (0,5), then (1,4), (2,3), (6,9), (7,8).
class PlayerMask {
 public:
  constexpr PlayerMask() = default;
  explicit PlayerMask(int bits);

  constexpr int bits() const { return bits_; }
  // Whether the mask draws on the given free hand (position 0..4).
  bool draws_on(int position) const { return (bits_ >> (4 - position)) & 1; }
  std::string binary() const;  // five characters, most significant first

  static constexpr int kCount = 32;
  static PlayerMask stand_on_five() { return PlayerMask(0); }
  static PlayerMask draw_on_five() { return PlayerMask(31); }

  friend constexpr auto operator<=>(PlayerMask, PlayerMask) = default;

 private:
  int bits_ = 0;
};

// The five total-5 hands in bit order.
std::span<const HandPair> free_player_hands();

// Position of a total-5 hand in free_player_hands(), or nullopt.
std::optional<int> free_hand_position(const HandPair& hand);

// How the cards are dealt.
class DealModel {
 public:
  static DealModel with_replacement() { return DealModel(0); }
  // Throws DomainError when decks < 1.
  static DealModel shoe(std::int64_t decks);

  bool is_shoe() const { return decks_ > 0; }
  // Throws DomainError for the with-replacement model.
  std::int64_t decks() const;
  char letter() const { return is_shoe() ? 'B' : 'A'; }

  friend bool operator==(const DealModel&, const DealModel&) = default;

 private:
  explicit DealModel(std::int64_t decks) : decks_(decks) {}
  std::int64_t decks_ = 0;
};

enum class InfoModel { TotalsOnly = 1, BankerComposition = 2, FullComposition = 3 };

// "A1".."B3".
std::string model_name(const DealModel& deal, InfoModel info);

enum class Move { Stand = 0, Draw = 1 };

inline constexpr int kBankerHandCount = 44;
inline constexpr int kDecisionPointCount = kBankerHandCount * kThirdCardSlots;

int mod10_total(CardValue a, CardValue b);

// Base count of a value in a full d-deck shoe: 16d for 0, 4d otherwise.
std::int64_t denom_count(CardValue r, std::int64_t decks);

// All non-natural two-card hands in canonical order. Also the set of
// Player hands that reach a draw decision.
const std::vector<HandPair>& enumerate_banker_hands();

// The 484 hand-level decision points: hands in canonical order, then third
// card 0..9, then ∅.
const std::vector<DecisionPoint>& hand_decision_points();

// The 88 total-level decision points: totals 0..7, then 0..9, then ∅.
const std::vector<DecisionPoint>& total_decision_points();

// Player's forced rules plus the mask on total 5. Throws DomainError for a
// natural.
bool player_draws(PlayerMask mask, const HandPair& hand);

// Sign of player_total - banker_total.
int compare_totals(int player_total, int banker_total);

}  // namespace baccara

#endif  // BACCARA_GAME_CORE_HPP_
