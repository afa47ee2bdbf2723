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

#include "baccara/game_core.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "baccara/errors.hpp"

namespace baccara {

CardValue::CardValue(int value) : value_(value) {
  if (value < 0 || value > 9) {
    throw DomainError("card value out of range: " + std::to_string(value));
  }
}

HandPair::HandPair(int a, int b)
    : lo_(CardValue(std::min(a, b))), hi_(CardValue(std::max(a, b))) {}

int HandPair::total() const { return mod10_total(lo_, hi_); }

std::string HandPair::to_string() const {
  return "(" + std::to_string(lo()) + "," + std::to_string(hi()) + ")";
}

bool canonical_less(const HandPair& a, const HandPair& b) {
  if (a.total() != b.total()) return a.total() < b.total();
  return a.lo() < b.lo();
}

CardValue ThirdCard::card() const {
  if (!card_) throw DomainError("third-card observation is Stand");
  return *card_;
}

std::string ThirdCard::to_string() const {
  return card_ ? std::to_string(card_->value()) : std::string("∅");
}

DecisionPoint DecisionPoint::of_hand(const HandPair& h, ThirdCard obs) {
  if (h.total() > 7) throw DomainError("Banker hand " + h.to_string() + " is a natural");
  return DecisionPoint{h.total(), h, obs};
}

DecisionPoint DecisionPoint::of_total(int total, ThirdCard obs) {
  if (total < 0 || total > 7) {
    throw DomainError("Banker total out of range: " + std::to_string(total));
  }
  return DecisionPoint{total, std::nullopt, obs};
}

std::string DecisionPoint::to_string() const {
  if (hand) {
    return "(" + std::to_string(hand->lo()) + "," + std::to_string(hand->hi()) + "," +
           obs.to_string() + ")";
  }
  return "(" + std::to_string(total) + "," + obs.to_string() + ")";
}

namespace {

std::vector<std::string> split_fields(const std::string& text) {
  std::string body = text;
  body.erase(std::remove_if(body.begin(), body.end(),
                            [](unsigned char c) { return std::isspace(c); }),
             body.end());
  if (body.size() < 2 || body.front() != '(' || body.back() != ')') {
    throw std::invalid_argument("malformed decision point: '" + text + "'");
  }
  body = body.substr(1, body.size() - 2);
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = body.find(',', start);
    fields.push_back(body.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return fields;
}

int parse_digit(const std::string& field, const std::string& text) {
  if (field.size() != 1 || !std::isdigit(static_cast<unsigned char>(field[0]))) {
    throw std::invalid_argument("malformed decision point: '" + text + "'");
  }
  return field[0] - '0';
}

ThirdCard parse_obs(const std::string& field, const std::string& text) {
  if (field == "∅" || field == "-" || field == "S" || field == "stand") {
    return ThirdCard::stand();
  }
  return ThirdCard::card(parse_digit(field, text));
}

}  // namespace

DecisionPoint parse_decision_point(const std::string& text) {
  const auto fields = split_fields(text);
  try {
    if (fields.size() == 3) {
      return DecisionPoint::of_hand(
          HandPair(parse_digit(fields[0], text), parse_digit(fields[1], text)),
          parse_obs(fields[2], text));
    }
    if (fields.size() == 2) {
      return DecisionPoint::of_total(parse_digit(fields[0], text), parse_obs(fields[1], text));
    }
  } catch (const DomainError& e) {
    throw std::invalid_argument(std::string(e.what()) + " in '" + text + "'");
  }
  throw std::invalid_argument("malformed decision point: '" + text + "'");
}

bool contested_less(const DecisionPoint& a, const DecisionPoint& b) {
  if (a.total != b.total) return a.total < b.total;
  if (a.obs.slot() != b.obs.slot()) return a.obs.slot() < b.obs.slot();
  if (a.hand && b.hand) return a.hand->lo() < b.hand->lo();
  return false;
}

PlayerMask::PlayerMask(int bits) : bits_(bits) {
  if (bits < 0 || bits >= kCount) {
    throw DomainError("player mask out of range: " + std::to_string(bits));
  }
}

std::string PlayerMask::binary() const {
  std::string out(5, '0');
  for (int i = 0; i < 5; ++i) out[i] = draws_on(i) ? '1' : '0';
  return out;
}

std::span<const HandPair> free_player_hands() {
  static const std::array<HandPair, 5> hands = {HandPair(0, 5), HandPair(1, 4), HandPair(2, 3),
                                                HandPair(6, 9), HandPair(7, 8)};
  return hands;
}

std::optional<int> free_hand_position(const HandPair& hand) {
  const auto hands = free_player_hands();
  for (std::size_t i = 0; i < hands.size(); ++i) {
    if (hands[i] == hand) return static_cast<int>(i);
  }
  return std::nullopt;
}

DealModel DealModel::shoe(std::int64_t decks) {
  if (decks < 1) throw DomainError("number of decks must be positive");
  return DealModel(decks);
}

std::int64_t DealModel::decks() const {
  if (!is_shoe()) throw DomainError("with-replacement model has no deck count");
  return decks_;
}

std::string model_name(const DealModel& deal, InfoModel info) {
  return std::string(1, deal.letter()) + std::to_string(static_cast<int>(info));
}

int mod10_total(CardValue a, CardValue b) { return (a.value() + b.value()) % 10; }

std::int64_t denom_count(CardValue r, std::int64_t decks) {
  if (decks < 1) throw DomainError("number of decks must be positive");
  return r.value() == 0 ? 16 * decks : 4 * decks;
}

const std::vector<HandPair>& enumerate_banker_hands() {
  static const std::vector<HandPair> hands = [] {
    std::vector<HandPair> out;
    for (int a = 0; a <= 9; ++a) {
      for (int b = a; b <= 9; ++b) {
        HandPair h(a, b);
        if (!h.is_natural()) out.push_back(h);
      }
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
  }();
  return hands;
}

const std::vector<DecisionPoint>& hand_decision_points() {
  static const std::vector<DecisionPoint> points = [] {
    std::vector<DecisionPoint> out;
    out.reserve(kDecisionPointCount);
    for (const auto& h : enumerate_banker_hands()) {
      for (int k = 0; k <= 9; ++k) out.push_back(DecisionPoint::of_hand(h, ThirdCard::card(k)));
      out.push_back(DecisionPoint::of_hand(h, ThirdCard::stand()));
    }
    return out;
  }();
  return points;
}

const std::vector<DecisionPoint>& total_decision_points() {
  static const std::vector<DecisionPoint> points = [] {
    std::vector<DecisionPoint> out;
    for (int j = 0; j <= 7; ++j) {
      for (int k = 0; k <= 9; ++k) out.push_back(DecisionPoint::of_total(j, ThirdCard::card(k)));
      out.push_back(DecisionPoint::of_total(j, ThirdCard::stand()));
    }
    return out;
  }();
  return points;
}

bool player_draws(PlayerMask mask, const HandPair& hand) {
  const int total = hand.total();
  if (total >= 8) throw DomainError("Player hand " + hand.to_string() + " is a natural");
  if (total <= 4) return true;
  if (total >= 6) return false;
  return mask.draws_on(*free_hand_position(hand));
}

int compare_totals(int player_total, int banker_total) {
  return (player_total > banker_total) - (player_total < banker_total);
}

}  // namespace baccara
