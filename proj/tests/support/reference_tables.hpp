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

// Reference tables and closed forms, typed in independently of the library.
// Slots 0..9 are Player third cards, slot 10 is Player standing.

#ifndef BACCARA_TESTS_REFERENCE_TABLES_HPP_
#define BACCARA_TESTS_REFERENCE_TABLES_HPP_

#include <cstdint>
#include <initializer_list>
#include <utility>

#include "baccara/game_core.hpp"
#include "baccara/rational.hpp"

namespace baccara::testing {

// Deck count standing in for the with-replacement model.
inline constexpr std::int64_t kManyDecks = std::int64_t{1} << 20;

inline BigInt poly(std::initializer_list<std::int64_t> high_to_low, std::int64_t d) {
  BigInt acc = 0;
  const BigInt x = static_cast<long>(d);
  for (std::int64_t c : high_to_low) acc = acc * x + BigInt(static_cast<long>(c));
  return acc;
}

// (52d)(52d-1)...(52d-5).
inline BigInt falling52(std::int64_t d) {
  BigInt acc = 1;
  for (int i = 0; i < 6; ++i) acc *= BigInt(static_cast<long>(52 * d - i));
  return acc;
}

inline Rational frac(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_hand(const HandPair& h, int a, int b) { return h == HandPair(a, b); }

namespace detail {

inline char apply_exception(char mark, int note, std::int64_t d) {
  switch (note) {
    case 1:
      if (d == 1) return mark == '*' ? 'S' : '*';
      return mark;
    case 2:
      return (d <= 2 && mark == 'S') ? '*' : mark;
    case 3:
      if (d <= 3) return mark == 'S' ? '*' : (mark == '*' ? 'S' : mark);
      return mark;
    case 5:
      return (d <= 5 && mark == 'S') ? '*' : mark;
    case 7:
      return (d >= 7 && mark == 'S') ? '*' : mark;
    case 8:
      return (d >= 8 && mark == 'S') ? '*' : mark;
    case 11:
      return (d >= 11 && mark == '*') ? 'D' : mark;
    default:
      return mark;
  }
}

}  // namespace detail

// Preliminary Banker move for Models 2 and 3: 'D', 'S' or '*'.
inline char preliminary_hand_mark(const HandPair& h, int slot, std::int64_t d) {
  const int t = h.total();
  if (t <= 2) return 'D';
  if (t == 7) return 'S';
  char base = 'D';
  int note = 0;
  if (t == 3) {
    if (slot == 9) return '*';
    if (slot != 8) return 'D';
    base = 'S';
    if (is_hand(h, 0, 3)) note = 2;
    if (is_hand(h, 1, 2)) note = 1;
    if (is_hand(h, 4, 9)) note = 5;
    if (is_hand(h, 5, 8) || is_hand(h, 6, 7)) note = 3;
  } else if (t == 4) {
    if (slot == 0 || slot == 8 || slot == 9) return 'S';
    if (slot == 1) {
      if (is_hand(h, 0, 4)) base = 'S', note = 8;
      if (is_hand(h, 1, 3) || is_hand(h, 5, 9)) base = 'S', note = 7;
      if (is_hand(h, 2, 2)) base = '*', note = 3;
      if (is_hand(h, 6, 8) || is_hand(h, 7, 7)) base = '*';
    } else if (slot == 2) {
      if (!is_hand(h, 6, 8) && !is_hand(h, 7, 7)) note = 1;
    }
  } else if (t == 5) {
    if (slot <= 3 || slot == 8 || slot == 9) return 'S';
    if (slot == 4) {
      if (is_hand(h, 1, 4)) base = 'S', note = 7;
      else if (is_hand(h, 2, 3)) base = 'S', note = 8;
      else base = '*', note = 1;
    }
  } else {  // t == 6
    if (slot <= 5 || slot == 8 || slot == 9) return 'S';
    if (slot == 10) return '*';
    if (slot == 6 && is_hand(h, 3, 3)) base = '*', note = 11;
  }
  return detail::apply_exception(base, note, d);
}

// Preliminary Banker move for Model 1 at a total.
inline char preliminary_total_mark(int t, int slot, std::int64_t d) {
  if (t <= 2) return 'D';
  if (t == 7) return 'S';
  if (t == 3) {
    if (slot == 8) return d <= 3 ? '*' : 'S';
    return slot == 9 ? '*' : 'D';
  }
  if (t == 4) {
    if (slot == 0 || slot == 8 || slot == 9) return 'S';
    if (slot == 1) return d <= 3 ? 'S' : '*';
    if (slot == 2) return d == 1 ? '*' : 'D';
    return 'D';
  }
  if (t == 5) {
    if (slot <= 3 || slot == 8 || slot == 9) return 'S';
    if (slot == 4) return d <= 2 ? 'S' : '*';
    return 'D';
  }
  if (slot <= 5 || slot == 8 || slot == 9) return 'S';
  return slot == 10 ? '*' : 'D';
}

// Final Banker move for Models 2 and 3: 'D', 'S' or 'M' (mixed).
inline char final_hand_move(int info, const HandPair& h, int slot, std::int64_t d) {
  const bool m3 = info == 3;
  const int t = h.total();
  if (t <= 2) return 'D';
  if (t == 7) return 'S';
  if (t == 3) {
    if (slot != 8) return 'D';
    if (is_hand(h, 4, 9)) return d >= 2 ? 'S' : 'D';
    if (is_hand(h, 6, 7) && m3) return d >= 2 ? 'S' : 'D';
    return 'S';
  }
  if (t == 4) {
    if (slot == 0 || slot == 8 || slot == 9) return 'S';
    if (slot == 1) {
      if (is_hand(h, 6, 8) || is_hand(h, 7, 7)) return d >= 3 ? 'S' : 'D';
      return 'S';
    }
    return 'D';
  }
  if (t == 5) {
    if (slot <= 3 || slot == 8 || slot == 9) return 'S';
    if (slot != 4) return 'D';
    if (is_hand(h, 0, 5) || is_hand(h, 7, 8)) return d >= 2 ? 'D' : 'S';
    if (is_hand(h, 1, 4)) return d <= 7 ? 'S' : 'D';
    if (is_hand(h, 2, 3)) return d <= (m3 ? 8 : 9) ? 'S' : 'D';
    return d >= (m3 ? 2 : 3) ? 'D' : 'S';  // (6,9)
  }
  if (slot <= 5 || slot == 8 || slot == 9) return 'S';
  if (slot == 6) return (is_hand(h, 3, 3) && d <= 3) ? 'S' : 'D';
  if (slot == 7) return 'D';
  if (is_hand(h, 0, 6)) return (m3 && d == 1) ? 'S' : 'M';
  if (is_hand(h, 8, 8)) return (m3 && d == 1) ? 'M' : 'D';
  return 'S';
}

// Final Banker move for Model 1 at a total.
inline char final_total_move(int t, int slot, std::int64_t d) {
  if (t <= 2) return 'D';
  if (t == 7) return 'S';
  if (t == 3) return slot == 8 ? 'S' : 'D';
  if (t == 4) return (slot <= 1 || slot >= 8) && slot != 10 ? 'S' : 'D';
  if (t == 5) {
    if (slot <= 3 || slot == 8 || slot == 9) return 'S';
    if (slot == 4) return d >= 4 ? 'D' : 'S';
    return 'D';
  }
  if (slot <= 5 || slot == 8 || slot == 9) return 'S';
  return slot == 10 ? 'M' : 'D';
}

struct Triple {
  Rational p, q, v;
};

inline Triple b1_closed_form(std::int64_t d) {
  const BigInt c = poly({5632, -1138, 69, -1}, d);
  const BigInt f = falling52(d);
  const BigInt d2 = BigInt(static_cast<long>(d * d));
  Triple t;
  t.p = frac(poly({36864, -9312, 732, -23}, d), 8 * c);
  if (d <= 3) {
    t.q = frac(poly({224000, -55712, 2936, 163, -14}, d), 2 * poly({52, -5}, d) * c);
    t.v = frac(-32 * d2 *
                   poly({44396707840, -18908426240, 3279293696, -294129728, 14418160, -407352,
                         9543, -220},
                        d),
               c * f);
  } else {
    t.q = frac(poly({439808, -107456, 5248, 374, -31}, d), 4 * poly({52, -5}, d) * c);
    t.v = frac(-16 * d2 *
                   poly({89072336896, -38873874432, 6969345536, -655761920, 34638784, -1090952,
                         26286, -537},
                        d),
               c * f);
  }
  return t;
}

inline Triple b2_closed_form(std::int64_t d) {
  const BigInt c = poly({1408, -220, 9}, d);
  const BigInt f = falling52(d);
  const BigInt dd = BigInt(static_cast<long>(d));
  Triple t;
  t.p = frac(poly({8, -1}, d) * poly({12, -1}, d) * poly({24, -1}, d), 2 * dd * c);
  const BigInt qden = 8 * dd * poly({52, -5}, d) * c;
  if (d == 1) {
    t.q = frac(290383, 450072);
    t.v = frac(-22932137, BigInt("1666583100"));
  } else if (d == 2) {
    t.q = frac(2591845, 4119192);
    t.v = frac(BigInt("-8220886553"), BigInt("620866384425"));
  } else if (d == 3) {
    t.q = frac(9294089, 14521368);
    t.v = frac(BigInt("-210084639838"), BigInt("16053072820785"));
  } else if (d <= 7) {
    t.q = frac(poly({368640, -68624, -2168, 981, -48}, d), qden);
    t.v = frac(-32 * dd *
                   poly({11125325824, -4182669312, 615333888, -43467904, 1329008, 5040, -1551, 39},
                        d),
               c * f);
  } else if (d <= 9) {
    t.q = frac(poly({367616, -67728, -2416, 1015, -51}, d), qden);
    t.v = frac(-32 * dd *
                   poly({11129683968, -4218739712, 635681024, -47725760, 1738944, -14344, -1093,
                         33},
                        d),
               c * f);
  } else {
    t.q = frac(poly({366592, -67344, -2456, 1017, -51}, d), qden);
    t.v = frac(-32 * dd *
                   poly({11134042112, -4259389440, 648152320, -49007232, 1788256, -14816, -1089,
                         33},
                        d),
               c * f);
  }
  return t;
}

inline Triple b3_closed_form(std::int64_t d) {
  const BigInt e = poly({11, -1}, d);
  const BigInt f = falling52(d);
  const BigInt d2 = BigInt(static_cast<long>(d * d));
  const BigInt qden = 256 * d2 * e * poly({52, -5}, d);
  Triple t;
  t.p = d == 1 ? frac(1, 19) : frac(poly({12, -1}, d) * poly({16, -14, 1}, d), 32 * d2 * e);
  if (d == 1) {
    t.q = frac(4519, 10716);
    t.v = frac(-3439451, 25482800);
  } else if (d == 2) {
    t.q = frac(17431, 64512);
    t.v = frac(BigInt("-49424010137"), BigInt("3823801581600"));
  } else if (d == 3) {
    t.q = frac(4425647, 11132928);
    t.v = frac(BigInt("-31717439249"), BigInt("2461444457472"));
  } else if (d <= 7) {
    t.q = frac(poly({92160, -120128, 26336, -2000, 47}, d), qden);
    t.v = frac(-2 *
                   poly({1390665728, -491115520, 50698240, 2428032, -990512, 89192, -3462, 47},
                        d),
               e * f);
  } else if (d == 8) {
    t.q = frac(316815305, 585842688);
    t.v = frac(BigInt("-2789416947665657"), BigInt("217430324984396160"));
  } else {
    t.q = frac(poly({91648, -119488, 26032, -1932, 41}, d), qden);
    t.v = frac(-2 *
                   poly({1391755264, -500535296, 54174464, 1931136, -948816, 85792, -3238, 41},
                        d),
               e * f);
  }
  return t;
}

inline Rational parse(const char* text) { return parse_rational(text); }

}  // namespace baccara::testing

#endif  // BACCARA_TESTS_REFERENCE_TABLES_HPP_
