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

#include <random>
#include <vector>

#include "baccara/envelope.hpp"
#include "baccara/errors.hpp"

using namespace baccara;

namespace {

Rational q(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

TwoRowGame random_game(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> entry(-500, 500);
  TwoRowGame g;
  g.e0 = q(entry(rng), 7);
  g.e1 = q(entry(rng), 7);
  for (std::size_t l = 0; l < n; ++l) {
    PointEvalues e;
    do {
      e = {q(entry(rng), 13), q(entry(rng), 13), q(entry(rng), 13),
           q(entry(rng), 13)};
    } while (e.e00 == e.e01 || e.e10 == e.e11);
    g.points.push_back(e);
  }
  return g;
}

std::vector<bool> column_of(std::size_t n, std::uint64_t bits) {
  std::vector<bool> out(n);
  for (std::size_t l = 0; l < n; ++l) out[l] = (bits >> (n - 1 - l)) & 1;
  return out;
}

Rational mixed(const TwoRowGame& g, const Rational& p, const std::vector<bool>& col) {
  return (1 - p) * g.entry(0, col) + p * g.entry(1, col);
}

Rational brute_envelope(const TwoRowGame& g, const Rational& p) {
  Rational best;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.size()); ++bits) {
    const Rational v = mixed(g, p, column_of(g.size(), bits));
    if (bits == 0 || v < best) best = v;
  }
  return best;
}

}  // namespace

TEST_CASE("envelope equals the minimum over all columns") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_game(rng, 1 + trial % 7);
    for (int i = 0; i <= 16; ++i) {
      const Rational p = q(i, 16);
      const Rational v = envelope_value(g, p);
      CHECK(v == brute_envelope(g, p));
      CHECK(mixed(g, p, best_response(g, p)) == v);
    }
  }
}

TEST_CASE("envelope is concave") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_game(rng, 2 + trial % 9);
    std::vector<Rational> v;
    for (int i = 0; i <= 48; ++i) v.push_back(envelope_value(g, q(i, 48)));
    for (std::size_t i = 1; i + 1 < v.size(); ++i) CHECK(v[i - 1] + v[i + 1] <= 2 * v[i]);
  }
}

TEST_CASE("solve maximizes the envelope and its kernel equalizes") {
  std::mt19937_64 rng(23);
  int kernels = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_game(rng, 1 + trial % 10);
    const auto s = solve(g);
    CHECK(envelope_value(g, s.p_star) == s.value);
    for (int i = 0; i <= 32; ++i) CHECK(envelope_value(g, q(i, 32)) <= s.value);
    for (const auto& c : s.candidates) CHECK(c.value == envelope_value(g, c.p));
    if (!s.unique || s.l_star.empty()) continue;
    ++kernels;
    const auto& a = s.kernel.a;
    const Rational p = s.p_star, qs = s.q_star;
    CHECK((1 - p) * a[0][0] + p * a[1][0] == s.value);
    CHECK((1 - p) * a[0][1] + p * a[1][1] == s.value);
    CHECK((1 - qs) * a[0][0] + qs * a[0][1] == s.value);
    CHECK((1 - qs) * a[1][0] + qs * a[1][1] == s.value);
    CHECK(a[0][0] == g.entry(0, s.kernel_columns[0]));
    CHECK(a[1][1] == g.entry(1, s.kernel_columns[1]));
    // Banker's mixture holds Player to the value on both rows.
    for (int row = 0; row < 2; ++row) {
      CHECK((1 - qs) * g.entry(row, s.kernel_columns[0]) + qs * g.entry(row, s.kernel_columns[1]) ==
            s.value);
    }
  }
  CHECK(kernels > 50);
}

TEST_CASE("2x2 kernel solution for the with-replacement totals game") {
  Kernel2x2 k;
  k.a = {{{Rational(-4564), Rational(-2692)}, {Rational(-3705), Rational(-4121)}}};
  const auto s = solve_kernel_2x2(k);
  CHECK(s.p == q(9, 11));
  CHECK(s.q == q(859, 2288));
  const Rational scale(16, 4826809);  // 2^4 / 13^6
  CHECK(s.value * scale == q(-679568, 53094899));
}

TEST_CASE("degenerate kernels are rejected") {
  Kernel2x2 flat;
  flat.a = {{{Rational(1), Rational(2)}, {Rational(3), Rational(4)}}};
  CHECK_THROWS_AS(solve_kernel_2x2(flat), DomainError);
  Kernel2x2 saddle;
  saddle.a = {{{Rational(1), Rational(5)}, {Rational(0), Rational(-1)}}};
  CHECK_THROWS_AS(solve_kernel_2x2(saddle), DomainError);
}

TEST_CASE("indifferent rows raise a tie error naming the point") {
  TwoRowGame g;
  g.points.push_back({Rational(1), Rational(2), Rational(3), Rational(1)});
  g.points.push_back({Rational(1), Rational(1), Rational(3), Rational(2)});
  g.labels = {"(0,6,∅)", "(8,8,∅)"};
  try {
    partition(g);
    FAIL("expected a tie");
  } catch (const TieError& e) {
    CHECK(e.point() == "(8,8,∅)");
  }
  CHECK_THROWS_AS(solve(g), TieError);
  CHECK_THROWS_AS(crossover({Rational(1), Rational(2), Rational(1), Rational(2)}), DomainError);
}

TEST_CASE("partition and crossovers") {
  TwoRowGame g;
  g.points.push_back({Rational(0), Rational(1), Rational(0), Rational(1)});    // T00
  g.points.push_back({Rational(1), Rational(0), Rational(1), Rational(0)});    // T11
  g.points.push_back({Rational(0), Rational(1), Rational(1), Rational(0)});    // T01
  g.points.push_back({Rational(1), Rational(0), Rational(0), Rational(3)});    // T10
  const auto part = partition(g);
  CHECK(part.cells == std::vector<Cell>{Cell::T00, Cell::T11, Cell::T01, Cell::T10});
  CHECK(crossover(g.points[2]) == q(1, 2));
  CHECK(crossover(g.points[3]) == q(1, 4));
  CHECK(best_response(g, q(1, 8)) == std::vector<bool>{false, true, false, true});
  CHECK(best_response(g, q(7, 8)) == std::vector<bool>{false, true, true, false});
}

TEST_CASE("games without crossovers have a pure maximizer") {
  TwoRowGame g;
  g.e0 = 5;
  g.e1 = 1;
  g.points.push_back({Rational(0), Rational(1), Rational(0), Rational(1)});
  const auto s = solve(g);
  CHECK(s.p_star == 0);
  CHECK(s.l_star.empty());
  CHECK(s.value == 5);
  CHECK(s.q_star == 0);
  CHECK(s.kernel_columns[0] == s.kernel_columns[1]);
}
