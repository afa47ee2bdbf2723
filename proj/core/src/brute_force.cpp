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
#include <bit>
#include <numeric>
#include <stdexcept>

#include "baccara/oracle.hpp"

namespace baccara::oracle {
namespace {

struct Line {
  Rational intercept;  // payoff against row 0
  Rational slope;      // row 1 minus row 0
  std::uint32_t column = 0;
};

// x at which two lines meet.
Rational meet(const Line& a, const Line& b) { return (b.intercept - a.intercept) / (a.slope - b.slope); }

std::vector<bool> to_draws(std::uint32_t column, std::size_t n) {
  std::vector<bool> out(n);
  for (std::size_t l = 0; l < n; ++l) out[l] = (column >> l) & 1;
  return out;
}

}  // namespace

BruteForceSolution brute_force_solve_2xn(const TwoRowGame& game) {
  const std::size_t n = game.size();
  if (n > 16) throw std::invalid_argument("brute force refuses more than 16 free points");
  const std::size_t count = std::size_t{1} << n;

  // Row payoffs for every column, built one bit at a time.
  std::vector<Rational> a0(count), a1(count);
  a0[0] = game.e0;
  a1[0] = game.e1;
  for (const auto& e : game.points) {
    a0[0] += e.e00;
    a1[0] += e.e10;
  }
  for (std::size_t t = 1; t < count; ++t) {
    const int l = std::countr_zero(t);
    const std::size_t prev = t & (t - 1);
    const PointEvalues& e = game.points[l];
    a0[t] = a0[prev] + (e.e01 - e.e00);
    a1[t] = a1[prev] + (e.e11 - e.e10);
  }

  std::vector<Line> lines(count);
  for (std::size_t t = 0; t < count; ++t) {
    lines[t] = {a0[t], a1[t] - a0[t], static_cast<std::uint32_t>(t)};
  }
  std::sort(lines.begin(), lines.end(), [](const Line& x, const Line& y) {
    if (x.slope != y.slope) return x.slope > y.slope;
    if (x.intercept != y.intercept) return x.intercept < y.intercept;
    return x.column < y.column;
  });

  // Lower envelope, slopes decreasing left to right.
  std::vector<Line> hull;
  for (auto& line : lines) {
    if (!hull.empty() && hull.back().slope == line.slope) continue;
    while (hull.size() >= 2 && meet(hull[hull.size() - 2], line) <= meet(hull[hull.size() - 2], hull.back())) {
      hull.pop_back();
    }
    hull.push_back(std::move(line));
  }

  auto envelope = [&](const Rational& p) {
    Rational best = hull[0].intercept + p * hull[0].slope;
    for (std::size_t i = 1; i < hull.size(); ++i) {
      best = std::min(best, Rational(hull[i].intercept + p * hull[i].slope));
    }
    return best;
  };
  std::vector<Rational> candidates{Rational(0), Rational(1)};
  for (std::size_t i = 1; i < hull.size(); ++i) {
    Rational x = meet(hull[i - 1], hull[i]);
    if (x > 0 && x < 1) candidates.push_back(std::move(x));
  }

  BruteForceSolution out;
  out.columns = count;
  out.hull_size = hull.size();
  bool first = true;
  for (const auto& p : candidates) {
    Rational v = envelope(p);
    if (first || v > out.value || (v == out.value && p < out.p)) {
      out.value = std::move(v);
      out.p = p;
      first = false;
    }
  }

  // Active hull lines with extreme slopes form the kernel.
  const Line* up = nullptr;
  const Line* down = nullptr;
  for (const auto& h : hull) {
    if (h.intercept + out.p * h.slope != out.value) continue;
    if (!up || h.slope > up->slope) up = &h;
    if (!down || h.slope < down->slope) down = &h;
  }
  if (up == down || sign(up->slope) < 0 || sign(down->slope) > 0) {
    const Line* pure = sign(up->slope) >= 0 ? up : down;
    if (out.p == 1) pure = down;
    out.kernel_columns = {to_draws(pure->column, n), to_draws(pure->column, n)};
    out.q = 0;
    return out;
  }
  const Line* c0 = up;
  const Line* c1 = down;
  if (std::popcount(c1->column) < std::popcount(c0->column)) std::swap(c0, c1);
  out.kernel_columns = {to_draws(c0->column, n), to_draws(c1->column, n)};
  out.q = c0->slope / (c0->slope - c1->slope);
  return out;
}

}  // namespace baccara::oracle
