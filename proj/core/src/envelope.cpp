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

#include "baccara/envelope.hpp"

#include <algorithm>
#include <map>

#include "baccara/errors.hpp"

namespace baccara {

std::string TwoRowGame::label(std::size_t l) const {
  return l < labels.size() ? labels[l] : "#" + std::to_string(l);
}

Rational TwoRowGame::entry(int row, const std::vector<bool>& draws) const {
  Rational sum = row == 0 ? e0 : e1;
  for (std::size_t l = 0; l < points.size(); ++l) {
    const PointEvalues& e = points[l];
    if (row == 0) {
      sum += draws[l] ? e.e01 : e.e00;
    } else {
      sum += draws[l] ? e.e11 : e.e10;
    }
  }
  return sum;
}

Partition partition(const TwoRowGame& game) {
  Partition out;
  out.cells.reserve(game.size());
  for (std::size_t l = 0; l < game.size(); ++l) {
    const PointEvalues& e = game.points[l];
    const int c0 = cmp(e.e00, e.e01);
    const int c1 = cmp(e.e10, e.e11);
    if (c0 == 0 || c1 == 0) throw TieError(game.label(l), "row indifferent between moves");
    Cell cell;
    if (c0 < 0 && c1 < 0) {
      cell = Cell::T00;
      out.t00.push_back(l);
    } else if (c0 < 0) {
      cell = Cell::T01;
      out.t01.push_back(l);
    } else if (c1 < 0) {
      cell = Cell::T10;
      out.t10.push_back(l);
    } else {
      cell = Cell::T11;
      out.t11.push_back(l);
    }
    out.cells.push_back(cell);
  }
  return out;
}

Rational crossover(const PointEvalues& e) {
  const Rational den = e.e00 - e.e01 + e.e11 - e.e10;
  if (den == 0) throw DomainError("crossover undefined: rows agree on the better move");
  return (e.e00 - e.e01) / den;
}

namespace {

bool draws_at(Cell cell, const Rational& crossover_p, const Rational& p) {
  switch (cell) {
    case Cell::T00:
      return false;
    case Cell::T11:
      return true;
    case Cell::T01:
      return crossover_p < p;
    case Cell::T10:
      return crossover_p > p;
  }
  return false;
}

std::vector<bool> best_response(const TwoRowGame& game, const Partition& part,
                                const std::vector<Rational>& crossovers, const Rational& p) {
  std::vector<bool> out(game.size());
  for (std::size_t l = 0; l < game.size(); ++l) out[l] = draws_at(part.cells[l], crossovers[l], p);
  return out;
}

std::vector<Rational> all_crossovers(const TwoRowGame& game, const Partition& part) {
  std::vector<Rational> out(game.size());
  for (std::size_t l = 0; l < game.size(); ++l) {
    if (part.cells[l] == Cell::T01 || part.cells[l] == Cell::T10) out[l] = crossover(game.points[l]);
  }
  return out;
}

Rational envelope_value(const TwoRowGame& game, const Partition& part,
                        const std::vector<Rational>& crossovers, const Rational& p) {
  Rational e0 = game.e0;
  Rational e1 = game.e1;
  for (std::size_t l : part.t11) {
    e0 += game.points[l].e01;
    e1 += game.points[l].e11;
  }
  for (std::size_t l : part.t00) {
    e0 += game.points[l].e00;
    e1 += game.points[l].e10;
  }
  const Rational one_minus_p = 1 - p;
  Rational v = one_minus_p * e0 + p * e1;
  auto add = [&](std::size_t l, bool draw) {
    const PointEvalues& e = game.points[l];
    v += draw ? one_minus_p * e.e01 + p * e.e11 : one_minus_p * e.e00 + p * e.e10;
  };
  for (std::size_t l : part.t01) add(l, crossovers[l] < p);
  for (std::size_t l : part.t10) add(l, crossovers[l] > p);
  return v;
}

}  // namespace

std::vector<bool> best_response(const TwoRowGame& game, const Rational& p) {
  const Partition part = partition(game);
  return best_response(game, part, all_crossovers(game, part), p);
}

Rational envelope_value(const TwoRowGame& game, const Rational& p) {
  const Partition part = partition(game);
  return envelope_value(game, part, all_crossovers(game, part), p);
}

KernelSolution solve_kernel_2x2(const Kernel2x2& kernel) {
  const auto& a = kernel.a;
  const Rational den = a[0][0] - a[0][1] - a[1][0] + a[1][1];
  if (den == 0) throw DomainError("2x2 kernel is degenerate");
  KernelSolution s;
  s.p = (a[0][0] - a[0][1]) / den;
  s.q = (a[0][0] - a[1][0]) / den;
  s.value = (a[0][0] * a[1][1] - a[0][1] * a[1][0]) / den;
  if (s.p <= 0 || s.p >= 1 || s.q <= 0 || s.q >= 1) {
    throw DomainError("2x2 kernel has a pure saddle point");
  }
  return s;
}

EnvelopeSolution solve(const TwoRowGame& game) {
  EnvelopeSolution sol;
  sol.partition = partition(game);
  const auto crossovers = all_crossovers(game, sol.partition);

  std::map<Rational, std::vector<std::size_t>> by_p;
  for (std::size_t l = 0; l < game.size(); ++l) {
    const Cell c = sol.partition.cells[l];
    if (c == Cell::T01 || c == Cell::T10) by_p[crossovers[l]].push_back(l);
  }
  auto value_at = [&](const Rational& p) {
    return envelope_value(game, sol.partition, crossovers, p);
  };
  sol.candidates.push_back({Rational(0), value_at(Rational(0)), {}});
  sol.candidates.push_back({Rational(1), value_at(Rational(1)), {}});
  for (const auto& [p, points] : by_p) {
    if (p <= 0 || p >= 1) continue;
    sol.candidates.push_back({p, value_at(p), points});
  }

  const auto best = std::max_element(
      sol.candidates.begin(), sol.candidates.end(),
      [](const EnvelopeCandidate& x, const EnvelopeCandidate& y) { return x.value < y.value; });
  sol.value = best->value;
  for (const auto& c : sol.candidates) {
    if (c.value == sol.value) sol.maximizers.push_back(c.p);
  }
  std::sort(sol.maximizers.begin(), sol.maximizers.end());
  sol.p_star = best->p;
  sol.l_star = best->points;

  sol.kernel_columns[0] = best_response(game, sol.partition, crossovers, sol.p_star);
  sol.kernel_columns[1] = sol.kernel_columns[0];
  for (std::size_t l : sol.l_star) sol.kernel_columns[1][l] = true;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) sol.kernel.a[i][j] = game.entry(i, sol.kernel_columns[j]);
  }

  sol.unique = sol.maximizers.size() == 1 && sol.l_star.size() == 1;
  sol.q_star = 0;
  if (!sol.l_star.empty()) {
    try {
      const KernelSolution k = solve_kernel_2x2(sol.kernel);
      sol.q_star = k.q;
      if (k.value != sol.value || k.p != sol.p_star) sol.unique = false;
    } catch (const DomainError&) {
      sol.unique = false;
    }
  }
  return sol;
}

}  // namespace baccara
