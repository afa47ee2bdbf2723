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

#ifndef BACCARA_ENVELOPE_HPP_
#define BACCARA_ENVELOPE_HPP_

// Lower-envelope algorithm for 2 x 2^n games of the form
//
//   a_{i,T} = e_i(0) + sum_{l in T} e_{i,1}(l) + sum_{l not in T} e_{i,0}(l),
//
// where the column player picks the set T of points at which to play move 1.
// Against the row mixture (1-p, p) the best response is pointwise, so the
// lower envelope V(p) is piecewise linear with breakpoints only at the
// per-point crossovers p(l).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "baccara/rational.hpp"

namespace baccara {

// e-values of one free point: e_{i,j} for row i and move j.
struct PointEvalues {
  Rational e00, e01, e10, e11;
};

struct TwoRowGame {
  Rational e0;  // e_0(0): row-0 contribution outside the free points
  Rational e1;
  std::vector<PointEvalues> points;
  std::vector<std::string> labels;  // optional, one per point

  std::size_t size() const { return points.size(); }
  std::string label(std::size_t l) const;
  // a_{i,T} for the column drawing on `draws`.
  Rational entry(int row, const std::vector<bool>& draws) const;
};

enum class Cell { T00, T01, T10, T11 };

struct Partition {
  std::vector<Cell> cells;  // one per point
  std::vector<std::size_t> t00, t01, t10, t11;
};

// Throws TieError if e00 == e01 or e10 == e11 at some point.
Partition partition(const TwoRowGame& game);

// p(l) at which both moves give the same expected value against (1-p, p).
// Throws DomainError if the denominator vanishes.
Rational crossover(const PointEvalues& e);

// T(p): one flag per point, true where move 1 is the strict best response
// (ties resolve to move 0, as in T(p)'s strict inequalities).
std::vector<bool> best_response(const TwoRowGame& game, const Rational& p);

// V(p) = min over columns of (1-p) a_{0,T} + p a_{1,T}.
Rational envelope_value(const TwoRowGame& game, const Rational& p);

struct Kernel2x2 {
  std::array<std::array<Rational, 2>, 2> a;
};

struct KernelSolution {
  Rational p;  // weight on row 1
  Rational q;  // weight on column 1
  Rational value;
};

// Equalizing strategies of a 2x2 game without a pure saddle point. Throws
// DomainError if either equalizer falls outside the open unit interval.
KernelSolution solve_kernel_2x2(const Kernel2x2& kernel);

struct EnvelopeCandidate {
  Rational p;
  Rational value;
  std::vector<std::size_t> points;  // points whose crossover is p; empty for 0, 1
};

struct EnvelopeSolution {
  Partition partition;
  Rational p_star;
  std::vector<std::size_t> l_star;     // crossover points at p_star
  std::array<std::vector<bool>, 2> kernel_columns;  // T(p*), T(p*) + l*
  Kernel2x2 kernel;
  Rational q_star;  // weight on kernel_columns[1]
  Rational value;
  std::vector<EnvelopeCandidate> candidates;  // V(0), V(1), then crossovers ascending
  std::vector<Rational> maximizers;
  bool unique = false;
};

EnvelopeSolution solve(const TwoRowGame& game);

}  // namespace baccara

#endif  // BACCARA_ENVELOPE_HPP_
