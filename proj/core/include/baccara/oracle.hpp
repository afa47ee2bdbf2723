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

#ifndef BACCARA_ORACLE_HPP_
#define BACCARA_ORACLE_HPP_

// Independent checks. Nothing here calls into the payoff, dominance or
// envelope modules.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "baccara/envelope.hpp"
#include "baccara/game_core.hpp"
#include "baccara/rational.hpp"
#include "baccara/solver.hpp"

namespace baccara::oracle {

// Monte Carlo dealer.

struct SimulationOptions {
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SimulationReport {
  std::uint64_t trials = 0;
  double mean = 0;
  double std_error = 0;
  std::optional<Rational> exact;
  double z = 0;  // (mean - exact) / std_error, when exact is known
  std::uint64_t naturals = 0;
  std::string rng = "mt19937_64";
};

// Deals complete coups with Player following `mask` on total 5 and Banker
// following `table` (indexed like the model's point space). Deterministic in
// the seed and independent of the thread count.
SimulationReport simulate_payoff(PlayerMask mask, const MoveTable& table, const DealModel& deal,
                                 InfoModel info, const SimulationOptions& options,
                                 std::optional<Rational> exact = std::nullopt);

// Exact enumeration of coups.

struct PointValues {
  Rational natural;                // contribution of coups ended by a natural
  std::vector<Rational> stand;     // per decision point, Banker standing
  std::vector<Rational> draw;      // per decision point, Banker drawing
};

// Player's expected gain split by Banker decision point, by direct
// enumeration of the dealt cards.
PointValues enumerate_point_values(PlayerMask mask, const DealModel& deal, InfoModel info);

Rational exact_payoff(const PointValues& values, const MoveTable& table);

// Brute-force solver for 2 x 2^n games.

struct BruteForceSolution {
  Rational value;
  Rational p;  // weight on row 1
  std::array<std::vector<bool>, 2> kernel_columns;
  Rational q;  // weight on kernel_columns[1]
  std::size_t columns = 0;
  std::size_t hull_size = 0;
};

// Refuses n > 16.
BruteForceSolution brute_force_solve_2xn(const TwoRowGame& game);

// Saddle-point check.

struct SaddleReport {
  Rational player_margin;  // min over all Banker tables, minus v
  Rational banker_margin;  // max over Player rows, minus v
  bool ok() const { return sign(player_margin) >= 0 && sign(banker_margin) <= 0; }
};

// Player rows checked are those of the model (0 and 31 under Models 1 and 2,
// all 32 under Model 3); Banker alternatives are all tables on the model's
// point space.
SaddleReport saddle_report(const DealModel& deal, InfoModel info,
                           const std::vector<PlayerComponent>& player,
                           const std::vector<BankerComponent>& banker, const Rational& v);

bool saddle_check(const DealModel& deal, InfoModel info,
                  const std::vector<PlayerComponent>& player,
                  const std::vector<BankerComponent>& banker, const Rational& v);

bool saddle_check(const GameSolution& solution);

}  // namespace baccara::oracle

#endif  // BACCARA_ORACLE_HPP_
