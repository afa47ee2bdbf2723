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

#ifndef BACCARA_SOLVER_HPP_
#define BACCARA_SOLVER_HPP_

// Per-model solution engine and exact optimality certificates.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "baccara/dominance.hpp"
#include "baccara/envelope.hpp"
#include "baccara/payoff.hpp"

namespace baccara {

struct PlayerComponent {
  PlayerMask mask;
  Rational weight;
};

struct BankerComponent {
  MoveTable table;  // indexed like the model's point space
  Rational weight;
};

struct LabeledKernel {
  Kernel2x2 matrix;
  std::array<PlayerMask, 2> rows;
  // Columns as bit strings over the model's contested points ('1' = draw),
  // and the same read as binary numbers.
  std::array<std::string, 2> column_bits;
  std::array<std::uint64_t, 2> column_numbers{};
};

struct CertificateReport {
  // min over Banker columns of (player mixture) . column - v. Must be >= 0.
  Rational player_margin;
  bool player_side_ok = false;
  // max over Player rows of row . (banker mixture) - v. Must be <= 0.
  Rational banker_margin;
  bool banker_side_ok = false;

  std::vector<PlayerMask> failing_rows;
  // Reduced-game columns (over the contested points) that beat the claimed
  // value against Player's mixture, up to a cap.
  std::vector<std::vector<bool>> failing_columns;
  std::size_t failing_column_count = 0;
  bool failing_columns_truncated = false;

  bool ok() const { return player_side_ok && banker_side_ok; }
};

struct GameSolution {
  DealModel deal = DealModel::with_replacement();
  InfoModel info = InfoModel::TotalsOnly;
  std::vector<PlayerComponent> player;
  std::vector<BankerComponent> banker;
  Rational value;
  Rational p;  // weight on the second kernel row
  Rational q;  // weight on the second kernel column
  std::optional<DecisionPoint> mixing_point;
  LabeledKernel kernel;
  CertificateReport certificate;
  bool unique_claimed = false;

  std::string model() const { return model_name(deal, info); }
};

// Everything the solver builds for one model.
struct ModelContext {
  PayoffBlocks blocks;
  ClassificationTable table;
};

ModelContext build_context(const DealModel& deal, InfoModel info);

// Draw probability at a point under the Banker mixture.
Rational banker_draw_probability(const GameSolution& s, std::size_t point);
// Draw probability on a free total-5 hand (position 0..4) under the Player
// mixture.
Rational player_draw_probability(const GameSolution& s, int position);

// Exact saddle-point test against the full game described by the blocks.
// The Player side decomposes per point, so no column enumeration is needed
// except to list failing columns (at most max_failing_columns).
CertificateReport certify(const GameSolution& solution, const PayoffBlocks& blocks,
                          const ClassificationTable& table,
                          std::size_t max_failing_columns = 256);

struct SolveOptions {
  int max_repair_rounds = 8;
};

// Solves a model. Throws CertificationError when no certified solution is
// found; the message lists the failing components.
GameSolution solve_model(const DealModel& deal, InfoModel info, const SolveOptions& options = {});
GameSolution solve_model(const ModelContext& context, const SolveOptions& options = {});

// Fixes two Banker columns and solves the resulting (rows x 2) game exactly,
// then certifies against the full game. This is how a candidate Banker
// support is tested.
GameSolution solve_against_columns(const ModelContext& context,
                                   const std::array<MoveTable, 2>& columns);

// Starting from a candidate Banker support, replaces it with the columns
// that break Player's side of the certificate until one certifies.
GameSolution repair_support(const ModelContext& context, std::array<MoveTable, 2> columns,
                            int max_rounds);

// The B2-style solution: rows {0, 31}, lower envelope over the contested
// points. Used for information models 1 and 2.
GameSolution solve_two_row_model(const ModelContext& context);

// Player rows {19, 27}, reduced by their own dominance relation and solved by
// the envelope algorithm, then certified against all 32 rows.
GameSolution solve_full_composition(const ModelContext& context, const SolveOptions& options);

// Kernel rows used for the full-composition model.
// Margins (Player mixture . column - v) for every column obtained from the
// first Banker component by overwriting the labeled points, enumerated with
// the first label as the most significant bit.
std::vector<Rational> column_margins(const GameSolution& solution, const PayoffBlocks& blocks,
                                     const std::vector<DecisionPoint>& labels);

inline constexpr int kKernelRowStandOnOneFour = 19;  // 10011
inline constexpr int kKernelRowDrawOnOneFour = 27;   // 11011

// Closed-form solutions (piecewise in d) for the shoe models, evaluated
// without solving. The Banker mixture and the Player mixture are built from
// the final move tables.
GameSolution closed_form(InfoModel info, std::int64_t decks);

// Final Banker move at a point for a shoe model: Draw, Stand, or Contested
// meaning the mixing point.
Mark final_banker_move(InfoModel info, std::int64_t decks, const DecisionPoint& point);

// ---- Models A2 and A3 ---------------------------------------------------

// The singled-out optimal pair: Player mixes with probability 9/11 on total 5
// (A2) or on (1,4) with 6/11 (A3); Banker mixes (0,6) on ∅ with 179/286.
GameSolution canonical_replacement_solution(InfoModel info);

struct MixturePair {
  int low = 0;   // class below the target
  int high = 0;  // class above the target
  Rational weight_high;
};

struct ExtremeEquilibria {
  std::vector<MixturePair> player_pairs;  // classes i/8 (empty for A2)
  std::vector<MixturePair> banker_pairs;  // classes j/16
  std::size_t count = 0;
};

// Extreme optimal strategies of the duplicate-reduced A2/A3 game. Each
// Player pair and each Banker pair is checked for optimality exactly.
ExtremeEquilibria enumerate_extreme_equilibria(InfoModel info);

struct DedupStructure {
  std::vector<std::vector<PlayerMask>> row_classes;  // index = 8 * draw weight
  std::vector<std::size_t> group_class_counts;       // per contested group
  std::size_t column_class_count = 0;
};

// Groups A3 rows into equal-payoff classes and counts the distinct column
// payoffs. Throws std::logic_error if a class has unequal members.
DedupStructure dedup_structure_A3();

// Draw weight (4u1 + u2 + u3 + u4 + u5) / 8 of a mask.
Rational draw_weight(PlayerMask mask);

}  // namespace baccara

#endif  // BACCARA_SOLVER_HPP_
