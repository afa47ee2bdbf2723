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

#ifndef BACCARA_CLI_RENDER_HPP_
#define BACCARA_CLI_RENDER_HPP_

#include <string>
#include <vector>

#include "baccara/dominance.hpp"
#include "baccara/solver.hpp"

namespace baccara::cli {

// One cell string per point, in the order of `points`.
using CellMap = std::vector<std::string>;

// D/S/* grid in the layout of the preliminary tables: one row per hand for
// totals 3-6 (composition models) or per total (Model 1); totals 0-2 and 7
// collapse into one row when uniform.
std::string classification_grid(const std::vector<DecisionPoint>& points, const CellMap& cells);

// Final Banker table: one row per total, cells that vary by hand point to a
// numbered footnote listing the hands per move.
std::string banker_grid(const std::vector<DecisionPoint>& points, const CellMap& cells);

// "D", "S" or "(S,D)" per point for a solution.
CellMap banker_cells(const GameSolution& solution);

CellMap classification_cells(const ClassificationTable& table);

// Rows of (hands, move) for Player's total-5 hands.
std::vector<std::pair<std::string, std::string>> player_moves(const GameSolution& solution);

// "(0,6) on Player stand", "(8,8) on Player third card 4", "total 6 on ...".
std::string describe_point(const DecisionPoint& point);

}  // namespace baccara::cli

#endif  // BACCARA_CLI_RENDER_HPP_
