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

#include "baccara_cli/json_io.hpp"

#include <stdexcept>

#include "baccara_cli/render.hpp"

namespace baccara::cli {
namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw std::invalid_argument(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::pair<DealModel, InfoModel> model_of(const std::string& name, const Json& decks) {
  if (name.size() != 2 || (name[0] != 'A' && name[0] != 'B') || name[1] < '1' || name[1] > '3') {
    throw std::invalid_argument("unknown model '" + name + "'");
  }
  const InfoModel info = static_cast<InfoModel>(name[1] - '0');
  if (name[0] == 'A') {
    if (!decks.is_null()) throw std::invalid_argument("A models take no decks");
    return {DealModel::with_replacement(), info};
  }
  if (!decks.is_number_integer() || decks.get<std::int64_t>() < 1) {
    throw std::invalid_argument("decks must be a positive integer");
  }
  return {DealModel::shoe(decks.get<std::int64_t>()), info};
}

}  // namespace

Json rational_json(const Rational& r) {
  return Json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

Rational rational_from_json(const Json& j) {
  const Json& num = field(j, "num");
  const Json& den = field(j, "den");
  if (!num.is_string() || !den.is_string()) throw std::invalid_argument("rational parts must be strings");
  return parse_rational(num.get<std::string>() + "/" + den.get<std::string>());
}

Json certificate_json(const CertificateReport& c) {
  Json rows = Json::array();
  for (const auto& r : c.failing_rows) rows.push_back(r.bits());
  Json cols = Json::array();
  for (const auto& col : c.failing_columns) cols.push_back(column_bits(col));
  return Json{{"ok", c.ok()},
              {"player_side_ok", c.player_side_ok},
              {"player_margin", rational_json(c.player_margin)},
              {"banker_side_ok", c.banker_side_ok},
              {"banker_margin", rational_json(c.banker_margin)},
              {"failing_rows", rows},
              {"failing_column_count", c.failing_column_count},
              {"failing_columns_truncated", c.failing_columns_truncated},
              {"failing_columns", cols}};
}

Json solution_json(const GameSolution& s) {
  Json j;
  j["model"] = s.model();
  j["decks"] = s.deal.is_shoe() ? Json(s.deal.decks()) : Json(nullptr);
  j["p"] = rational_json(s.p);
  j["q"] = rational_json(s.q);
  j["value"] = rational_json(s.value);
  j["value_text"] = to_string(s.value);

  Json player = Json::array();
  for (const auto& c : s.player) {
    player.push_back({{"mask", c.mask.bits()}, {"binary", c.mask.binary()}, {"weight", rational_json(c.weight)}});
  }
  j["player"] = player;
  Json moves = Json::array();
  for (const auto& [hands, move] : player_moves(s)) moves.push_back({{"hands", hands}, {"move", move}});
  j["player_moves"] = moves;

  const auto& points = s.info == InfoModel::TotalsOnly ? total_decision_points() : hand_decision_points();
  const CellMap cells = banker_cells(s);
  Json table = Json::object();
  for (std::size_t i = 0; i < points.size(); ++i) table[points[i].to_string()] = cells[i];
  Json banker;
  banker["forced_table"] = table;
  banker["mixing_point"] = s.mixing_point ? Json(s.mixing_point->to_string()) : Json(nullptr);
  banker["mixing_point_text"] = s.mixing_point ? Json(describe_point(*s.mixing_point)) : Json(nullptr);
  banker["q"] = rational_json(s.q);
  j["banker"] = banker;

  Json kernel;
  kernel["rows"] = {s.kernel.rows[0].bits(), s.kernel.rows[1].bits()};
  Json cols = Json::array();
  for (int c = 0; c < 2; ++c) {
    cols.push_back({{"bits", s.kernel.column_bits[c]}, {"decimal", s.kernel.column_numbers[c]}});
  }
  kernel["columns"] = cols;
  Json matrix = Json::array();
  for (const auto& row : s.kernel.matrix.a) matrix.push_back({rational_json(row[0]), rational_json(row[1])});
  kernel["matrix"] = matrix;
  j["kernel"] = kernel;
  j["certificate"] = certificate_json(s.certificate);
  j["unique_claimed"] = s.unique_claimed;
  return j;
}

GameSolution solution_from_json(const Json& j) {
  const Json& model = field(j, "model");
  if (!model.is_string()) throw std::invalid_argument("model must be a string");
  const auto [deal, info] = model_of(model.get<std::string>(), j.contains("decks") ? j.at("decks") : Json(nullptr));

  GameSolution s;
  s.deal = deal;
  s.info = info;
  s.value = rational_from_json(field(j, "value"));

  const Json& player = field(j, "player");
  if (!player.is_array() || player.empty()) throw std::invalid_argument("player must be a non-empty array");
  Rational total = 0;
  for (const auto& c : player) {
    const Json& mask = field(c, "mask");
    if (!mask.is_number_integer()) throw std::invalid_argument("mask must be an integer");
    const int bits = mask.get<int>();
    if (bits < 0 || bits >= PlayerMask::kCount) throw std::invalid_argument("mask out of range");
    if (info != InfoModel::FullComposition && bits != 0 && bits != 31) {
      throw std::invalid_argument("Models 1 and 2 only allow masks 0 and 31");
    }
    Rational w = rational_from_json(field(c, "weight"));
    if (w < 0) throw std::invalid_argument("negative Player weight");
    total += w;
    s.player.push_back({PlayerMask(bits), std::move(w)});
  }
  if (total != 1) throw std::invalid_argument("Player weights must sum to 1");

  const Json& banker = field(j, "banker");
  const Json& table = field(banker, "forced_table");
  if (!table.is_object()) throw std::invalid_argument("forced_table must be an object");
  const auto& points = info == InfoModel::TotalsOnly ? total_decision_points() : hand_decision_points();
  if (table.size() != points.size()) throw std::invalid_argument("forced_table must list every decision point");
  std::array<MoveTable, 2> tables{MoveTable(points.size()), MoveTable(points.size())};
  bool mixed = false;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string key = points[i].to_string();
    if (!table.contains(key)) throw std::invalid_argument("forced_table lacks " + key);
    const Json& cell = table.at(key);
    if (!cell.is_string()) throw std::invalid_argument("forced_table cells must be strings");
    const std::string v = cell.get<std::string>();
    if (v == "D" || v == "S") {
      tables[0][i] = tables[1][i] = v == "D" ? Move::Draw : Move::Stand;
    } else if (v == "(S,D)") {
      tables[0][i] = Move::Stand;
      tables[1][i] = Move::Draw;
      mixed = true;
      if (!s.mixing_point) s.mixing_point = points[i];
    } else {
      throw std::invalid_argument("bad move '" + v + "' at " + key);
    }
  }
  if (mixed) {
    s.q = rational_from_json(field(banker, "q"));
    if (s.q < 0 || s.q > 1) throw std::invalid_argument("q must lie in [0, 1]");
    s.banker = {{tables[0], 1 - s.q}, {tables[1], s.q}};
  } else {
    s.q = 0;
    s.banker = {{tables[0], Rational(1)}};
  }
  s.p = s.player.back().weight;
  return s;
}

}  // namespace baccara::cli
