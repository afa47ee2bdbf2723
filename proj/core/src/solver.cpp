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
#include <sstream>
#include <stdexcept>

#include "baccara/errors.hpp"
#include "baccara/solver.hpp"

namespace baccara {
namespace {

using Column = std::vector<Rational>;  // payoff of every row against one column

struct MixedSolution {
  Rational q;  // weight on the second column
  Rational value;
  std::size_t row_a = 0;
  std::size_t row_b = 0;
  Rational weight_b;  // Player weight on row_b; row_a gets the rest
};

// Banker minimizes max_r (1 - q) c0[r] + q c1[r] over q in [0, 1].
MixedSolution solve_m_by_2(const Column& c0, const Column& c1) {
  const std::size_t m = c0.size();
  std::vector<Rational> slope(m);
  for (std::size_t r = 0; r < m; ++r) slope[r] = c1[r] - c0[r];
  auto f = [&](const Rational& q) {
    Rational best = c0[0] + q * slope[0];
    for (std::size_t r = 1; r < m; ++r) best = std::max(best, Rational(c0[r] + q * slope[r]));
    return best;
  };

  std::vector<Rational> candidates{Rational(0), Rational(1)};
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (slope[a] == slope[b]) continue;
      Rational q = (c0[b] - c0[a]) / (slope[a] - slope[b]);
      if (q > 0 && q < 1) candidates.push_back(std::move(q));
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  MixedSolution s;
  bool first = true;
  for (const auto& q : candidates) {
    Rational v = f(q);
    if (first || v < s.value) {
      s.value = std::move(v);
      s.q = q;
      first = false;
    }
  }

  // Active rows with extreme slopes give Player's equalizing mixture.
  std::optional<std::size_t> lo, hi;
  for (std::size_t r = 0; r < m; ++r) {
    if (c0[r] + s.q * slope[r] != s.value) continue;
    if (!lo || slope[r] < slope[*lo]) lo = r;
    if (!hi || slope[r] > slope[*hi]) hi = r;
  }
  if (s.q == 0 || slope[*lo] == slope[*hi] || sign(slope[*lo]) > 0) {
    s.row_a = s.row_b = s.q == 1 ? *lo : *hi;
    s.weight_b = 0;
  } else if (s.q == 1 || sign(slope[*hi]) < 0) {
    s.row_a = s.row_b = *lo;
    s.weight_b = 0;
  } else {
    s.row_a = *lo;
    s.row_b = *hi;
    s.weight_b = -slope[*lo] / (slope[*hi] - slope[*lo]);
  }
  return s;
}

Column column_payoffs(const PayoffBlocks& blocks, const MoveTable& table) {
  Column c(blocks.row_count());
  for (std::size_t r = 0; r < blocks.row_count(); ++r) c[r] = payoff_entry(blocks, r, table);
  return c;
}

std::optional<DecisionPoint> single_difference(const PayoffBlocks& blocks, const MoveTable& a,
                                               const MoveTable& b) {
  std::optional<DecisionPoint> found;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    if (found) return std::nullopt;
    found = blocks.points()[i];
  }
  return found;
}

// Kernel matrix, column labels and certificate for a solution whose player
// and banker fields are set.
void finalize(const ModelContext& ctx, GameSolution& s, const std::array<MoveTable, 2>& tables) {
  const PayoffBlocks& blocks = ctx.blocks;
  for (int i = 0; i < 2; ++i) {
    const std::size_t r = blocks.row_index(s.kernel.rows[i]);
    for (int j = 0; j < 2; ++j) s.kernel.matrix.a[i][j] = payoff_entry(blocks, r, tables[j]);
  }
  const ReducedGame reduced(blocks, ctx.table);
  for (int j = 0; j < 2; ++j) {
    try {
      const auto draws = reduced.restrict(tables[j]);
      s.kernel.column_bits[j] = column_bits(draws);
      s.kernel.column_numbers[j] = draws.size() <= 64 ? column_number(draws) : 0;
    } catch (const std::invalid_argument&) {
      s.kernel.column_bits[j].clear();
      s.kernel.column_numbers[j] = 0;
    }
  }
  if (!s.mixing_point) s.mixing_point = single_difference(blocks, tables[0], tables[1]);
  s.certificate = certify(s, blocks, ctx.table);
}

GameSolution from_mixed(const ModelContext& ctx, const MixedSolution& m,
                        const std::array<MoveTable, 2>& tables) {
  const PayoffBlocks& blocks = ctx.blocks;
  GameSolution s;
  s.deal = blocks.deal();
  s.info = blocks.info();
  PlayerMask a = blocks.rows()[m.row_a];
  PlayerMask b = blocks.rows()[m.row_b];
  Rational wb = m.weight_b;
  if (b < a) {
    std::swap(a, b);
    wb = 1 - wb;
  }
  s.kernel.rows = {a, b};
  if (a == b) {
    s.player = {{a, Rational(1)}};
    s.p = 0;
  } else {
    s.player = {{a, 1 - wb}, {b, wb}};
    s.p = wb;
  }
  s.q = m.q;
  s.value = m.value;
  if (m.q != 1) s.banker.push_back({tables[0], 1 - m.q});
  if (m.q != 0) s.banker.push_back({tables[1], m.q});
  finalize(ctx, s, tables);
  return s;
}

GameSolution from_envelope(const ModelContext& ctx, const ReducedGame& reduced,
                           const EnvelopeSolution& es, std::array<PlayerMask, 2> rows) {
  GameSolution s;
  s.deal = ctx.blocks.deal();
  s.info = ctx.blocks.info();
  s.p = es.p_star;
  s.q = es.q_star;
  s.value = es.value;
  s.player = {{rows[0], 1 - s.p}, {rows[1], s.p}};
  std::array<MoveTable, 2> tables{reduced.expand(es.kernel_columns[0]),
                                  reduced.expand(es.kernel_columns[1])};
  s.banker = {{tables[0], 1 - s.q}, {tables[1], s.q}};
  if (es.l_star.size() == 1) s.mixing_point = reduced.free_point(es.l_star[0]);
  s.kernel.rows = rows;
  finalize(ctx, s, tables);
  return s;
}

std::string describe_failure(const CertificateReport& c) {
  std::ostringstream out;
  out << "certificate failed: " << c.failing_rows.size() << " Player row(s) beat the value, "
      << c.failing_column_count << (c.failing_columns_truncated ? "+" : "")
      << " Banker column(s) beat the value";
  for (const auto& col : c.failing_columns) out << "\n  column " << column_bits(col);
  for (const auto& r : c.failing_rows) out << "\n  row " << r.bits();
  return out.str();
}

}  // namespace

ModelContext build_context(const DealModel& deal, InfoModel info) {
  PayoffBlocks blocks = build_blocks(deal, info);
  ClassificationTable table = classify(blocks);
  return ModelContext{std::move(blocks), std::move(table)};
}

GameSolution solve_against_columns(const ModelContext& ctx,
                                   const std::array<MoveTable, 2>& columns) {
  const Column c0 = column_payoffs(ctx.blocks, columns[0]);
  const Column c1 = column_payoffs(ctx.blocks, columns[1]);
  return from_mixed(ctx, solve_m_by_2(c0, c1), columns);
}

GameSolution repair_support(const ModelContext& ctx, std::array<MoveTable, 2> columns,
                            int max_rounds) {
  constexpr std::size_t kMaxCandidates = 32;
  const ReducedGame reduced(ctx.blocks, ctx.table);
  GameSolution current = solve_against_columns(ctx, columns);
  for (int round = 0; round < max_rounds && !current.certificate.ok(); ++round) {
    std::vector<std::vector<bool>> candidates;
    for (const auto& t : columns) {
      try {
        candidates.push_back(reduced.restrict(t));
      } catch (const std::invalid_argument&) {
      }
    }
    for (const auto& c : current.certificate.failing_columns) {
      if (candidates.size() >= kMaxCandidates) break;
      if (std::find(candidates.begin(), candidates.end(), c) == candidates.end()) {
        candidates.push_back(c);
      }
    }
    if (candidates.size() < 2) break;

    std::vector<Column> payoffs(candidates.size(), Column(reduced.row_count()));
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      for (std::size_t r = 0; r < reduced.row_count(); ++r) {
        payoffs[c][r] = reduced.entry(r, candidates[c]);
      }
    }
    std::optional<MixedSolution> best;
    std::size_t best_a = 0, best_b = 0;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      for (std::size_t b = a + 1; b < candidates.size(); ++b) {
        MixedSolution m = solve_m_by_2(payoffs[a], payoffs[b]);
        if (!best || m.value < best->value) {
          best = std::move(m);
          best_a = a;
          best_b = b;
        }
      }
    }
    std::array<MoveTable, 2> next{reduced.expand(candidates[best_a]),
                                  reduced.expand(candidates[best_b])};
    if (next == columns) break;
    columns = std::move(next);
    current = from_mixed(ctx, *best, columns);
  }
  if (!current.certificate.ok()) throw CertificationError(describe_failure(current.certificate));
  return current;
}

GameSolution solve_two_row_model(const ModelContext& ctx) {
  const ReducedGame reduced(ctx.blocks, ctx.table);
  const std::array<PlayerMask, 2> rows{ctx.blocks.rows()[0], ctx.blocks.rows()[1]};
  const EnvelopeSolution es = solve(reduced.two_row(0, 1));
  GameSolution s = from_envelope(ctx, reduced, es, rows);
  s.unique_claimed = true;
  if (!s.certificate.ok()) throw CertificationError(describe_failure(s.certificate));
  return s;
}

GameSolution solve_full_composition(const ModelContext& ctx, const SolveOptions& options) {
  const std::array<PlayerMask, 2> rows{PlayerMask(kKernelRowStandOnOneFour),
                                       PlayerMask(kKernelRowDrawOnOneFour)};
  const std::size_t r0 = ctx.blocks.row_index(rows[0]);
  const std::size_t r1 = ctx.blocks.row_index(rows[1]);
  const ClassificationTable restricted = classify(ctx.blocks, {r0, r1});
  const ReducedGame reduced(ctx.blocks, restricted);
  const EnvelopeSolution es = solve(reduced.two_row(r0, r1));
  GameSolution s = from_envelope(ctx, reduced, es, rows);
  if (!s.certificate.ok()) {
    s = repair_support(ctx, {reduced.expand(es.kernel_columns[0]),
                             reduced.expand(es.kernel_columns[1])},
                       options.max_repair_rounds);
  }
  s.unique_claimed = false;
  return s;
}

GameSolution solve_model(const ModelContext& ctx, const SolveOptions& options) {
  const InfoModel info = ctx.blocks.info();
  if (!ctx.blocks.deal().is_shoe() && info != InfoModel::TotalsOnly) {
    return canonical_replacement_solution(info);
  }
  if (info == InfoModel::FullComposition) return solve_full_composition(ctx, options);
  return solve_two_row_model(ctx);
}

GameSolution solve_model(const DealModel& deal, InfoModel info, const SolveOptions& options) {
  if (!deal.is_shoe() && info != InfoModel::TotalsOnly) {
    return canonical_replacement_solution(info);
  }
  return solve_model(build_context(deal, info), options);
}

std::vector<Rational> column_margins(const GameSolution& s, const PayoffBlocks& blocks,
                                     const std::vector<DecisionPoint>& labels) {
  if (s.banker.empty()) throw std::invalid_argument("solution has no Banker column");
  if (labels.size() > 16) throw std::invalid_argument("too many labeled points");
  std::vector<std::size_t> index;
  for (const auto& l : labels) index.push_back(blocks.point_index(l));
  std::vector<std::pair<std::size_t, Rational>> rows;
  for (const auto& c : s.player) rows.emplace_back(blocks.row_index(c.mask), c.weight);

  const std::size_t n = labels.size();
  std::vector<Rational> out;
  MoveTable table = s.banker.front().table;
  for (std::uint64_t col = 0; col < (std::uint64_t{1} << n); ++col) {
    for (std::size_t i = 0; i < n; ++i) {
      table[index[i]] = (col >> (n - 1 - i)) & 1 ? Move::Draw : Move::Stand;
    }
    Rational total = 0;
    for (const auto& [r, w] : rows) total += w * payoff_entry(blocks, r, table);
    out.push_back(total - s.value);
  }
  return out;
}

namespace {

// Canonical move on a contested point of the with-replacement game.
Move canonical_move(const DecisionPoint& point, bool second_column) {
  const HandPair& h = *point.hand;
  const int k = point.obs.slot();
  if (point.total == 3 && k == 9) return Move::Draw;
  if (point.total == 4 && k == 1) return Move::Stand;
  if (point.total == 5 && k == 4) return Move::Draw;
  if (point.total == 6 && k == 6) return Move::Draw;
  if (point.total == 6 && k == 10) {
    if (h == HandPair(8, 8)) return Move::Draw;
    if (h == HandPair(0, 6)) return second_column ? Move::Draw : Move::Stand;
    return Move::Stand;
  }
  throw std::logic_error("unexpected contested point " + point.to_string());
}

}  // namespace

GameSolution canonical_replacement_solution(InfoModel info) {
  if (info == InfoModel::TotalsOnly) {
    return solve_model(DealModel::with_replacement(), InfoModel::TotalsOnly);
  }
  const ModelContext ctx = build_context(DealModel::with_replacement(), info);
  const auto& points = ctx.blocks.points();
  std::array<MoveTable, 2> tables{MoveTable(points.size()), MoveTable(points.size())};
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Mark m = ctx.table.mark(i);
    for (int j = 0; j < 2; ++j) {
      tables[j][i] = m == Mark::Contested ? canonical_move(points[i], j == 1)
                                          : (m == Mark::Draw ? Move::Draw : Move::Stand);
    }
  }
  GameSolution s;
  s.deal = DealModel::with_replacement();
  s.info = info;
  if (info == InfoModel::BankerComposition) {
    s.kernel.rows = {PlayerMask::stand_on_five(), PlayerMask::draw_on_five()};
    s.p = make_rational(9, 11);
  } else {
    s.kernel.rows = {PlayerMask(kKernelRowStandOnOneFour), PlayerMask(kKernelRowDrawOnOneFour)};
    s.p = make_rational(6, 11);
  }
  s.player = {{s.kernel.rows[0], 1 - s.p}, {s.kernel.rows[1], s.p}};
  s.q = make_rational(179, 286);
  s.banker = {{tables[0], 1 - s.q}, {tables[1], s.q}};
  s.value = make_rational(-679568, 53094899);
  s.mixing_point = DecisionPoint::of_hand(HandPair(0, 6), ThirdCard::stand());
  finalize(ctx, s, tables);
  s.unique_claimed = false;
  return s;
}

}  // namespace baccara
