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

#include "baccara_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "baccara/errors.hpp"
#include "baccara/oracle.hpp"
#include "baccara/solver.hpp"
#include "baccara_cli/json_io.hpp"
#include "baccara_cli/render.hpp"

namespace baccara::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VerifyFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Markdown };

struct CommonArgs {
  std::string model;
  std::optional<std::int64_t> decks;
  std::string format = "markdown";
  std::optional<std::int64_t> max_decks;
};

struct Model {
  DealModel deal = DealModel::with_replacement();
  InfoModel info = InfoModel::TotalsOnly;
  Format format = Format::Markdown;

  std::string name() const { return model_name(deal, info); }
  std::string title() const {
    if (!deal.is_shoe()) return "Model " + name();
    const auto d = deal.decks();
    return "Model " + name() + ", " + std::to_string(d) + (d == 1 ? " deck" : " decks");
  }
  Json decks_json() const { return deal.is_shoe() ? Json(deal.decks()) : Json(nullptr); }
};

std::int64_t deck_cap(const CommonArgs& a) {
  if (a.max_decks) {
    if (*a.max_decks < 1) throw UsageError("--max-decks must be positive");
    return *a.max_decks;
  }
  if (const char* env = std::getenv("BACCARA_MAX_DECKS")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) throw UsageError("BACCARA_MAX_DECKS must be a positive integer");
    return v;
  }
  return kDefaultMaxDecks;
}

Format parse_format(const std::string& f) {
  if (f == "json") return Format::Json;
  if (f == "csv") return Format::Csv;
  return Format::Markdown;
}

Model resolve(const std::string& name, std::optional<std::int64_t> decks, const CommonArgs& a) {
  if (name.size() != 2 || (name[0] != 'A' && name[0] != 'B') || name[1] < '1' || name[1] > '3') {
    throw UsageError("unknown model '" + name + "' (expected A1, A2, A3, B1, B2 or B3)");
  }
  Model m;
  m.info = static_cast<InfoModel>(name[1] - '0');
  m.format = parse_format(a.format);
  if (name[0] == 'A') {
    if (decks) throw UsageError("Model " + name + " deals with replacement and takes no --decks");
    return m;
  }
  if (!decks) throw UsageError("Model " + name + " requires --decks");
  if (*decks < 1) throw UsageError("--decks must be a positive integer");
  const std::int64_t cap = deck_cap(a);
  if (*decks > cap) {
    throw UsageError("--decks " + std::to_string(*decks) + " exceeds the cap of " + std::to_string(cap) +
                     " (raise it with --max-decks or BACCARA_MAX_DECKS)");
  }
  m.deal = DealModel::shoe(*decks);
  return m;
}

Model resolve(const CommonArgs& a) { return resolve(a.model, a.decks, a); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_row(std::ostream& out, std::initializer_list<std::string> fields) {
  bool first = true;
  for (const auto& f : fields) {
    out << (first ? "" : ",") << csv_field(f);
    first = false;
  }
  out << '\n';
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

const std::vector<DecisionPoint>& points_of(InfoModel info) {
  return info == InfoModel::TotalsOnly ? total_decision_points() : hand_decision_points();
}

// solve

void print_solution(const Model& m, const GameSolution& s, std::ostream& out) {
  if (m.format == Format::Json) {
    out << solution_json(s).dump(2) << '\n';
    return;
  }
  const auto& points = points_of(s.info);
  const CellMap cells = banker_cells(s);
  const std::string mixing = s.mixing_point ? describe_point(*s.mixing_point) : "none";
  if (m.format == Format::Csv) {
    out << "section,key,value\n";
    csv_row(out, {"summary", "model", s.model()});
    csv_row(out, {"summary", "decks", s.deal.is_shoe() ? std::to_string(s.deal.decks()) : ""});
    csv_row(out, {"summary", "value", to_string(s.value)});
    csv_row(out, {"summary", "p", to_string(s.p)});
    csv_row(out, {"summary", "q", to_string(s.q)});
    csv_row(out, {"summary", "mixing_point", s.mixing_point ? s.mixing_point->to_string() : ""});
    csv_row(out, {"summary", "certificate", s.certificate.ok() ? "pass" : "fail"});
    for (const auto& c : s.player) csv_row(out, {"player", c.mask.binary(), to_string(c.weight)});
    for (const auto& [hands, move] : player_moves(s)) csv_row(out, {"player_move", hands, move});
    for (std::size_t i = 0; i < points.size(); ++i) csv_row(out, {"banker", points[i].to_string(), cells[i]});
    return;
  }
  out << "# " << m.title() << "\n\n";
  out << "| quantity | value |\n|---|---|\n";
  out << "| value | " << to_string(s.value) << " |\n";
  out << "| p | " << to_string(s.p) << " |\n";
  out << "| q | " << to_string(s.q) << " |\n";
  out << "| mixing point | " << mixing << " |\n";
  out << "| unique (claimed) | " << yes_no(s.unique_claimed) << " |\n\n";
  out << "## Player\n\n| hands | move |\n|---|---|\n";
  for (const auto& [hands, move] : player_moves(s)) out << "| " << hands << " | " << move << " |\n";
  out << "\nMixture:";
  for (const auto& c : s.player) out << ' ' << c.mask.binary() << " (row " << c.mask.bits() << ") w.p. " << to_string(c.weight) << ';';
  out << "\n\n## Banker\n\n" << banker_grid(points, cells);
  out << "\n(S,D): stand with probability 1-q, draw with probability q.\n\n";
  out << "## Kernel\n\n| row | " << s.kernel.column_bits[0] << " (" << s.kernel.column_numbers[0] << ") | "
      << s.kernel.column_bits[1] << " (" << s.kernel.column_numbers[1] << ") |\n|---|---|---|\n";
  for (int r = 0; r < 2; ++r) {
    out << "| " << s.kernel.rows[r].bits() << " | " << to_string(s.kernel.matrix.a[r][0]) << " | "
        << to_string(s.kernel.matrix.a[r][1]) << " |\n";
  }
  out << "\n## Certificate\n\n| side | ok | worst margin |\n|---|---|---|\n";
  out << "| Player | " << yes_no(s.certificate.player_side_ok) << " | " << to_string(s.certificate.player_margin) << " |\n";
  out << "| Banker | " << yes_no(s.certificate.banker_side_ok) << " | " << to_string(s.certificate.banker_margin) << " |\n";
}

int cmd_solve(const CommonArgs& a, std::ostream& out) {
  const Model m = resolve(a);
  const GameSolution s = solve_model(m.deal, m.info);
  print_solution(m, s, out);
  return s.certificate.ok() ? kExitOk : kExitVerifyFailed;
}

// classify

int cmd_classify(const CommonArgs& a, std::ostream& out) {
  const Model m = resolve(a);
  const ModelContext ctx = build_context(m.deal, m.info);
  const auto& points = ctx.blocks.points();
  const CellMap cells = classification_cells(ctx.table);
  if (m.format == Format::Json) {
    Json j;
    j["model"] = m.name();
    j["decks"] = m.decks_json();
    j["n"] = ctx.table.contested_count();
    Json contested = Json::array();
    for (const auto& p : contested_points(ctx.table)) contested.push_back(p.to_string());
    j["contested"] = contested;
    Json table = Json::object();
    for (std::size_t i = 0; i < points.size(); ++i) table[points[i].to_string()] = cells[i];
    j["table"] = table;
    out << j.dump(2) << '\n';
  } else if (m.format == Format::Csv) {
    out << "point,mark\n";
    for (std::size_t i = 0; i < points.size(); ++i) csv_row(out, {points[i].to_string(), cells[i]});
  } else {
    out << "# Preliminary Banker moves, " << m.title() << "\n\n";
    out << "n = " << ctx.table.contested_count() << "\n\n";
    out << classification_grid(points, cells);
  }
  return kExitOk;
}

// verify

struct Verification {
  std::string source;
  GameSolution solution;
  bool saddle = false;
  std::vector<DecisionPoint> contested;
};

void print_verification(const Model& m, const Verification& v, std::ostream& out) {
  const CertificateReport& c = v.solution.certificate;
  const bool ok = c.ok() && v.saddle;
  if (m.format == Format::Json) {
    Json j;
    j["model"] = m.name();
    j["decks"] = m.decks_json();
    j["source"] = v.source;
    j["value"] = rational_json(v.solution.value);
    j["certificate"] = certificate_json(c);
    j["saddle_check"] = v.saddle;
    Json contested = Json::array();
    for (const auto& p : v.contested) contested.push_back(p.to_string());
    j["contested"] = contested;
    j["ok"] = ok;
    out << j.dump(2) << '\n';
    return;
  }
  if (m.format == Format::Csv) {
    out << "key,value\n";
    csv_row(out, {"model", m.name()});
    csv_row(out, {"source", v.source});
    csv_row(out, {"value", to_string(v.solution.value)});
    csv_row(out, {"player_side_ok", yes_no(c.player_side_ok)});
    csv_row(out, {"player_margin", to_string(c.player_margin)});
    csv_row(out, {"banker_side_ok", yes_no(c.banker_side_ok)});
    csv_row(out, {"banker_margin", to_string(c.banker_margin)});
    csv_row(out, {"failing_column_count", std::to_string(c.failing_column_count)});
    for (const auto& col : c.failing_columns) csv_row(out, {"failing_column", column_bits(col)});
    for (const auto& r : c.failing_rows) csv_row(out, {"failing_row", r.binary()});
    csv_row(out, {"saddle_check", yes_no(v.saddle)});
    csv_row(out, {"ok", yes_no(ok)});
    return;
  }
  out << "# Verification, " << m.title() << " (" << v.source << ")\n\n";
  out << "value " << to_string(v.solution.value) << "\n\n";
  out << "| check | ok | worst margin |\n|---|---|---|\n";
  out << "| Player side | " << yes_no(c.player_side_ok) << " | " << to_string(c.player_margin) << " |\n";
  out << "| Banker side | " << yes_no(c.banker_side_ok) << " | " << to_string(c.banker_margin) << " |\n";
  out << "| saddle check (direct enumeration) | " << yes_no(v.saddle) << " | |\n\n";
  if (c.failing_column_count > 0) {
    out << "Banker columns beating the value: " << c.failing_column_count
        << (c.failing_columns_truncated ? "+" : "") << "\n\n";
    out << "Bit order:";
    for (const auto& p : v.contested) out << ' ' << p.to_string();
    out << "\n\n";
    for (const auto& col : c.failing_columns) out << "- " << column_bits(col) << '\n';
    out << '\n';
  }
  if (!c.failing_rows.empty()) {
    out << "Player rows beating the value:";
    for (const auto& r : c.failing_rows) out << ' ' << r.binary();
    out << "\n\n";
  }
  out << (ok ? "PASS" : "FAIL") << '\n';
}

int cmd_verify(const CommonArgs& a, const std::optional<std::string>& file,
               const std::optional<std::string>& banker_from, std::ostream& out) {
  if (file && banker_from) throw UsageError("--solution and --banker-from-model are exclusive");
  Verification v;
  Model m;
  if (file) {
    std::ifstream in(*file);
    if (!in) throw UsageError("cannot read " + *file);
    Json doc;
    try {
      doc = Json::parse(in);
      v.solution = solution_from_json(doc);
    } catch (const Json::exception& e) {
      throw UsageError(std::string("malformed solution file: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("malformed solution file: ") + e.what());
    }
    const GameSolution& s = v.solution;
    m = resolve(s.model(), s.deal.is_shoe() ? std::optional<std::int64_t>(s.deal.decks()) : std::nullopt, a);
    if (!a.model.empty() && a.model != m.name()) throw UsageError("--model disagrees with the solution file");
    if (a.decks && (!s.deal.is_shoe() || *a.decks != s.deal.decks())) {
      throw UsageError("--decks disagrees with the solution file");
    }
    v.source = "file " + *file;
  } else {
    if (a.model.empty()) throw UsageError("--model is required");
    m = resolve(a);
  }

  const ModelContext ctx = build_context(m.deal, m.info);
  v.contested = contested_points(ctx.table);
  if (file) {
    v.solution.certificate = certify(v.solution, ctx.blocks, ctx.table);
  } else if (banker_from) {
    const Model src = resolve(*banker_from, m.deal.is_shoe() ? std::optional<std::int64_t>(m.deal.decks()) : std::nullopt, a);
    if (src.info == InfoModel::TotalsOnly || m.info == InfoModel::TotalsOnly) {
      throw UsageError("--banker-from-model needs composition models on both sides");
    }
    const GameSolution source = solve_model(src.deal, src.info);
    if (source.banker.size() != 2) throw UsageError("source model has a pure Banker solution");
    v.solution = solve_against_columns(ctx, {source.banker[0].table, source.banker[1].table});
    v.source = "Banker kernel columns of " + src.name();
  } else {
    v.solution = solve_model(ctx);
    v.source = "built-in solution";
  }
  v.saddle = oracle::saddle_check(v.solution);
  print_verification(m, v, out);
  return v.solution.certificate.ok() && v.saddle ? kExitOk : kExitVerifyFailed;
}

// enumerate

int cmd_enumerate(const CommonArgs& a, std::ostream& out) {
  const Model m = resolve(a);
  if (m.deal.is_shoe() || m.info == InfoModel::TotalsOnly) {
    throw UsageError("enumerate applies to Models A2 and A3");
  }
  const ExtremeEquilibria e = enumerate_extreme_equilibria(m.info);
  auto pairs_json = [](const std::vector<MixturePair>& pairs) {
    Json arr = Json::array();
    for (const auto& p : pairs) arr.push_back({{"low", p.low}, {"high", p.high}, {"weight_high", rational_json(p.weight_high)}});
    return arr;
  };
  if (m.format == Format::Json) {
    Json j;
    j["model"] = m.name();
    j["player_pair_count"] = e.player_pairs.size();
    j["banker_pair_count"] = e.banker_pairs.size();
    j["count"] = e.count;
    j["player_pairs"] = pairs_json(e.player_pairs);
    j["banker_pairs"] = pairs_json(e.banker_pairs);
    out << j.dump(2) << '\n';
  } else if (m.format == Format::Csv) {
    out << "side,low,high,weight_high\n";
    for (const auto& p : e.player_pairs) {
      csv_row(out, {"player", std::to_string(p.low) + "/8", std::to_string(p.high) + "/8", to_string(p.weight_high)});
    }
    for (const auto& p : e.banker_pairs) {
      csv_row(out, {"banker", std::to_string(p.low) + "/16", std::to_string(p.high) + "/16", to_string(p.weight_high)});
    }
  } else {
    out << "# Extreme optimal strategy pairs, " << m.title() << "\n\n";
    out << "| side | pairs |\n|---|---|\n";
    if (m.info == InfoModel::FullComposition) out << "| Player (i/8, i'/8) | " << e.player_pairs.size() << " |\n";
    out << "| Banker (j/16, j'/16) | " << e.banker_pairs.size() << " |\n";
    out << "| equilibria | " << e.count << " |\n";
    if (!e.player_pairs.empty()) {
      out << "\n## Player\n\n| low | high | weight on high |\n|---|---|---|\n";
      for (const auto& p : e.player_pairs) out << "| " << p.low << "/8 | " << p.high << "/8 | " << to_string(p.weight_high) << " |\n";
    }
    out << "\n## Banker\n\n| low | high | weight on high |\n|---|---|---|\n";
    for (const auto& p : e.banker_pairs) out << "| " << p.low << "/16 | " << p.high << "/16 | " << to_string(p.weight_high) << " |\n";
  }
  return kExitOk;
}

// simulate

struct SimulateArgs {
  int mask = 31;
  std::optional<std::string> table_file;
  int column = 0;
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

int cmd_simulate(const CommonArgs& a, const SimulateArgs& sa, std::ostream& out) {
  const Model m = resolve(a);
  if (sa.mask < 0 || sa.mask >= PlayerMask::kCount) throw UsageError("--mask must lie in 0..31");
  if (m.info != InfoModel::FullComposition && sa.mask != 0 && sa.mask != 31) {
    throw UsageError("Models 1 and 2 only allow masks 0 and 31");
  }
  if (sa.trials < 1) throw UsageError("--trials must be positive");

  GameSolution s;
  std::string table_source;
  if (sa.table_file) {
    std::ifstream in(*sa.table_file);
    if (!in) throw UsageError("cannot read " + *sa.table_file);
    try {
      s = solution_from_json(Json::parse(in));
    } catch (const Json::exception& e) {
      throw UsageError(std::string("malformed table file: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("malformed table file: ") + e.what());
    }
    if (s.model() != m.name() || (s.deal.is_shoe() && s.deal.decks() != m.deal.decks())) {
      throw UsageError("table file is for a different model");
    }
    table_source = *sa.table_file;
  } else {
    s = solve_model(m.deal, m.info);
    table_source = "built-in solution";
  }
  if (sa.column < 0 || static_cast<std::size_t>(sa.column) >= s.banker.size()) {
    throw UsageError("--column must index a Banker component");
  }
  const MoveTable& table = s.banker[sa.column].table;
  const PlayerMask mask(sa.mask);
  const PayoffBlocks blocks = build_blocks(m.deal, m.info);
  const std::size_t row = blocks.row_index(mask);
  const Rational exact = payoff_entry(blocks, row, table);
  const Rational natural_share = 1 - blocks.total_prob(row);

  const oracle::SimulationReport r =
      oracle::simulate_payoff(mask, table, m.deal, m.info, {sa.trials, sa.seed, sa.threads}, exact);
  const double nat_frac = static_cast<double>(r.naturals) / static_cast<double>(r.trials);
  const double nat_p = to_double(natural_share);
  const double nat_z = (nat_frac - nat_p) / std::sqrt(nat_p * (1 - nat_p) / static_cast<double>(r.trials));
  const bool within = std::abs(r.z) <= 4;

  if (m.format == Format::Json) {
    Json j;
    j["model"] = m.name();
    j["decks"] = m.decks_json();
    j["mask"] = sa.mask;
    j["table"] = table_source;
    j["column"] = sa.column;
    j["trials"] = r.trials;
    j["seed"] = sa.seed;
    j["rng"] = r.rng;
    j["mean"] = r.mean;
    j["std_error"] = r.std_error;
    j["exact"] = rational_json(exact);
    j["exact_decimal"] = to_double(exact);
    j["z"] = r.z;
    j["within_4_sigma"] = within;
    j["naturals"] = r.naturals;
    j["natural_fraction"] = nat_frac;
    j["natural_exact"] = rational_json(natural_share);
    j["natural_z"] = nat_z;
    out << j.dump(2) << '\n';
  } else if (m.format == Format::Csv) {
    std::ostringstream mean, se, z;
    mean.precision(12);
    se.precision(12);
    mean << r.mean;
    se << r.std_error;
    z << r.z;
    out << "key,value\n";
    csv_row(out, {"model", m.name()});
    csv_row(out, {"mask", std::to_string(sa.mask)});
    csv_row(out, {"trials", std::to_string(r.trials)});
    csv_row(out, {"seed", std::to_string(sa.seed)});
    csv_row(out, {"rng", r.rng});
    csv_row(out, {"mean", mean.str()});
    csv_row(out, {"std_error", se.str()});
    csv_row(out, {"exact", to_string(exact)});
    csv_row(out, {"z", z.str()});
    csv_row(out, {"within_4_sigma", yes_no(within)});
  } else {
    out << "# Simulation, " << m.title() << "\n\n";
    out << "| quantity | value |\n|---|---|\n";
    out << "| Player row | " << mask.binary() << " (" << sa.mask << ") |\n";
    out << "| Banker table | " << table_source << ", column " << sa.column << " |\n";
    out << "| trials | " << r.trials << " |\n| seed | " << sa.seed << " (" << r.rng << ") |\n";
    out << "| mean | " << r.mean << " |\n| standard error | " << r.std_error << " |\n";
    out << "| exact | " << to_string(exact) << " (" << to_double(exact) << ") |\n";
    out << "| z | " << r.z << " |\n| within 4 sigma | " << yes_no(within) << " |\n";
    out << "| natural fraction | " << nat_frac << " (exact " << nat_p << ", z " << nat_z << ") |\n";
  }
  return kExitOk;
}

void add_common(CLI::App* cmd, CommonArgs& a, bool model_required) {
  auto* model = cmd->add_option("--model", a.model, "A1, A2, A3, B1, B2 or B3");
  if (model_required) model->required();
  cmd->add_option("--decks", a.decks, "number of decks (B models only)");
  cmd->add_option("--format", a.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "markdown"}));
  cmd->add_option("--max-decks", a.max_decks, "cap on --decks (default 200, env BACCARA_MAX_DECKS)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver for the matrix games of baccara chemin de fer", "baccara"};
  app.require_subcommand(1);
  CommonArgs common;

  auto* solve = app.add_subcommand("solve", "solve a model and print the optimal strategies");
  add_common(solve, common, true);
  auto* classify = app.add_subcommand("classify", "print the preliminary D/S/* Banker table");
  add_common(classify, common, true);

  auto* verify = app.add_subcommand("verify", "certify a solution exactly");
  add_common(verify, common, false);
  std::optional<std::string> solution_file;
  std::optional<std::string> banker_from;
  verify->add_option("--solution", solution_file, "solution JSON written by solve --format json");
  verify->add_option("--banker-from-model", banker_from, "use the Banker kernel columns of another model");

  auto* enumerate = app.add_subcommand("enumerate", "list extreme optimal strategy pairs (A2, A3)");
  add_common(enumerate, common, true);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo check of one payoff entry");
  add_common(simulate, common, true);
  SimulateArgs sim;
  simulate->add_option("--mask", sim.mask, "Player row 0..31");
  simulate->add_option("--table-file", sim.table_file, "solution JSON supplying the Banker table");
  simulate->add_option("--column", sim.column, "Banker component of the solution (0 or 1)");
  simulate->add_option("--trials", sim.trials, "number of coups");
  simulate->add_option("--seed", sim.seed, "master seed");
  simulate->add_option("--threads", sim.threads, "worker threads (0: all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(common, out);
    if (classify->parsed()) return cmd_classify(common, out);
    if (verify->parsed()) return cmd_verify(common, solution_file, banker_from, out);
    if (enumerate->parsed()) return cmd_enumerate(common, out);
    if (simulate->parsed()) return cmd_simulate(common, sim, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CertificationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const TieError& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}

}  // namespace baccara::cli
