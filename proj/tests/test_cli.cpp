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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "baccara_cli/cli.hpp"
#include "baccara_cli/json_io.hpp"

using namespace baccara;
using baccara::cli::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(args);
  REQUIRE_MESSAGE(r.code == cli::kExitOk, r.err);
  return Json::parse(r.out);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("baccara_test_" + name);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

// The section starting at `heading` up to the next "## " heading.
std::string section(const std::string& text, const std::string& heading) {
  const auto start = text.find(heading);
  REQUIRE(start != std::string::npos);
  const auto next = text.find("\n## ", start + heading.size());
  return text.substr(start, next == std::string::npos ? std::string::npos : next - start + 1);
}

std::string without_first_line(const std::string& text) {
  return text.substr(text.find('\n') + 1);
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) { setenv(name, value, 1); }
  ~ScopedEnv() { unsetenv(name_); }

 private:
  const char* name_;
};

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"solve", "--model", "B1", "--decks", "0"}).code == cli::kExitUsage);
  CHECK(run({"solve", "--model", "B1"}).code == cli::kExitUsage);
  CHECK(run({"solve", "--model", "A1", "--decks", "6"}).code == cli::kExitUsage);
  CHECK(run({"solve", "--model", "C1"}).code == cli::kExitUsage);
  CHECK(run({"solve", "--model", "B2", "--decks", "6", "--format", "xml"}).code ==
        cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"enumerate", "--model", "B3", "--decks", "6"}).code == cli::kExitUsage);
  CHECK(run({"simulate", "--model", "B3", "--decks", "6", "--mask", "32"}).code ==
        cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
  const auto r = run({"solve", "--model", "B1", "--decks", "0"});
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("solve emits exact values") {
  const auto b3 = run_json({"solve", "--model", "B3", "--decks", "6"});
  CHECK(b3["model"] == "B3");
  CHECK(b3["decks"] == 6);
  CHECK(b3["value"]["num"] == "-73356216203119");
  CHECK(b3["value"]["den"] == "5712649844821920");
  CHECK(b3["value_text"] == "-73356216203119/5712649844821920");
  CHECK(b3["p"]["num"] == "35003");
  CHECK(b3["p"]["den"] == "74880");
  CHECK(b3["banker"]["mixing_point"] == "(0,6,∅)");
  CHECK(b3["kernel"]["columns"][0]["decimal"] == 254913);
  CHECK(b3["kernel"]["columns"][1]["decimal"] == 254945);
  CHECK(b3["certificate"]["ok"] == true);

  const auto a1 = run_json({"solve", "--model", "A1"});
  CHECK(a1["decks"].is_null());
  CHECK(a1["value_text"] == "-679568/53094899");
  CHECK(a1["q"]["num"] == "859");
  CHECK(a1["q"]["den"] == "2288");

  const auto csv = run({"solve", "--model", "A1", "--format", "csv"});
  CHECK(csv.code == cli::kExitOk);
  CHECK(csv.out.find("summary,value,-679568/53094899") != std::string::npos);
}

TEST_CASE("markdown matches the golden tables") {
  const std::filesystem::path golden = BACCARA_GOLDEN_DIR;
  const auto classify = run({"classify", "--model", "B3", "--decks", "6"});
  CHECK(classify.code == cli::kExitOk);
  CHECK(classify.out == read_file(golden / "b3_d6_classify.md"));

  const auto solve = run({"solve", "--model", "B3", "--decks", "6"});
  CHECK(solve.code == cli::kExitOk);
  CHECK(section(solve.out, "## Banker") + "" == read_file(golden / "b3_d6_banker.md") + "\n");
}

TEST_CASE("classify grids") {
  const auto b1 = run_json({"classify", "--model", "B1", "--decks", "2"});
  CHECK(b1["n"] == 3);
  std::set<std::string> contested;
  for (const auto& p : b1["contested"]) contested.insert(p.get<std::string>());
  CHECK(contested == std::set<std::string>{"(3,8)", "(3,9)", "(6,∅)"});

  const auto b3_11 = run({"classify", "--model", "B3", "--decks", "11"});
  const auto a3 = run({"classify", "--model", "A3"});
  CHECK(without_first_line(b3_11.out) == without_first_line(a3.out));
  const auto b3_10 = run({"classify", "--model", "B3", "--decks", "10"});
  CHECK(without_first_line(b3_10.out) != without_first_line(a3.out));

  CHECK(run_json({"classify", "--model", "B2", "--decks", "6"})["n"] == 18);
}

TEST_CASE("verify round-trips solve output") {
  const auto path = temp_path("b3_d6.json");
  const auto solved = run({"solve", "--model", "B3", "--decks", "6", "--format", "json"});
  REQUIRE(solved.code == cli::kExitOk);
  write_file(path, solved.out);
  const auto verified = run_json({"verify", "--solution", path.string()});
  const auto original = Json::parse(solved.out);
  CHECK(verified["certificate"]["ok"] == true);
  CHECK(verified["certificate"]["player_margin"] == original["certificate"]["player_margin"]);
  CHECK(verified["certificate"]["banker_margin"] == original["certificate"]["banker_margin"]);

  auto tampered = original;
  tampered["value"]["den"] = "5712649844821921";
  write_file(path, tampered.dump());
  CHECK(run({"verify", "--solution", path.string()}).code == cli::kExitVerifyFailed);

  auto skewed = original;
  skewed["banker"]["q"]["num"] = "18885572";
  write_file(path, skewed.dump());
  CHECK(run({"verify", "--solution", path.string()}).code == cli::kExitVerifyFailed);

  write_file(path, "{\"model\": \"B3\"");
  CHECK(run({"verify", "--solution", path.string()}).code == cli::kExitUsage);
  CHECK(run({"verify", "--solution", (path.string() + ".missing")}).code == cli::kExitUsage);
  std::filesystem::remove(path);
}

TEST_CASE("verify built-in and forced supports") {
  CHECK(run({"verify", "--model", "B3", "--decks", "9"}).code == cli::kExitOk);
  CHECK(run({"verify", "--model", "A3"}).code == cli::kExitOk);
  const auto r = run({"verify", "--model", "B3", "--decks", "2", "--banker-from-model", "B2",
                      "--format", "json"});
  CHECK(r.code == cli::kExitVerifyFailed);
  const auto j = Json::parse(r.out);
  CHECK(j["certificate"]["failing_column_count"] == 2);
  CHECK(j["certificate"]["failing_columns"].size() == 2);
  CHECK(run({"verify", "--model", "B3", "--decks", "6", "--banker-from-model", "B2"}).code ==
        cli::kExitOk);
}

TEST_CASE("deck cap from flag and environment") {
  CHECK(run({"classify", "--model", "B1", "--decks", "201"}).code == cli::kExitUsage);
  {
    ScopedEnv env("BACCARA_MAX_DECKS", "5");
    CHECK(run({"classify", "--model", "B1", "--decks", "6"}).code == cli::kExitUsage);
    CHECK(run({"classify", "--model", "B1", "--decks", "5"}).code == cli::kExitOk);
    CHECK(run({"classify", "--model", "B1", "--decks", "6", "--max-decks", "6"}).code ==
          cli::kExitOk);
  }
  {
    ScopedEnv env("BACCARA_MAX_DECKS", "many");
    CHECK(run({"classify", "--model", "B1", "--decks", "6"}).code == cli::kExitUsage);
  }
}

TEST_CASE("enumerate counts extreme equilibria") {
  const auto a3 = run_json({"enumerate", "--model", "A3"});
  CHECK(a3["count"] == 980);
  CHECK(a3["player_pair_count"] == 14);
  CHECK(a3["banker_pair_count"] == 70);
  CHECK(run_json({"enumerate", "--model", "A2"})["count"] == 70);
}

TEST_CASE("simulate reports against the exact payoff") {
  const auto j = run_json({"simulate", "--model", "B3", "--decks", "6", "--trials", "200000",
                           "--seed", "1", "--threads", "2"});
  CHECK(j["trials"] == 200000);
  CHECK(j["rng"] == "mt19937_64");
  CHECK(j["exact"].contains("num"));
  CHECK(std::abs(j["z"].get<double>()) <= 4.0);
  const auto again = run_json({"simulate", "--model", "B3", "--decks", "6", "--trials",
                               "200000", "--seed", "1", "--threads", "3"});
  CHECK(again["mean"] == j["mean"]);
}

TEST_CASE("solution json round-trips through the library") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"solve", "--model", "B1", "--decks", "3"},
           {"solve", "--model", "B2", "--decks", "9"},
           {"solve", "--model", "B3", "--decks", "1"},
           {"solve", "--model", "A3"}}) {
    const auto j = run_json(args);
    const auto s = cli::solution_from_json(j);
    CHECK(cli::rational_from_json(j["value"]) == s.value);
    CHECK(cli::solution_json(s)["banker"] == j["banker"]);
    CHECK(cli::solution_json(s)["player"] == j["player"]);
  }
}
