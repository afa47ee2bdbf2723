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

#ifndef BACCARA_CLI_JSON_IO_HPP_
#define BACCARA_CLI_JSON_IO_HPP_

#include <json.hpp>

#include "baccara/solver.hpp"

namespace baccara::cli {

using Json = nlohmann::ordered_json;

// {"num": "...", "den": "..."} with decimal digit strings.
Json rational_json(const Rational& r);
// Throws std::invalid_argument.
Rational rational_from_json(const Json& j);

Json certificate_json(const CertificateReport& report);

Json solution_json(const GameSolution& solution);

// Reads the document written by solution_json. The Banker mixture is rebuilt
// from forced_table and q: cells marked "(S,D)" stand in the first column and
// draw in the second. Throws std::invalid_argument on malformed input.
GameSolution solution_from_json(const Json& j);

}  // namespace baccara::cli

#endif  // BACCARA_CLI_JSON_IO_HPP_
