// Copyright 2026 The ergodic-games Authors
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

#ifndef ERGODIC_REPORT_H_
#define ERGODIC_REPORT_H_

#include <cstdint>
#include <exception>
#include <string>
#include <vector>

#include "ergodic/crosscheck.h"
#include "ergodic/dominion.h"
#include "ergodic/game.h"
#include "ergodic/matrix_game.h"
#include "ergodic/shapley.h"
#include "ergodic/sim.h"
#include "ergodic/solver.h"
#include "json.hpp"

namespace ergodic {

inline constexpr char kVersion[] = "0.1.0";

// Every output embeds (JSON) or accompanies (CSV) one of these.
struct RunManifest {
  std::string command;
  std::string version = kVersion;
  std::string input_path;
  std::string input_sha256;
  std::vector<std::uint64_t> seeds;
  double wall_seconds = 0.0;
  nlohmann::json params = nlohmann::json::object();
};

// Lowercase hex SHA-256 of the file contents. Throws IoError.
std::string Sha256File(const std::string& path);

nlohmann::json ToJson(const RunManifest& m);

// State sets are rendered as sorted arrays of 1-based labels.
nlohmann::json ToJson(const StateSet& s);
nlohmann::json ToJson(const DominionReport& r);
nlohmann::json ToJson(const ErgodicityVerdict& v);
nlohmann::json ToJson(const SolvabilityProbe& p);
nlohmann::json ToJson(const CrosscheckReport& r);
nlohmann::json ToJson(const ErgodicSolution& s);
nlohmann::json ToJson(const StrategyPair& s);
nlohmann::json ToJson(const MatrixGameSolution& s);
nlohmann::json ToJson(const SimulationResult& s);
nlohmann::json ToJson(const ValidationReport& r);
nlohmann::json ToJson(const UniquenessResult& r);

// {"error": {"type": ..., "message": ...}} plus best residual, iteration
// count and a residual trace thinned to at most max_trace points for
// NoConvergence.
nlohmann::json ErrorToJson(const std::exception& e,
                           std::size_t max_trace = 1000);

// Header "k,v1,...,vn,residual" then one row per step.
std::string TraceToCsv(const ValueIterationTrace& trace, std::size_t n);

}  // namespace ergodic

#endif  // ERGODIC_REPORT_H_
