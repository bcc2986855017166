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

#ifndef ERGODIC_GAME_IO_H_
#define ERGODIC_GAME_IO_H_

#include <optional>
#include <string>

#include "ergodic/game.h"
#include "ergodic/shapley.h"
#include "json.hpp"

namespace ergodic {

// Game file layout:
//   {"n": int, "actions_max": [[label...]...], "actions_min": [[label...]...],
//    "payoff": [[[real...]...]...], "trans": [[[[real...]...]...]...]}
//
// Rows whose sum is off by more than 1e-12 but at most kRowSumTol are
// rescaled to sum to one; anything further off is rejected.
// Shape checks and renormalization only; FiniteGame::Create validates.
GameData GameDataFromJson(const nlohmann::json& j);
FiniteGame GameFromJson(const nlohmann::json& j);
nlohmann::json GameToJson(const FiniteGame& game);

// Throws IoError, ParseError, SchemaError or ValidationError.
GameData LoadGameData(const std::string& path);
FiniteGame LoadGame(const std::string& path);
void SaveGame(const FiniteGame& game, const std::string& path);

// Operator files are either game files or closed-form maps on R^2:
//   {"closed_form": "square" | "circle" | "triangle" | "log", "g": [g1, g2]}
// where the optional g gives the operator g + T.
struct LoadedOperator {
  OperatorHandle op;
  std::optional<FiniteGame> game;  // set for game files
};

bool IsClosedFormJson(const nlohmann::json& j);
LoadedOperator OperatorFromJson(const nlohmann::json& j);
LoadedOperator LoadOperator(const std::string& path);

}  // namespace ergodic

#endif  // ERGODIC_GAME_IO_H_
