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

#include "ergodic/game_io.h"

#include <cmath>

#include "ergodic/errors.h"
#include "ergodic/json_writer.h"

namespace ergodic {
namespace {

using nlohmann::json;

constexpr double kRenormalizeFloor = 1e-12;

const json& Require(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw SchemaError(std::string("missing key \"") + key + "\"");
  }
  return *it;
}

const json& RequireArray(const json& j, std::size_t len,
                         const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array");
  if (j.size() != len) {
    throw SchemaError(where + ": expected " + std::to_string(len) +
                      " entries, got " + std::to_string(j.size()));
  }
  return j;
}

double RequireNumber(const json& j, const std::string& where) {
  if (!j.is_number()) throw SchemaError(where + ": expected a number");
  return j.get<double>();
}

std::vector<std::vector<std::string>> ReadLabels(const json& j,
                                                 std::size_t n,
                                                 const char* key) {
  RequireArray(j, n, key);
  std::vector<std::vector<std::string>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = std::string(key) + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) throw SchemaError(where + ": expected an array");
    for (const auto& label : j[i]) {
      if (label.is_string()) {
        out[i].push_back(label.get<std::string>());
      } else if (label.is_number()) {
        out[i].push_back(label.dump());
      } else {
        throw SchemaError(where + ": labels must be strings or numbers");
      }
    }
  }
  return out;
}

void RenormalizeNearStochastic(GameData& d) {
  for (auto& state : d.trans) {
    for (auto& row : state) {
      for (auto& p : row) {
        double sum = 0.0;
        bool nonneg = true;
        for (double v : p) {
          sum += v;
          if (!(v >= 0.0)) nonneg = false;
        }
        const double dev = std::abs(sum - 1.0);
        if (nonneg && dev > kRenormalizeFloor && dev <= kRowSumTol) {
          for (double& v : p) v /= sum;
        }
      }
    }
  }
}

}  // namespace

GameData GameDataFromJson(const json& j) {
  if (!j.is_object()) throw SchemaError("game file must be a JSON object");
  const json& jn = Require(j, "n");
  if (!jn.is_number_integer() || jn.get<long long>() < 1) {
    throw SchemaError("\"n\" must be a positive integer");
  }
  GameData d;
  d.n = jn.get<std::size_t>();
  d.actions_max = ReadLabels(Require(j, "actions_max"), d.n, "actions_max");
  d.actions_min = ReadLabels(Require(j, "actions_min"), d.n, "actions_min");
  const json& payoff = RequireArray(Require(j, "payoff"), d.n, "payoff");
  const json& trans = RequireArray(Require(j, "trans"), d.n, "trans");
  d.payoff.resize(d.n);
  d.trans.resize(d.n);
  for (std::size_t i = 0; i < d.n; ++i) {
    const std::size_t m = d.actions_max[i].size();
    const std::size_t k = d.actions_min[i].size();
    const std::string si = "[" + std::to_string(i) + "]";
    RequireArray(payoff[i], m, "payoff" + si);
    RequireArray(trans[i], m, "trans" + si);
    d.payoff[i].assign(m, std::vector<double>(k));
    d.trans[i].assign(m, std::vector<std::vector<double>>(k));
    for (std::size_t a = 0; a < m; ++a) {
      const std::string sa = si + "[" + std::to_string(a) + "]";
      RequireArray(payoff[i][a], k, "payoff" + sa);
      RequireArray(trans[i][a], k, "trans" + sa);
      for (std::size_t b = 0; b < k; ++b) {
        const std::string sb = sa + "[" + std::to_string(b) + "]";
        d.payoff[i][a][b] = RequireNumber(payoff[i][a][b], "payoff" + sb);
        const json& row = RequireArray(trans[i][a][b], d.n, "trans" + sb);
        d.trans[i][a][b].resize(d.n);
        for (std::size_t l = 0; l < d.n; ++l) {
          d.trans[i][a][b][l] = RequireNumber(row[l], "trans" + sb);
        }
      }
    }
  }
  RenormalizeNearStochastic(d);
  return d;
}

FiniteGame GameFromJson(const json& j) {
  return FiniteGame::Create(GameDataFromJson(j));
}

json GameToJson(const FiniteGame& game) {
  const GameData& d = game.data();
  json j = json::object();
  j["n"] = d.n;
  j["actions_max"] = d.actions_max;
  j["actions_min"] = d.actions_min;
  j["payoff"] = d.payoff;
  j["trans"] = d.trans;
  return j;
}

GameData LoadGameData(const std::string& path) {
  json j = ReadJsonFile(path);
  try {
    return GameDataFromJson(j);
  } catch (const SchemaError& e) {
    throw SchemaError("'" + path + "': " + e.what());
  } catch (const json::exception& e) {
    throw SchemaError("'" + path + "': " + e.what());
  }
}

FiniteGame LoadGame(const std::string& path) {
  return FiniteGame::Create(LoadGameData(path));
}

bool IsClosedFormJson(const json& j) {
  return j.is_object() && j.contains("closed_form");
}

LoadedOperator OperatorFromJson(const json& j) {
  if (!IsClosedFormJson(j)) {
    FiniteGame game = GameFromJson(j);
    LoadedOperator out{OperatorHandle::FromGame(game), std::nullopt};
    out.game.emplace(std::move(game));
    return out;
  }
  const json& name = j["closed_form"];
  if (!name.is_string()) throw SchemaError("\"closed_form\" must be a string");
  OperatorHandle t = ClosedFormByName(name.get<std::string>());
  if (auto it = j.find("g"); it != j.end()) {
    RequireArray(*it, t.dim(), "g");
    std::vector<double> g(t.dim());
    for (std::size_t i = 0; i < g.size(); ++i) {
      g[i] = RequireNumber((*it)[i], "g[" + std::to_string(i) + "]");
    }
    t = t.Perturbed(g);
  }
  return {std::move(t), std::nullopt};
}

LoadedOperator LoadOperator(const std::string& path) {
  json j = ReadJsonFile(path);
  try {
    return OperatorFromJson(j);
  } catch (const SchemaError& e) {
    throw SchemaError("'" + path + "': " + e.what());
  } catch (const json::exception& e) {
    throw SchemaError("'" + path + "': " + e.what());
  }
}

void SaveGame(const FiniteGame& game, const std::string& path) {
  WriteJsonFile(path, GameToJson(game));
}

}  // namespace ergodic
