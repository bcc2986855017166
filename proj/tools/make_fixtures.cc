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

// Regenerates the files under fixtures/:
//   make_fixtures <output dir>

#include <cstdio>
#include <string>

#include "ergodic/fixtures.h"
#include "ergodic/game_io.h"
#include "ergodic/json_writer.h"
#include "ergodic/shapley.h"
#include "ergodic/solver.h"

namespace {

using nlohmann::json;
namespace fx = ergodic::fixtures;

int Main(const std::string& dir) {
  auto game = [&](const char* name, const ergodic::FiniteGame& g) {
    ergodic::SaveGame(g, dir + "/" + name);
  };
  auto file = [&](const char* name, const json& j) {
    ergodic::WriteJsonFile(dir + "/" + name, j);
  };
  game("t_square.json", fx::SquareGame());
  game("t_square_g10.json", fx::SquareGame({1.0, 0.0}));
  game("t_circle.json", fx::CircleGame());
  game("t_circle_g10.json", fx::CircleGame({1.0, 0.0}));
  game("t_triangle.json", fx::TriangleGame());
  game("t_triangle_g10.json", fx::TriangleGame({1.0, 0.0}));
  game("t_triangle_gm10.json", fx::TriangleGame({-1.0, 0.0}));
  game("gamma_game.json", fx::GammaGame());
  game("matching_pennies.json", fx::MatchingPenniesGame(2));

  file("log_game.json", {{"closed_form", "log"}});
  file("closed_circle_g10.json", {{"closed_form", "circle"}, {"g", {1.0, 0.0}}});
  file("closed_triangle_g10.json",
       {{"closed_form", "triangle"}, {"g", {1.0, 0.0}}});
  file("matrix_rps.json",
       {{"matrix", {{0.0, -1.0, 1.0}, {1.0, 0.0, -1.0}, {-1.0, 1.0, 0.0}}}});

  // Optimal stationary strategies of the gamma-game read off its solution.
  const ergodic::FiniteGame gamma = fx::GammaGame();
  const auto sol =
      ergodic::SolveErgodic(ergodic::OperatorHandle::FromGame(gamma));
  const auto pair = ergodic::ExtractStrategies(gamma, sol.u.rep(), 0.0);
  file("gamma_strategies.json", {{"sigma", pair.sigma}, {"tau", pair.tau}});
  const ergodic::FiniteGame circle = fx::CircleGame({1.0, 0.0});
  const auto csol =
      ergodic::SolveErgodic(ergodic::OperatorHandle::FromGame(circle));
  const auto cpair = ergodic::ExtractStrategies(circle, csol.u.rep(), 0.0);
  file("t_circle_strategies.json", {{"sigma", cpair.sigma}, {"tau", cpair.tau}});

  // Invalid on purpose: a transition row summing to 0.9.
  json bad = ergodic::GameToJson(fx::CircleGame());
  bad["trans"][0][0][0] = {0.0, 0.9};
  file("invalid_row_sum.json", bad);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: make_fixtures <output dir>\n");
    return 1;
  }
  try {
    return Main(argv[1]);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "make_fixtures: %s\n", e.what());
    return 1;
  }
}
