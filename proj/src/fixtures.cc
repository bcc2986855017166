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

#include "ergodic/fixtures.h"

#include <algorithm>
#include <numeric>
#include <string>

namespace ergodic::fixtures {
namespace {

std::vector<double> Dirac(std::size_t n, std::size_t j) {
  std::vector<double> p(n, 0.0);
  p[j] = 1.0;
  return p;
}

std::string Label(double v) {
  // Grid labels as they would be written by hand: 0, 0.5, 1.
  std::string s = std::to_string(v);
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

GameData TwoStateSkeleton() {
  GameData d;
  d.n = 2;
  d.actions_max = {{"stay"}, {"stay"}};
  d.actions_min = {{"stay"}, {"stay"}};
  d.payoff.resize(2);
  d.trans.resize(2);
  return d;
}

}  // namespace

FiniteGame SquareGame(std::vector<double> g) {
  GameData d = TwoStateSkeleton();
  for (std::size_t i = 0; i < 2; ++i) {
    d.payoff[i] = {{g[i]}};
    d.trans[i] = {{Dirac(2, i)}};
  }
  return FiniteGame::Create(std::move(d));
}

FiniteGame CircleGame(std::vector<double> g) {
  GameData d = TwoStateSkeleton();
  d.actions_max = {{"swap"}, {"swap"}};
  d.actions_min = {{"swap"}, {"swap"}};
  for (std::size_t i = 0; i < 2; ++i) {
    d.payoff[i] = {{g[i]}};
    d.trans[i] = {{Dirac(2, 1 - i)}};
  }
  return FiniteGame::Create(std::move(d));
}

FiniteGame TriangleGame(std::vector<double> g) {
  GameData d = TwoStateSkeleton();
  // State 1: MAX picks the next state.
  d.actions_max[0] = {"to1", "to2"};
  d.actions_min[0] = {"pass"};
  d.payoff[0] = {{g[0]}, {g[0]}};
  d.trans[0] = {{Dirac(2, 0)}, {Dirac(2, 1)}};
  // State 2: MIN picks the next state.
  d.actions_max[1] = {"pass"};
  d.actions_min[1] = {"to1", "to2"};
  d.payoff[1] = {{g[1], g[1]}};
  d.trans[1] = {{Dirac(2, 0), Dirac(2, 1)}};
  return FiniteGame::Create(std::move(d));
}

FiniteGame GammaGame(double gamma, std::vector<double> grid) {
  GameData d;
  d.n = 3;
  std::vector<std::string> labels;
  for (double v : grid) labels.push_back(Label(v));
  d.actions_max.assign(3, labels);
  d.actions_min.assign(3, labels);
  const std::size_t k = grid.size();
  d.payoff.assign(3, std::vector<std::vector<double>>(k, std::vector<double>(k)));
  d.trans.assign(3, std::vector<std::vector<std::vector<double>>>(
                        k, std::vector<std::vector<double>>(k)));
  for (std::size_t ia = 0; ia < k; ++ia) {
    for (std::size_t ib = 0; ib < k; ++ib) {
      const double a = grid[ia];
      const double b = grid[ib];
      const double r = (a == 0.0 && b == 0.0) ? 0.0 : a * b / (a * a * a + b * b * b);
      d.payoff[0][ia][ib] = r;
      d.payoff[1][ia][ib] = -r;
      d.payoff[2][ia][ib] = 0.0;
      d.trans[0][ia][ib] = {gamma * a, b * (1 - gamma * a), (1 - b) * (1 - gamma * a)};
      d.trans[1][ia][ib] = {gamma * b, a * (1 - gamma * b), (1 - a) * (1 - gamma * b)};
      d.trans[2][ia][ib] = {0.0, 0.0, 1.0};
    }
  }
  return FiniteGame::Create(std::move(d));
}

FiniteGame MatchingPenniesGame(std::size_t n) {
  GameData d;
  d.n = n;
  d.actions_max.assign(n, {"heads", "tails"});
  d.actions_min.assign(n, {"heads", "tails"});
  d.payoff.assign(n, {{1.0, -1.0}, {-1.0, 1.0}});
  d.trans.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    d.trans[i].assign(2, std::vector<std::vector<double>>(2, Dirac(n, i)));
  }
  return FiniteGame::Create(std::move(d));
}

FiniteGame ConstantGame(double payoff) {
  GameData d;
  d.n = 1;
  d.actions_max = {{"only"}};
  d.actions_min = {{"only"}};
  d.payoff = {{{payoff}}};
  d.trans = {{{{1.0}}}};
  return FiniteGame::Create(std::move(d));
}

FiniteGame RandomGame(SplitMix64& rng, const RandomGameParams& params) {
  const std::size_t n = params.n;
  auto actions = [&] {
    return params.min_actions +
           rng.Below(params.max_actions - params.min_actions + 1);
  };
  GameData d;
  d.n = n;
  d.actions_max.resize(n);
  d.actions_min.resize(n);
  d.payoff.resize(n);
  d.trans.resize(n);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t m = actions();
    const std::size_t k = actions();
    for (std::size_t a = 0; a < m; ++a) d.actions_max[i].push_back("a" + std::to_string(a + 1));
    for (std::size_t b = 0; b < k; ++b) d.actions_min[i].push_back("b" + std::to_string(b + 1));
    d.payoff[i].assign(m, std::vector<double>(k));
    d.trans[i].assign(m, std::vector<std::vector<double>>(k));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        d.payoff[i][a][b] = rng.Uniform(-params.payoff_scale, params.payoff_scale);
        if (params.stay_prob > 0.0 && rng.Uniform01() < params.stay_prob) {
          d.trans[i][a][b].assign(n, 0.0);
          d.trans[i][a][b][i] = 1.0;
          continue;
        }
        const std::size_t support =
            1 + rng.Below(std::min(params.max_support, n));
        std::iota(order.begin(), order.end(), std::size_t{0});
        // Partial Fisher-Yates: the first `support` entries are the support.
        for (std::size_t s = 0; s < support; ++s) {
          std::swap(order[s], order[s + rng.Below(n - s)]);
        }
        std::vector<double> p(n, 0.0);
        double total = 0.0;
        for (std::size_t s = 0; s < support; ++s) {
          p[order[s]] = rng.Uniform(params.min_weight, 1.0);
          total += p[order[s]];
        }
        for (double& v : p) v /= total;
        d.trans[i][a][b] = std::move(p);
      }
    }
  }
  return FiniteGame::Create(std::move(d));
}

}  // namespace ergodic::fixtures
