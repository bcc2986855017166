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

#ifndef ERGODIC_FIXTURES_H_
#define ERGODIC_FIXTURES_H_

#include <vector>

#include "ergodic/game.h"
#include "ergodic/random.h"

namespace ergodic::fixtures {

// Two-state games whose Shapley operators are g + identity, g + swap and
// g + (max, min). In the last one MAX chooses the next state from state 1
// and MIN chooses it from state 2.
FiniteGame SquareGame(std::vector<double> g = {0.0, 0.0});
FiniteGame CircleGame(std::vector<double> g = {0.0, 0.0});
FiniteGame TriangleGame(std::vector<double> g = {0.0, 0.0});

// Three-state game on the action grid `grid` in [0, 1] for both players:
//   p(.|1,a,b) = (gamma a, b (1 - gamma a), (1 - b)(1 - gamma a))
//   p(.|2,a,b) = (gamma b, a (1 - gamma b), (1 - a)(1 - gamma b))
//   p(.|3,a,b) = (0, 0, 1)
// with payoffs r(1,a,b) = ab / (a^3 + b^3) = -r(2,a,b), r(3,.,.) = 0, and
// r(.,0,0) = 0.
FiniteGame GammaGame(double gamma = 0.5,
                     std::vector<double> grid = {0.0, 0.5, 1.0});

// Matching pennies in every state, each state a self-loop.
FiniteGame MatchingPenniesGame(std::size_t n);

// A one-state game with a single action pair and the given payoff.
FiniteGame ConstantGame(double payoff);

struct RandomGameParams {
  std::size_t n = 3;
  std::size_t min_actions = 2;
  std::size_t max_actions = 3;
  // Each transition row puts mass on 1..max_support distinct states.
  std::size_t max_support = 2;
  double payoff_scale = 1.0;
  // Positive transition weights are drawn from [min_weight, 1] before
  // normalization.
  double min_weight = 0.1;
  // Probability that a row is the deterministic self-loop p(i | i,a,b) = 1.
  double stay_prob = 0.0;
};

FiniteGame RandomGame(SplitMix64& rng, const RandomGameParams& params);

}  // namespace ergodic::fixtures

#endif  // ERGODIC_FIXTURES_H_
