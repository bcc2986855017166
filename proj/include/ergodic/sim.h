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

#ifndef ERGODIC_SIM_H_
#define ERGODIC_SIM_H_

#include <cstdint>
#include <vector>

#include "ergodic/game.h"
#include "ergodic/shapley.h"

namespace ergodic {

// Per-state mixed actions of one player.
using StationaryStrategy = std::vector<std::vector<double>>;

struct SimulationResult {
  std::size_t initial_state = 0;
  int horizon = 0;
  int episodes = 0;
  double mean_payoff = 0.0;  // estimate of the k-stage payoff
  double std_error = 0.0;    // sample standard deviation / sqrt(episodes)
  std::uint64_t seed = 0;
};

// Throws InvalidStrategy unless every per-state vector has the right length,
// nonnegative entries and sums to one within kRowSumTol.
void CheckStrategy(const FiniteGame& game, Player player,
                   const StationaryStrategy& s);

// Monte Carlo estimate of E[(1/k) sum_{l<k} r(i_l, a_l, b_l)] from state i0.
// Episode e draws from SplitMix64::Stream(seed, e); per-episode means are
// reduced in episode order with compensated summation, so the result is
// bit-identical for a given seed regardless of thread count.
SimulationResult Simulate(const FiniteGame& game,
                          const StationaryStrategy& sigma,
                          const StationaryStrategy& tau, std::size_t i0,
                          int horizon, int episodes, std::uint64_t seed);

// Exact k-stage payoff for every initial state, by backward recursion on the
// Markov chain induced by (sigma, tau).
std::vector<double> ExpectedPayoff(const FiniteGame& game,
                                   const StationaryStrategy& sigma,
                                   const StationaryStrategy& tau, int horizon);

// Shapley operator of the one-player game left when `fixed` always plays
// `strategy`: the opponent minimizes (or maximizes) over its pure actions.
OperatorHandle FixedStrategyOperator(const FiniteGame& game, Player fixed,
                                     const StationaryStrategy& strategy);

// k-stage value of the opponent's best response against `strategy`, per
// initial state: T_fixed^k(0) / k.
std::vector<double> BestResponseValues(const FiniteGame& game, Player fixed,
                                       const StationaryStrategy& strategy,
                                       int horizon);

double Exploitability(const FiniteGame& game, Player fixed,
                      const StationaryStrategy& strategy, std::size_t i0,
                      int horizon);

struct UniformValueCheck {
  double lower_bound = 0.0;  // lambda - eps - 2 |u| / k
  double upper_bound = 0.0;  // lambda + eps + 2 |u| / k
  double worst_vs_max = 0.0;  // min_i best-response value against sigma
  double best_vs_min = 0.0;   // max_i best-response value against tau
  bool holds = false;
};

// Checks min_i BR(sigma)_i >= lambda - eps - 2|u|/k and
// max_i BR(tau)_i <= lambda + eps + 2|u|/k at horizon k.
UniformValueCheck CheckUniformValueBound(const FiniteGame& game,
                                         const StationaryStrategy& sigma,
                                         const StationaryStrategy& tau,
                                         double lambda, double u_sup,
                                         double epsilon, int horizon);

}  // namespace ergodic

#endif  // ERGODIC_SIM_H_
