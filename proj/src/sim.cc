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

#include "ergodic/sim.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <string>

#include "ergodic/errors.h"
#include "ergodic/parallel.h"
#include "ergodic/random.h"

namespace ergodic {
namespace {

// Neumaier's compensated sum.
class CompensatedSum {
 public:
  void Add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

std::size_t Sample(std::span<const double> p, double u) {
  double acc = 0.0;
  std::size_t last = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] <= 0.0) continue;
    acc += p[k];
    last = k;
    if (u < acc) return k;
  }
  return last;
}

}  // namespace

void CheckStrategy(const FiniteGame& game, Player player,
                   const StationaryStrategy& s) {
  const std::string who = PlayerName(player);
  if (s.size() != game.num_states()) {
    throw InvalidStrategy(who + " strategy must have one entry per state");
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::string where = who + " strategy at state " + std::to_string(i + 1);
    if (s[i].size() != game.num_actions(player, i)) {
      throw InvalidStrategy(where + " has the wrong number of actions");
    }
    double sum = 0.0;
    for (double v : s[i]) {
      if (!std::isfinite(v) || v < 0.0) {
        throw InvalidStrategy(where + " has a negative or non-finite entry");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > kRowSumTol) {
      throw InvalidStrategy(where + " does not sum to 1");
    }
  }
}

SimulationResult Simulate(const FiniteGame& game,
                          const StationaryStrategy& sigma,
                          const StationaryStrategy& tau, std::size_t i0,
                          int horizon, int episodes, std::uint64_t seed) {
  CheckStrategy(game, Player::kMax, sigma);
  CheckStrategy(game, Player::kMin, tau);
  if (i0 >= game.num_states()) throw IndexError("initial state out of range");
  if (horizon < 1 || episodes < 1) {
    throw DimensionError("horizon and episodes must be positive");
  }
  std::vector<double> per_episode(static_cast<std::size_t>(episodes));
  ParallelFor(per_episode.size(), [&](std::size_t e) {
    SplitMix64 rng = SplitMix64::Stream(seed, e);
    std::size_t state = i0;
    double total = 0.0;
    for (int l = 0; l < horizon; ++l) {
      const std::size_t a = Sample(sigma[state], rng.Uniform01());
      const std::size_t b = Sample(tau[state], rng.Uniform01());
      total += game.payoff(state, a, b);
      state = Sample(game.transition(state, a, b), rng.Uniform01());
    }
    per_episode[e] = total / horizon;
  });

  CompensatedSum sum;
  for (double v : per_episode) sum.Add(v);
  const double mean = sum.value() / episodes;
  CompensatedSum sq;
  for (double v : per_episode) sq.Add((v - mean) * (v - mean));

  SimulationResult r;
  r.initial_state = i0;
  r.horizon = horizon;
  r.episodes = episodes;
  r.mean_payoff = mean;
  r.std_error =
      episodes > 1 ? std::sqrt(sq.value() / (episodes - 1) / episodes) : 0.0;
  r.seed = seed;
  return r;
}

std::vector<double> ExpectedPayoff(const FiniteGame& game,
                                   const StationaryStrategy& sigma,
                                   const StationaryStrategy& tau, int horizon) {
  CheckStrategy(game, Player::kMax, sigma);
  CheckStrategy(game, Player::kMin, tau);
  const std::size_t n = game.num_states();
  // One-step reward and transition matrix of the induced chain.
  std::vector<double> reward(n, 0.0);
  std::vector<std::vector<double>> chain(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < sigma[i].size(); ++a) {
      for (std::size_t b = 0; b < tau[i].size(); ++b) {
        const double w = sigma[i][a] * tau[i][b];
        if (w == 0.0) continue;
        reward[i] += w * game.payoff(i, a, b);
        const auto p = game.transition(i, a, b);
        for (std::size_t j = 0; j < n; ++j) chain[i][j] += w * p[j];
      }
    }
  }
  std::vector<double> value(n, 0.0), next(n);
  for (int t = 0; t < horizon; ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      double v = reward[i];
      for (std::size_t j = 0; j < n; ++j) v += chain[i][j] * value[j];
      next[i] = v;
    }
    value.swap(next);
  }
  for (double& v : value) v /= horizon;
  return value;
}

OperatorHandle FixedStrategyOperator(const FiniteGame& game, Player fixed,
                                     const StationaryStrategy& strategy) {
  CheckStrategy(game, fixed, strategy);
  auto g = std::make_shared<const FiniteGame>(game);
  StationaryStrategy s = strategy;
  auto fn = [g, s, fixed](std::span<const double> x) {
    const std::size_t n = g->num_states();
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t opp = g->num_actions(Opponent(fixed), i);
      double best = fixed == Player::kMax
                        ? std::numeric_limits<double>::infinity()
                        : -std::numeric_limits<double>::infinity();
      for (std::size_t v = 0; v < opp; ++v) {
        double val = 0.0;
        for (std::size_t u = 0; u < s[i].size(); ++u) {
          if (s[i][u] == 0.0) continue;
          const std::size_t a = fixed == Player::kMax ? u : v;
          const std::size_t b = fixed == Player::kMax ? v : u;
          double q = g->payoff(i, a, b);
          const auto p = g->transition(i, a, b);
          for (std::size_t l : g->support_indices(i, a, b)) q += x[l] * p[l];
          val += s[i][u] * q;
        }
        best = fixed == Player::kMax ? std::min(best, val) : std::max(best, val);
      }
      out[i] = best;
    }
    return out;
  };
  return OperatorHandle::ClosedForm(
      std::string("fixed-") + PlayerName(fixed), game.num_states(), fn);
}

std::vector<double> BestResponseValues(const FiniteGame& game, Player fixed,
                                       const StationaryStrategy& strategy,
                                       int horizon) {
  const OperatorHandle t = FixedStrategyOperator(game, fixed, strategy);
  return ValueIteration(t, horizon).steps.back().v;
}

double Exploitability(const FiniteGame& game, Player fixed,
                      const StationaryStrategy& strategy, std::size_t i0,
                      int horizon) {
  if (i0 >= game.num_states()) throw IndexError("initial state out of range");
  return BestResponseValues(game, fixed, strategy, horizon)[i0];
}

UniformValueCheck CheckUniformValueBound(const FiniteGame& game,
                                         const StationaryStrategy& sigma,
                                         const StationaryStrategy& tau,
                                         double lambda, double u_sup,
                                         double epsilon, int horizon) {
  UniformValueCheck c;
  const double slack = epsilon + 2.0 * u_sup / horizon;
  c.lower_bound = lambda - slack;
  c.upper_bound = lambda + slack;
  const auto vs_max = BestResponseValues(game, Player::kMax, sigma, horizon);
  const auto vs_min = BestResponseValues(game, Player::kMin, tau, horizon);
  c.worst_vs_max = *std::min_element(vs_max.begin(), vs_max.end());
  c.best_vs_min = *std::max_element(vs_min.begin(), vs_min.end());
  c.holds = c.worst_vs_max >= c.lower_bound && c.best_vs_min <= c.upper_bound;
  return c;
}

}  // namespace ergodic
