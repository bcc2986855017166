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

#ifndef ERGODIC_SOLVER_H_
#define ERGODIC_SOLVER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "ergodic/game.h"
#include "ergodic/matrix_game.h"
#include "ergodic/quotient.h"
#include "ergodic/shapley.h"

namespace ergodic {

struct SolveOptions {
  double tol = 1e-8;
  int max_iter = 200000;
  double theta = 0.5;
  // Keep the per-iteration residuals in ErgodicSolution::trace. The trace is
  // always attached to NoConvergence.
  bool record_trace = false;
  // Starting point; zero when empty.
  std::vector<double> initial;
};

// A solution (lambda, u) of T(u) = lambda e + u up to tolerance.
struct ErgodicSolution {
  double lambda = 0.0;
  QuotientVector u;
  double residual = 0.0;  // Hilbert(T(u) - u)
  int iterations = 0;
  std::vector<double> trace;
};

// Averaged iteration u <- canonicalize((1 - theta) u + theta T(u)) until
// Hilbert(T(u) - u) <= tol; lambda is the midpoint of the range of T(u) - u,
// so |T(u) - lambda e - u|_inf <= tol / 2. Throws NoConvergence after
// max_iter iterations.
ErgodicSolution SolveErgodic(const OperatorHandle& t,
                             const SolveOptions& options = {});

// |T(u) - lambda e - u|_inf <= tol.
bool CheckSolution(const OperatorHandle& t, double lambda,
                   std::span<const double> u, double tol);

struct StateCertificate {
  double value = 0.0;          // T_i(u)
  double max_guarantee = 0.0;  // min_b (sigma_i^T M^{i,u})_b
  double min_guarantee = 0.0;  // max_a (M^{i,u} tau_i)_a
};

// Stationary strategies read off the one-shot games at u.
struct StrategyPair {
  std::vector<std::vector<double>> sigma;  // MAX, per state
  std::vector<std::vector<double>> tau;    // MIN, per state
  double epsilon = 0.0;
  std::vector<StateCertificate> certificates;
};

// Optimal mixed actions of every M^{i,u}. The declared epsilon is
// max(epsilon, 2 tol_lp) and each certificate satisfies
// max_guarantee >= value - epsilon and min_guarantee <= value + epsilon.
StrategyPair ExtractStrategies(const FiniteGame& game,
                               std::span<const double> u, double epsilon,
                               double tol_lp = kDefaultLpTol);

struct ProbeFailure {
  std::vector<double> g;
  double best_residual = 0.0;
  int iterations = 0;
};

struct SolvabilityProbe {
  std::uint64_t seed = 0;
  std::vector<std::vector<double>> draws;
  std::vector<bool> solvable;
  std::vector<ProbeFailure> failures;

  int trials() const { return static_cast<int>(draws.size()); }
  int solved() const;
  double fraction() const;
};

// Draws g uniformly from [-1, 1]^n (stream k of `seed` for draw k) and tries
// SolveErgodic on g + T for each.
SolvabilityProbe ProbeSolvability(const OperatorHandle& t, int trials,
                                  std::uint64_t seed,
                                  const SolveOptions& options = {});

// Same as above for caller-chosen perturbations.
SolvabilityProbe ProbeSolvabilityAt(const OperatorHandle& t,
                                    const std::vector<std::vector<double>>& gs,
                                    const SolveOptions& options = {});

struct UniquenessResult {
  bool unique = true;
  // One canonical bias per cluster found.
  std::vector<QuotientVector> representatives;
  std::vector<double> lambdas;  // one per start
  std::uint64_t seed = 0;
};

inline constexpr double kUniquenessStartBox = 10.0;

// Solves g + T from num_starts starting points drawn uniformly from
// [-10, 10]^n and clusters the canonical biases at Hilbert radius 100 tol.
// One cluster means no second solution was found. NoConvergence propagates.
UniquenessResult ProbeUniqueness(const OperatorHandle& t,
                                 std::span<const double> g, int num_starts,
                                 std::uint64_t seed,
                                 const SolveOptions& options = {});

}  // namespace ergodic

#endif  // ERGODIC_SOLVER_H_
