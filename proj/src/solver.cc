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

#include "ergodic/solver.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "ergodic/errors.h"
#include "ergodic/parallel.h"
#include "ergodic/random.h"

namespace ergodic {

ErgodicSolution SolveErgodic(const OperatorHandle& t,
                             const SolveOptions& options) {
  const std::size_t n = t.dim();
  if (!(options.theta > 0.0 && options.theta <= 1.0)) {
    throw DimensionError("theta must lie in (0, 1]");
  }
  std::vector<double> start = options.initial;
  if (start.empty()) start.assign(n, 0.0);
  if (start.size() != n) throw DimensionError("initial point has wrong length");

  QuotientVector u = Canonicalize(start);
  std::vector<double> trace;
  std::vector<double> d(n), next(n);
  double best = std::numeric_limits<double>::infinity();
  for (int it = 0;; ++it) {
    const std::vector<double> tu = t(u.rep());
    for (std::size_t i = 0; i < n; ++i) d[i] = tu[i] - u[i];
    const double residual = Hilbert(d);
    trace.push_back(residual);
    best = std::min(best, residual);
    if (residual <= options.tol) {
      const auto [lo, hi] = std::minmax_element(d.begin(), d.end());
      ErgodicSolution sol;
      sol.lambda = 0.5 * (*lo + *hi);
      sol.u = std::move(u);
      sol.residual = residual;
      sol.iterations = it;
      if (options.record_trace) sol.trace = std::move(trace);
      return sol;
    }
    if (it >= options.max_iter) {
      char buf[160];
      std::snprintf(buf, sizeof(buf),
                    "ergodic equation not solved after %d iterations "
                    "(best residual %.6g, tol %.3g)",
                    it, best, options.tol);
      throw NoConvergence(buf, best, it, std::move(trace));
    }
    for (std::size_t i = 0; i < n; ++i) {
      next[i] = (1.0 - options.theta) * u[i] + options.theta * tu[i];
    }
    u = Canonicalize(next);
  }
}

bool CheckSolution(const OperatorHandle& t, double lambda,
                   std::span<const double> u, double tol) {
  const auto tu = t(u);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (std::abs(tu[i] - lambda - u[i]) > tol) return false;
  }
  return true;
}

StrategyPair ExtractStrategies(const FiniteGame& game,
                               std::span<const double> u, double epsilon,
                               double tol_lp) {
  StrategyPair out;
  out.epsilon = std::max(epsilon, 2.0 * tol_lp);
  const auto solutions = SolveStateGames(game, u, tol_lp);
  for (std::size_t i = 0; i < game.num_states(); ++i) {
    const MatrixGame m = StateMatrix(game, i, u);
    const auto& s = solutions[i];
    StateCertificate cert;
    cert.value = s.value;
    cert.max_guarantee = std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < m.cols(); ++b) {
      double v = 0.0;
      for (std::size_t a = 0; a < m.rows(); ++a) v += s.x[a] * m(a, b);
      cert.max_guarantee = std::min(cert.max_guarantee, v);
    }
    cert.min_guarantee = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < m.rows(); ++a) {
      double v = 0.0;
      for (std::size_t b = 0; b < m.cols(); ++b) v += m(a, b) * s.y[b];
      cert.min_guarantee = std::max(cert.min_guarantee, v);
    }
    if (cert.max_guarantee < cert.value - out.epsilon ||
        cert.min_guarantee > cert.value + out.epsilon) {
      throw NumericalFailure("strategy certificate failed at state " +
                             std::to_string(i + 1));
    }
    out.sigma.push_back(s.x);
    out.tau.push_back(s.y);
    out.certificates.push_back(cert);
  }
  return out;
}

int SolvabilityProbe::solved() const {
  return static_cast<int>(std::count(solvable.begin(), solvable.end(), true));
}

double SolvabilityProbe::fraction() const {
  return draws.empty() ? 1.0 : static_cast<double>(solved()) / trials();
}

SolvabilityProbe ProbeSolvabilityAt(const OperatorHandle& t,
                                    const std::vector<std::vector<double>>& gs,
                                    const SolveOptions& options) {
  SolvabilityProbe probe;
  probe.draws = gs;
  std::vector<char> ok(gs.size(), 0);
  std::vector<ProbeFailure> fail(gs.size());
  ParallelFor(gs.size(), [&](std::size_t k) {
    try {
      SolveErgodic(t.Perturbed(gs[k]), options);
      ok[k] = 1;
    } catch (const NoConvergence& e) {
      fail[k] = {gs[k], e.best_residual(), e.iterations()};
    }
  });
  for (std::size_t k = 0; k < gs.size(); ++k) {
    probe.solvable.push_back(ok[k] != 0);
    if (!ok[k]) probe.failures.push_back(std::move(fail[k]));
  }
  return probe;
}

SolvabilityProbe ProbeSolvability(const OperatorHandle& t, int trials,
                                  std::uint64_t seed,
                                  const SolveOptions& options) {
  std::vector<std::vector<double>> gs;
  for (int k = 0; k < trials; ++k) {
    SplitMix64 rng = SplitMix64::Stream(seed, static_cast<std::uint64_t>(k));
    std::vector<double> g(t.dim());
    for (double& v : g) v = rng.Uniform(-1.0, 1.0);
    gs.push_back(std::move(g));
  }
  SolvabilityProbe probe = ProbeSolvabilityAt(t, gs, options);
  probe.seed = seed;
  return probe;
}

UniquenessResult ProbeUniqueness(const OperatorHandle& t,
                                 std::span<const double> g, int num_starts,
                                 std::uint64_t seed,
                                 const SolveOptions& options) {
  const OperatorHandle tg = t.Perturbed(g);
  std::vector<ErgodicSolution> sols(static_cast<std::size_t>(num_starts));
  ParallelFor(sols.size(), [&](std::size_t s) {
    SplitMix64 rng = SplitMix64::Stream(seed, s);
    SolveOptions opt = options;
    opt.initial.resize(t.dim());
    for (double& v : opt.initial) {
      v = rng.Uniform(-kUniquenessStartBox, kUniquenessStartBox);
    }
    sols[s] = SolveErgodic(tg, opt);
  });

  UniquenessResult result;
  result.seed = seed;
  const double radius = 100.0 * options.tol;
  std::vector<double> diff(t.dim());
  for (const auto& sol : sols) {
    result.lambdas.push_back(sol.lambda);
    bool matched = false;
    for (const auto& rep : result.representatives) {
      for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = sol.u[i] - rep[i];
      if (Hilbert(diff) <= radius) {
        matched = true;
        break;
      }
    }
    if (!matched) result.representatives.push_back(sol.u);
  }
  result.unique = result.representatives.size() == 1;
  return result;
}

}  // namespace ergodic
