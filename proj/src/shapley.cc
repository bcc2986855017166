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

#include "ergodic/shapley.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ergodic/errors.h"
#include "ergodic/quotient.h"
#include "ergodic/random.h"

namespace ergodic {

MatrixGame StateMatrix(const FiniteGame& game, std::size_t i,
                       std::span<const double> x) {
  const std::size_t rows = game.num_actions(Player::kMax, i);
  const std::size_t cols = game.num_actions(Player::kMin, i);
  std::vector<double> entries(rows * cols);
  for (std::size_t a = 0; a < rows; ++a) {
    for (std::size_t b = 0; b < cols; ++b) {
      double v = game.payoff(i, a, b);
      const auto p = game.transition(i, a, b);
      for (std::size_t l : game.support_indices(i, a, b)) v += x[l] * p[l];
      entries[a * cols + b] = v;
    }
  }
  return MatrixGame(rows, cols, std::move(entries));
}

std::vector<MatrixGameSolution> SolveStateGames(const FiniteGame& game,
                                                std::span<const double> x,
                                                double tol_lp) {
  if (x.size() != game.num_states()) {
    throw DimensionError("operator argument has wrong length");
  }
  std::vector<MatrixGameSolution> out;
  out.reserve(game.num_states());
  for (std::size_t i = 0; i < game.num_states(); ++i) {
    try {
      out.push_back(Solve(StateMatrix(game, i, x), tol_lp));
    } catch (const NumericalFailure& e) {
      throw NumericalFailure("state " + std::to_string(i + 1) + ": " +
                             e.what());
    }
  }
  return out;
}

std::vector<double> EvalGameOperator(const FiniteGame& game,
                                     std::span<const double> x,
                                     double tol_lp) {
  std::vector<double> out;
  out.reserve(game.num_states());
  for (const auto& s : SolveStateGames(game, x, tol_lp)) out.push_back(s.value);
  return out;
}

double ContractReport::worst() const {
  return std::max({monotonicity, homogeneity, sup_nonexpansive,
                   hilbert_nonexpansive});
}

OperatorHandle OperatorHandle::FromGame(FiniteGame game, double tol_lp) {
  OperatorHandle h;
  h.kind_ = Kind::kGameBacked;
  h.n_ = game.num_states();
  h.label_ = "game";
  h.tol_lp_ = tol_lp;
  h.game_ = std::make_shared<const FiniteGame>(std::move(game));
  auto g = h.game_;
  h.fn_ = [g, tol_lp](std::span<const double> x) {
    return EvalGameOperator(*g, x, tol_lp);
  };
  return h;
}

OperatorHandle OperatorHandle::ClosedForm(std::string label, std::size_t n,
                                          EvalFn fn,
                                          std::uint64_t probe_seed) {
  if (n == 0) throw DimensionError("closed-form operator needs n >= 1");
  OperatorHandle h;
  h.kind_ = Kind::kClosedForm;
  h.n_ = n;
  h.label_ = std::move(label);
  h.fn_ = std::move(fn);
  const ContractReport report = ProbeContract(h, kContractProbes, probe_seed);
  if (report.monotonicity > kContractTol || report.homogeneity > kContractTol) {
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "operator '%s' is not a Shapley operator: monotonicity "
                  "violation %.3g, homogeneity violation %.3g",
                  h.label_.c_str(), report.monotonicity, report.homogeneity);
    throw ContractViolation(buf);
  }
  return h;
}

std::vector<double> OperatorHandle::operator()(
    std::span<const double> x) const {
  if (x.size() != n_) {
    throw DimensionError("operator '" + label_ + "' expects length " +
                         std::to_string(n_) + ", got " +
                         std::to_string(x.size()));
  }
  return fn_(x);
}

OperatorHandle OperatorHandle::Perturbed(std::span<const double> g) const {
  if (g.size() != n_) {
    throw DimensionError("perturbation has wrong length");
  }
  if (kind_ == Kind::kGameBacked) {
    OperatorHandle h = FromGame(Perturb(*game_, g), tol_lp_);
    h.label_ = label_;
    return h;
  }
  OperatorHandle h = *this;
  std::vector<double> shift(g.begin(), g.end());
  auto inner = fn_;
  h.fn_ = [inner, shift](std::span<const double> x) {
    std::vector<double> y = inner(x);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = shift[i] + y[i];
    return y;
  };
  h.label_ = "g+" + label_;
  return h;
}

ContractReport ProbeContract(const OperatorHandle& t, int probes,
                             std::uint64_t seed, double scale) {
  ContractReport r;
  r.probes = probes;
  const std::size_t n = t.dim();
  SplitMix64 rng(seed);
  std::vector<double> x(n), y(n), z(n), xa(n), diff(n);
  for (int p = 0; p < probes; ++p) {
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = rng.Uniform(-scale, scale);
      // Some coordinates of y coincide with x to exercise ties.
      y[i] = x[i] + (rng.Uniform01() < 0.3 ? 0.0 : rng.Uniform(0.0, scale));
      z[i] = rng.Uniform(-scale, scale);
    }
    const double alpha = rng.Uniform(-scale, scale);
    for (std::size_t i = 0; i < n; ++i) xa[i] = x[i] + alpha;

    const auto tx = t(x);
    const auto ty = t(y);
    const auto tz = t(z);
    const auto txa = t(xa);
    for (std::size_t i = 0; i < n; ++i) {
      r.monotonicity = std::max(r.monotonicity, tx[i] - ty[i]);
      r.homogeneity = std::max(r.homogeneity, std::abs(txa[i] - tx[i] - alpha));
    }
    for (std::size_t i = 0; i < n; ++i) diff[i] = tx[i] - tz[i];
    double in_sup = 0.0;
    for (std::size_t i = 0; i < n; ++i) in_sup = std::max(in_sup, std::abs(x[i] - z[i]));
    r.sup_nonexpansive = std::max(r.sup_nonexpansive, SupNorm(diff) - in_sup);
    const double out_h = Hilbert(diff);
    for (std::size_t i = 0; i < n; ++i) diff[i] = x[i] - z[i];
    r.hilbert_nonexpansive =
        std::max(r.hilbert_nonexpansive, out_h - Hilbert(diff));
  }
  return r;
}

double LogGameH(double z) { return z <= 1.0 ? 1.0 - std::log(2.0 - z) : z; }

OperatorHandle SquareOperator() {
  return OperatorHandle::ClosedForm(
      "square", 2, [](std::span<const double> x) {
        return std::vector<double>{x[0], x[1]};
      });
}

OperatorHandle CircleOperator() {
  return OperatorHandle::ClosedForm(
      "circle", 2, [](std::span<const double> x) {
        return std::vector<double>{x[1], x[0]};
      });
}

OperatorHandle TriangleOperator() {
  return OperatorHandle::ClosedForm(
      "triangle", 2, [](std::span<const double> x) {
        return std::vector<double>{std::max(x[0], x[1]), std::min(x[0], x[1])};
      });
}

OperatorHandle LogGameOperator() {
  return OperatorHandle::ClosedForm("log", 2, [](std::span<const double> x) {
    const double h = LogGameH(x[1] - x[0]);
    return std::vector<double>{h + x[0], -h + x[1]};
  });
}

OperatorHandle ClosedFormByName(const std::string& name) {
  if (name == "square") return SquareOperator();
  if (name == "circle") return CircleOperator();
  if (name == "triangle") return TriangleOperator();
  if (name == "log") return LogGameOperator();
  throw SchemaError("unknown closed-form operator '" + name +
                    "' (expected square, circle, triangle or log)");
}

ValueIterationTrace ValueIteration(const OperatorHandle& t, int steps) {
  if (steps < 1) throw DimensionError("value iteration needs at least 1 step");
  ValueIterationTrace trace;
  trace.steps.reserve(static_cast<std::size_t>(steps));
  const std::size_t n = t.dim();
  std::vector<double> w(n, 0.0);  // k v^k = T^k(0)
  std::vector<double> prev(n, 0.0);
  std::vector<double> delta(n);
  for (int k = 1; k <= steps; ++k) {
    w = t(w);
    if (SupNorm(w) > kGrowthCap) {
      throw UnboundedGrowth("value iteration exceeded |k v^k| = 1e12 at k = " +
                            std::to_string(k));
    }
    ValueIterationStep step;
    step.k = k;
    step.v.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      step.v[i] = w[i] / k;
      delta[i] = step.v[i] - prev[i];
    }
    step.residual = Hilbert(delta);
    prev = step.v;
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

bool InSlice(const OperatorHandle& t, std::span<const double> x, double alpha,
             double beta) {
  const auto tx = t(x);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = tx[i] - x[i];
    if (d < alpha - kSliceTol || d > beta + kSliceTol) return false;
  }
  return true;
}

bool InDAlpha(const OperatorHandle& t, std::span<const double> x,
              double alpha) {
  const auto tx = t(x);
  std::vector<double> d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - tx[i];
  return Hilbert(d) <= alpha + kSliceTol;
}

std::vector<std::vector<double>> RecessionProbe(const OperatorHandle& t,
                                                std::span<const double> x,
                                                std::span<const double> rhos) {
  std::vector<std::vector<double>> out;
  std::vector<double> scaled(x.size());
  for (double rho : rhos) {
    for (std::size_t i = 0; i < x.size(); ++i) scaled[i] = rho * x[i];
    auto y = t(scaled);
    for (double& v : y) v /= rho;
    out.push_back(std::move(y));
  }
  return out;
}

}  // namespace ergodic
