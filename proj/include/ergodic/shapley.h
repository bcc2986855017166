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

#ifndef ERGODIC_SHAPLEY_H_
#define ERGODIC_SHAPLEY_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ergodic/game.h"
#include "ergodic/matrix_game.h"

namespace ergodic {

// M^{i,x}[a][b] = r(i,a,b) + sum_l x_l p(l | i,a,b).
MatrixGame StateMatrix(const FiniteGame& game, std::size_t i,
                       std::span<const double> x);

// T(x) for the game; coordinate i is the value of StateMatrix(game, i, x).
// NumericalFailure from the inner solve is rethrown naming the state.
std::vector<double> EvalGameOperator(const FiniteGame& game,
                                     std::span<const double> x,
                                     double tol_lp = kDefaultLpTol);

// Per-state solutions of the one-shot games at x, certificates included.
std::vector<MatrixGameSolution> SolveStateGames(const FiniteGame& game,
                                                std::span<const double> x,
                                                double tol_lp = kDefaultLpTol);

// Worst violations observed while probing the operator contract on random
// points. All fields are >= 0; zero means no violation was observed.
struct ContractReport {
  int probes = 0;
  double monotonicity = 0.0;          // max_i (T(x) - T(y))_i for x <= y
  double homogeneity = 0.0;           // |T(x + a e) - T(x) - a e|_inf
  double sup_nonexpansive = 0.0;      // |Tx - Ty|_inf - |x - y|_inf
  double hilbert_nonexpansive = 0.0;  // H(Tx - Ty) - H(x - y)

  double worst() const;
  bool Passed(double tol) const { return worst() <= tol; }
};

// A monotone, additively homogeneous self-map of R^n: either the Shapley
// operator of a FiniteGame or a closed-form map. Cheap to copy.
class OperatorHandle {
 public:
  enum class Kind { kGameBacked, kClosedForm };
  using EvalFn = std::function<std::vector<double>(std::span<const double>)>;

  // Tolerance used when admitting closed-form maps.
  static constexpr double kContractTol = 1e-7;
  static constexpr int kContractProbes = 100;

  static OperatorHandle FromGame(FiniteGame game,
                                 double tol_lp = kDefaultLpTol);
  // Probes the map at kContractProbes random points and throws
  // ContractViolation when monotonicity or additive homogeneity fails by more
  // than kContractTol.
  static OperatorHandle ClosedForm(std::string label, std::size_t n, EvalFn fn,
                                   std::uint64_t probe_seed = 0x5eed);

  std::size_t dim() const { return n_; }
  Kind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  // Null for closed-form handles.
  const FiniteGame* game() const { return game_.get(); }
  double tol_lp() const { return tol_lp_; }

  // Throws DimensionError when x.size() != dim().
  std::vector<double> operator()(std::span<const double> x) const;

  // g + T. Game-backed handles stay game-backed (payoffs are perturbed).
  OperatorHandle Perturbed(std::span<const double> g) const;

 private:
  OperatorHandle() = default;

  Kind kind_ = Kind::kClosedForm;
  std::size_t n_ = 0;
  std::string label_;
  std::shared_ptr<const FiniteGame> game_;
  EvalFn fn_;
  double tol_lp_ = kDefaultLpTol;
};

ContractReport ProbeContract(const OperatorHandle& t, int probes,
                             std::uint64_t seed, double scale = 10.0);

// Closed-form fixtures on R^2: identity, coordinate swap, (max, min), and the
// two-state perfect-information game with unbounded payoffs,
// T(x) = (h(x2 - x1) + x1, -h(x2 - x1) + x2) where
// h(z) = 1 - log(2 - z) for z <= 1 and h(z) = z for z >= 1.
OperatorHandle SquareOperator();
OperatorHandle CircleOperator();
OperatorHandle TriangleOperator();
OperatorHandle LogGameOperator();
double LogGameH(double z);

// "square", "circle", "triangle" or "log". Throws SchemaError otherwise.
OperatorHandle ClosedFormByName(const std::string& name);

struct ValueIterationStep {
  int k = 0;
  std::vector<double> v;   // v^k = T^k(0) / k
  double residual = 0.0;   // Hilbert(v^k - v^{k-1})
};

struct ValueIterationTrace {
  std::vector<ValueIterationStep> steps;
};

inline constexpr double kGrowthCap = 1e12;

// (k+1) v^{k+1} = T(k v^k), v^0 = 0, for k = 1..steps. Throws
// UnboundedGrowth when |k v^k|_inf exceeds kGrowthCap.
ValueIterationTrace ValueIteration(const OperatorHandle& t, int steps);

inline constexpr double kSliceTol = 1e-9;

// alpha e + x <= T(x) <= beta e + x, entrywise within kSliceTol.
bool InSlice(const OperatorHandle& t, std::span<const double> x, double alpha,
             double beta);
// Hilbert(x - T(x)) <= alpha within kSliceTol.
bool InDAlpha(const OperatorHandle& t, std::span<const double> x,
              double alpha);

// T(rho x) / rho for each rho; a diagnostic for the recession operator.
std::vector<std::vector<double>> RecessionProbe(const OperatorHandle& t,
                                                std::span<const double> x,
                                                std::span<const double> rhos);

}  // namespace ergodic

#endif  // ERGODIC_SHAPLEY_H_
