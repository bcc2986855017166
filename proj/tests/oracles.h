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

// Reference computations used only by tests. None of them calls the
// library's matrix-game, operator or dominion code.

#ifndef ERGODIC_TESTS_ORACLES_H_
#define ERGODIC_TESTS_ORACLES_H_

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "ergodic/game.h"
#include "ergodic/random.h"

namespace ergodic::testing {

using Matrix = std::vector<std::vector<double>>;

inline Matrix NegTranspose(const Matrix& m) {
  Matrix t(m[0].size(), std::vector<double>(m.size()));
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = 0; b < m[0].size(); ++b) t[b][a] = -m[a][b];
  }
  return t;
}

// min_b (x^T M)_b.
inline double RowGuarantee(const Matrix& m, const std::vector<double>& x) {
  double g = std::numeric_limits<double>::infinity();
  for (std::size_t b = 0; b < m[0].size(); ++b) {
    double s = 0.0;
    for (std::size_t a = 0; a < m.size(); ++a) s += x[a] * m[a][b];
    g = std::min(g, s);
  }
  return g;
}

// max_a (M y)_a.
inline double ColGuarantee(const Matrix& m, const std::vector<double>& y) {
  double g = -std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < m.size(); ++a) {
    double s = 0.0;
    for (std::size_t b = 0; b < m[0].size(); ++b) s += m[a][b] * y[b];
    g = std::max(g, s);
  }
  return g;
}

// Shapley-Snow kernels: some square submatrix B carries extreme optimal
// strategies that equalize B. Enumerate all of them, solve the equalizer
// systems and keep a pair whose guarantees meet.
struct KernelSolution {
  double value = 0.0;
  std::vector<double> x, y;
};

inline std::optional<std::vector<double>> Equalizer(
    const Matrix& m, const std::vector<std::size_t>& rows,
    const std::vector<std::size_t>& cols, bool row_player, double* v) {
  const std::size_t k = rows.size();
  Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(k + 1, k + 1);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      sys(r, c) = row_player ? m[rows[c]][cols[r]] : m[rows[r]][cols[c]];
    }
    sys(r, k) = -1.0;
    sys(k, r) = 1.0;
  }
  rhs(k) = 1.0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(sys);
  if (!lu.isInvertible()) return std::nullopt;
  const Eigen::VectorXd sol = lu.solve(rhs);
  std::vector<double> p(row_player ? m.size() : m[0].size(), 0.0);
  for (std::size_t r = 0; r < k; ++r) {
    if (sol(r) < -1e-12) return std::nullopt;
    p[row_player ? rows[r] : cols[r]] = std::max(0.0, sol(r));
  }
  *v = sol(k);
  return p;
}

inline KernelSolution KernelValue(const Matrix& m) {
  const std::size_t rows = m.size(), cols = m[0].size();
  for (std::uint32_t rm = 1; rm < (1u << rows); ++rm) {
    std::vector<std::size_t> r;
    for (std::size_t a = 0; a < rows; ++a) if (rm >> a & 1) r.push_back(a);
    for (std::uint32_t cm = 1; cm < (1u << cols); ++cm) {
      std::vector<std::size_t> c;
      for (std::size_t b = 0; b < cols; ++b) if (cm >> b & 1) c.push_back(b);
      if (c.size() != r.size()) continue;
      double vx = 0.0, vy = 0.0;
      auto x = Equalizer(m, r, c, true, &vx);
      auto y = Equalizer(m, r, c, false, &vy);
      if (!x || !y) continue;
      const double lo = RowGuarantee(m, *x), hi = ColGuarantee(m, *y);
      const double scale = 1.0 + std::abs(vx);
      if (hi - lo <= 1e-10 * scale) {
        return {0.5 * (lo + hi), *x, *y};
      }
    }
  }
  return {std::numeric_limits<double>::quiet_NaN(), {}, {}};
}

// Rigorous bracket [lower, upper] on the value: lower is attained by a grid
// strategy of the row player against all pure replies, upper likewise for
// the column player. With two rows the row side is a concave piecewise
// linear function of one variable and is maximized by bisection on its
// slope; otherwise a ~2001-point simplex grid is refined by repeated zooming.
struct Bracket {
  double lower = 0.0;
  double upper = 0.0;
};

inline double MaximinTwoRows(const Matrix& m) {
  auto f = [&](double p) { return RowGuarantee(m, {p, 1.0 - p}); };
  constexpr int kGrid = 2001;
  int best = 0;
  for (int i = 1; i < kGrid; ++i) {
    if (f(i / double(kGrid - 1)) > f(best / double(kGrid - 1))) best = i;
  }
  double lo = std::max(0.0, (best - 1) / double(kGrid - 1));
  double hi = std::min(1.0, (best + 1) / double(kGrid - 1));
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double d = 1e-3 * (hi - lo);
    if (f(std::min(1.0, mid + d)) >= f(std::max(0.0, mid - d))) {
      lo = mid - d;
    } else {
      hi = mid + d;
    }
    lo = std::max(lo, 0.0);
    hi = std::min(hi, 1.0);
  }
  return std::max({f(lo), f(hi), f(0.5 * (lo + hi)),
                   f(best / double(kGrid - 1))});
}

inline void ForEachComposition(std::size_t parts, int total,
                               const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> c(parts, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == parts) {
      c[i] = left;
      fn(c);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      c[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, total);
}

inline double MaximinGrid(const Matrix& m) {
  const std::size_t k = m.size();
  if (k == 1) return RowGuarantee(m, {1.0});
  if (k == 2) return MaximinTwoRows(m);
  int total = 1;
  auto count = [&](int t) {
    double c = 1.0;
    for (std::size_t i = 1; i < k; ++i) c = c * (t + i) / i;
    return c;
  };
  while (count(total + 1) <= 2001) ++total;
  std::vector<double> best_x(k, 1.0 / k);
  double best = RowGuarantee(m, best_x);
  ForEachComposition(k, total, [&](const std::vector<int>& c) {
    std::vector<double> x(k);
    for (std::size_t i = 0; i < k; ++i) x[i] = c[i] / double(total);
    const double g = RowGuarantee(m, x);
    if (g > best) best = g, best_x = x;
  });
  // Nested section search: maximizing a concave function over its last
  // coordinates leaves a concave function of the first, so each level is a
  // one-dimensional concave problem. Every evaluated point is a strategy, so
  // the result stays a lower bound on the value.
  std::vector<double> x(k);
  std::function<double(std::size_t, double)> level = [&](std::size_t j,
                                                          double mass) {
    auto eval = [&](double t) {
      x[j] = t;
      if (j + 2 == k) {
        x[k - 1] = mass - t;
        return RowGuarantee(m, x);
      }
      return level(j + 1, mass - t);
    };
    constexpr double kPhi = 0.6180339887498949;
    double lo = 0.0, hi = mass;
    double p = hi - kPhi * (hi - lo), q = lo + kPhi * (hi - lo);
    double fp = eval(p), fq = eval(q);
    double top = std::max({fp, fq, eval(0.0), eval(mass)});
    for (int it = 0; it < 40; ++it) {
      if (fp >= fq) {
        hi = q, q = p, fq = fp;
        p = hi - kPhi * (hi - lo);
        fp = eval(p);
      } else {
        lo = p, p = q, fp = fq;
        q = lo + kPhi * (hi - lo);
        fq = eval(q);
      }
      top = std::max({top, fp, fq});
    }
    return top;
  };
  best = std::max(best, level(0, 1.0));
  return best;
}

inline Bracket GridBracket(const Matrix& m) {
  return {MaximinGrid(m), -MaximinGrid(NegTranspose(m))};
}

inline Matrix RandomMatrix(SplitMix64& rng, std::size_t rows, std::size_t cols,
                           double lo, double hi, bool integer = false) {
  Matrix m(rows, std::vector<double>(cols));
  for (auto& r : m) {
    for (double& v : r) {
      v = integer ? std::floor(rng.Uniform(lo, hi + 1.0)) : rng.Uniform(lo, hi);
    }
  }
  return m;
}

// M^{i,x} read straight from the game data.
inline Matrix StateMatrixOracle(const GameData& d, std::size_t i,
                                const std::vector<double>& x) {
  Matrix m(d.payoff[i].size(), std::vector<double>(d.payoff[i][0].size()));
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = 0; b < m[a].size(); ++b) {
      double s = d.payoff[i][a][b];
      for (std::size_t j = 0; j < d.n; ++j) s += d.trans[i][a][b][j] * x[j];
      m[a][b] = s;
    }
  }
  return m;
}

inline std::vector<double> OperatorOracle(const GameData& d,
                                          const std::vector<double>& x) {
  std::vector<double> out(d.n);
  for (std::size_t i = 0; i < d.n; ++i) {
    out[i] = KernelValue(StateMatrixOracle(d, i, x)).value;
  }
  return out;
}

// Backward induction over the k-stage game tree: the value of the k-stage
// game is solved stage by stage with the kernel oracle. Returns V_k / k.
inline std::vector<double> GameTreeValue(const GameData& d, int k) {
  std::vector<double> v(d.n, 0.0);
  for (int t = 0; t < k; ++t) v = OperatorOracle(d, v);
  for (double& x : v) x /= k;
  return v;
}

// Exact k-stage mean payoff from i0 by enumerating every history.
inline double PathEnumerationPayoff(const GameData& d, const Matrix& sigma,
                                    const Matrix& tau, std::size_t i0, int k) {
  std::function<double(std::size_t, int)> rec = [&](std::size_t i,
                                                     int left) -> double {
    if (left == 0) return 0.0;
    double total = 0.0;
    for (std::size_t a = 0; a < sigma[i].size(); ++a) {
      for (std::size_t b = 0; b < tau[i].size(); ++b) {
        const double w = sigma[i][a] * tau[i][b];
        if (w == 0.0) continue;
        double cont = 0.0;
        for (std::size_t j = 0; j < d.n; ++j) {
          const double p = d.trans[i][a][b][j];
          if (p > 0.0) cont += p * rec(j, left - 1);
        }
        total += w * (d.payoff[i][a][b] + cont);
      }
    }
    return total;
  };
  return rec(i0, k) / k;
}

// Dominion membership straight from the definition.
inline bool IsDominionOracle(const GameData& d, bool max_player,
                             std::uint64_t mask) {
  if (mask == 0) return false;
  for (std::size_t i = 0; i < d.n; ++i) {
    if (!(mask >> i & 1)) continue;
    const std::size_t own = max_player ? d.payoff[i].size() : d.payoff[i][0].size();
    const std::size_t other = max_player ? d.payoff[i][0].size() : d.payoff[i].size();
    bool found = false;
    for (std::size_t a = 0; a < own && !found; ++a) {
      bool stays = true;
      for (std::size_t b = 0; b < other && stays; ++b) {
        const auto& row = max_player ? d.trans[i][a][b] : d.trans[i][b][a];
        for (std::size_t j = 0; j < d.n; ++j) {
          if (row[j] > 1e-12 && !(mask >> j & 1)) stays = false;
        }
      }
      found = stays;
    }
    if (!found) return false;
  }
  return true;
}

// Ergodic iff no MAX dominion is disjoint from some MIN dominion.
inline bool ErgodicOracle(const GameData& d) {
  const std::uint64_t full = (std::uint64_t{1} << d.n) - 1;
  for (std::uint64_t i = 1; i <= full; ++i) {
    if (!IsDominionOracle(d, true, i)) continue;
    for (std::uint64_t j = 1; j <= full; ++j) {
      if ((i & j) == 0 && IsDominionOracle(d, false, j)) return false;
    }
  }
  return true;
}

}  // namespace ergodic::testing

#endif  // ERGODIC_TESTS_ORACLES_H_
