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

#include "ergodic/matrix_game.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "ergodic/errors.h"

namespace ergodic {
namespace {

struct Certificate {
  double lower;  // min_b (x^T M)_b
  double upper;  // max_a (M y)_a
};

Certificate Certify(const MatrixGame& m, const std::vector<double>& x,
                    const std::vector<double>& y) {
  Certificate c{std::numeric_limits<double>::infinity(),
                -std::numeric_limits<double>::infinity()};
  for (std::size_t b = 0; b < m.cols(); ++b) {
    double s = 0.0;
    for (std::size_t a = 0; a < m.rows(); ++a) s += x[a] * m(a, b);
    c.lower = std::min(c.lower, s);
  }
  for (std::size_t a = 0; a < m.rows(); ++a) {
    double s = 0.0;
    for (std::size_t b = 0; b < m.cols(); ++b) s += m(a, b) * y[b];
    c.upper = std::max(c.upper, s);
  }
  return c;
}

// Clears rounding-level negatives and rescales onto the simplex.
void Normalize(std::vector<double>& p) {
  double sum = 0.0;
  for (double& v : p) {
    if (v < 0.0) v = 0.0;
    sum += v;
  }
  for (double& v : p) v /= sum;
}

bool SolvePure(const MatrixGame& m, MatrixGameSolution& out) {
  double maximin = -std::numeric_limits<double>::infinity();
  std::size_t best_row = 0;
  for (std::size_t a = 0; a < m.rows(); ++a) {
    double row_min = m(a, 0);
    for (std::size_t b = 1; b < m.cols(); ++b) row_min = std::min(row_min, m(a, b));
    if (row_min > maximin) {
      maximin = row_min;
      best_row = a;
    }
  }
  double minimax = std::numeric_limits<double>::infinity();
  std::size_t best_col = 0;
  for (std::size_t b = 0; b < m.cols(); ++b) {
    double col_max = m(0, b);
    for (std::size_t a = 1; a < m.rows(); ++a) col_max = std::max(col_max, m(a, b));
    if (col_max < minimax) {
      minimax = col_max;
      best_col = b;
    }
  }
  if (maximin != minimax) return false;
  out.value = maximin;
  out.x.assign(m.rows(), 0.0);
  out.y.assign(m.cols(), 0.0);
  out.x[best_row] = 1.0;
  out.y[best_col] = 1.0;
  out.gap = 0.0;
  return true;
}

// MIN's side of the shifted game: maximize sum(y') s.t. A y' <= 1, y' >= 0,
// with A = M + shift >= 1. At the optimum, v' = 1 / sum(y'), y = v' y', and
// the slack reduced costs give x' with x = v' x'.
void SolveMixed(const MatrixGame& m, MatrixGameSolution& out) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const double min_entry =
      *std::min_element(m.entries().begin(), m.entries().end());
  const double shift = 1.0 - min_entry;

  const std::size_t width = cols + rows + 1;  // y', slacks, rhs
  const std::size_t rhs = width - 1;
  std::vector<double> tab((rows + 1) * width, 0.0);
  auto at = [&](std::size_t r, std::size_t c) -> double& {
    return tab[r * width + c];
  };
  double scale = 1.0;
  for (std::size_t a = 0; a < rows; ++a) {
    for (std::size_t b = 0; b < cols; ++b) {
      at(a, b) = m(a, b) + shift;
      scale = std::max(scale, at(a, b));
    }
    at(a, cols + a) = 1.0;
    at(a, rhs) = 1.0;
  }
  const std::size_t obj = rows;
  for (std::size_t b = 0; b < cols; ++b) at(obj, b) = -1.0;

  std::vector<std::size_t> basis(rows);
  for (std::size_t a = 0; a < rows; ++a) basis[a] = cols + a;

  const double eps = 1e-12 * scale;
  // Objective entries are -1 + sum_a x'_a A_ab, O(1) whatever the shift, while
  // the duals x' scale like 1 / shift; a scaled threshold would stop early.
  const double opt_eps = 1e-15;
  const std::size_t cap = 50 * (rows + cols);
  for (std::size_t iter = 0;; ++iter) {
    // Bland: lowest-index improving column.
    std::size_t enter = width;
    for (std::size_t c = 0; c < rhs; ++c) {
      if (at(obj, c) < -opt_eps) {
        enter = c;
        break;
      }
    }
    if (enter == width) break;
    if (iter >= cap) {
      throw NumericalFailure("matrix game simplex exceeded " +
                             std::to_string(cap) + " pivots");
    }
    std::size_t leave = rows;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < rows; ++r) {
      const double coef = at(r, enter);
      if (coef <= eps) continue;
      const double ratio = at(r, rhs) / coef;
      if (ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leave])) {
        best_ratio = ratio;
        leave = r;
      }
    }
    if (leave == rows) {
      // Cannot happen with a strictly positive constraint matrix.
      throw NumericalFailure("matrix game simplex found an unbounded ray");
    }
    const double pivot = at(leave, enter);
    for (std::size_t c = 0; c < width; ++c) at(leave, c) /= pivot;
    for (std::size_t r = 0; r <= rows; ++r) {
      if (r == leave) continue;
      const double f = at(r, enter);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < width; ++c) at(r, c) -= f * at(leave, c);
    }
    basis[leave] = enter;
  }

  const double total = at(obj, rhs);
  if (!(total > 0.0)) {
    throw NumericalFailure("matrix game simplex ended with objective <= 0");
  }
  const double shifted_value = 1.0 / total;
  out.y.assign(cols, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] < cols) out.y[basis[r]] = at(r, rhs) * shifted_value;
  }
  out.x.assign(rows, 0.0);
  for (std::size_t a = 0; a < rows; ++a) {
    out.x[a] = at(obj, cols + a) * shifted_value;
  }
  Normalize(out.x);
  Normalize(out.y);
  out.value = shifted_value - shift;
}

}  // namespace

double CertificateTolerance(const MatrixGame& m, double tol_lp) {
  double scale = 1.0;
  for (double v : m.entries()) scale = std::max(scale, std::abs(v));
  return tol_lp * scale;
}

MatrixGame::MatrixGame(std::size_t rows, std::size_t cols,
                       std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw DimensionError("matrix game needs at least one row and column");
  }
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("matrix game entry count does not match shape");
  }
  for (double v : entries_) {
    if (!std::isfinite(v)) throw ValidationError("matrix game entry not finite");
  }
}

MatrixGame MatrixGame::FromRows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows[0].empty()) {
    throw DimensionError("matrix game needs at least one row and column");
  }
  const std::size_t cols = rows[0].size();
  std::vector<double> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionError("ragged matrix rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return MatrixGame(rows.size(), cols, std::move(entries));
}

MatrixGame MatrixGame::Shifted(double c) const {
  std::vector<double> e = entries_;
  for (double& v : e) v += c;
  return MatrixGame(rows_, cols_, std::move(e));
}

MatrixGame MatrixGame::NegatedTranspose() const {
  std::vector<double> e(entries_.size());
  for (std::size_t a = 0; a < rows_; ++a) {
    for (std::size_t b = 0; b < cols_; ++b) {
      e[b * rows_ + a] = -entries_[a * cols_ + b];
    }
  }
  return MatrixGame(cols_, rows_, std::move(e));
}

MatrixGameSolution Solve(const MatrixGame& m, double tol_lp) {
  MatrixGameSolution sol;
  if (SolvePure(m, sol)) return sol;
  SolveMixed(m, sol);
  const Certificate cert = Certify(m, sol.x, sol.y);
  sol.gap = cert.upper - cert.lower;
  const double tol = CertificateTolerance(m, tol_lp);
  if (!(sol.gap <= 2.0 * tol) || sol.value < cert.lower - tol ||
      sol.value > cert.upper + tol) {
    char buf[192];
    std::snprintf(buf, sizeof(buf),
                  "matrix game certificate failed: value %.17g, "
                  "guaranteed [%.17g, %.17g], tolerance %.3g",
                  sol.value, cert.lower, cert.upper, tol);
    throw NumericalFailure(buf);
  }
  sol.value = 0.5 * (cert.lower + cert.upper);
  return sol;
}

bool ShiftInvarianceCheck(const MatrixGame& m, double c, double tol_lp) {
  const double base = Solve(m, tol_lp).value;
  const double shifted = Solve(m.Shifted(c), tol_lp).value;
  return std::abs(shifted - (base + c)) <= 2.0 * tol_lp;
}

}  // namespace ergodic
