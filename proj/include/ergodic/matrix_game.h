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

#ifndef ERGODIC_MATRIX_GAME_H_
#define ERGODIC_MATRIX_GAME_H_

#include <cstddef>
#include <vector>

namespace ergodic {

inline constexpr double kDefaultLpTol = 1e-9;

// A one-shot zero-sum game: MAX picks a row, MIN picks a column, MIN pays
// MAX the entry. Entries are stored row-major and must be finite.
class MatrixGame {
 public:
  // Throws DimensionError on empty shapes or size mismatch, ValidationError
  // on non-finite entries.
  MatrixGame(std::size_t rows, std::size_t cols, std::vector<double> entries);
  static MatrixGame FromRows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t a, std::size_t b) const {
    return entries_[a * cols_ + b];
  }
  const std::vector<double>& entries() const { return entries_; }

  MatrixGame Shifted(double c) const;
  // -M^T: the same game seen from MIN's side.
  MatrixGame NegatedTranspose() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
};

struct MatrixGameSolution {
  double value = 0.0;
  std::vector<double> x;  // MAX's optimal mixed action over rows
  std::vector<double> y;  // MIN's optimal mixed action over columns
  // max_a (M y)_a - min_b (x^T M)_b; nonnegative up to rounding.
  double gap = 0.0;
};

// tol_lp * max(1, max_ab |M_ab|). Simplex rounding grows with the entries,
// so certificates are checked relative to the matrix scale.
double CertificateTolerance(const MatrixGame& m, double tol_lp);

// Value and optimal mixed strategies. Pure saddle points are detected
// directly; otherwise the value LP is solved by a dense primal simplex with
// Bland's rule on the matrix shifted to be >= 1, and the value is reported
// as the midpoint of [min_b (x^T M)_b, max_a (M y)_a]. NumericalFailure is
// thrown when that interval is wider than 2 CertificateTolerance(m, tol_lp)
// or when the simplex exceeds 50 * (rows + cols) pivots.
MatrixGameSolution Solve(const MatrixGame& m, double tol_lp = kDefaultLpTol);

// |value(M + c) - (value(M) + c)| <= 2 tol_lp.
bool ShiftInvarianceCheck(const MatrixGame& m, double c,
                          double tol_lp = kDefaultLpTol);

}  // namespace ergodic

#endif  // ERGODIC_MATRIX_GAME_H_
