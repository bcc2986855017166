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

#ifndef ERGODIC_QUOTIENT_H_
#define ERGODIC_QUOTIENT_H_

#include <span>
#include <vector>

namespace ergodic {

// max_i x_i - min_i x_i. Zero exactly on multiples of the unit vector.
double Hilbert(std::span<const double> x);
double SupNorm(std::span<const double> x);

// Element of R^n modulo the line R e, represented by the vector whose
// smallest coordinate is exactly zero.
class QuotientVector {
 public:
  QuotientVector() = default;

  const std::vector<double>& rep() const { return rep_; }
  std::size_t size() const { return rep_.size(); }
  double operator[](std::size_t i) const { return rep_[i]; }
  // Equal to Hilbert(rep()) since the representative is nonnegative.
  double hilbert() const;

  friend QuotientVector Canonicalize(std::span<const double> x);

 private:
  std::vector<double> rep_;
};

QuotientVector Canonicalize(std::span<const double> x);

}  // namespace ergodic

#endif  // ERGODIC_QUOTIENT_H_
