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

#include "ergodic/quotient.h"

#include <algorithm>
#include <cmath>

namespace ergodic {

double Hilbert(std::span<const double> x) {
  if (x.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  return *hi - *lo;
}

double SupNorm(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

double QuotientVector::hilbert() const {
  return rep_.empty() ? 0.0 : *std::max_element(rep_.begin(), rep_.end());
}

QuotientVector Canonicalize(std::span<const double> x) {
  QuotientVector q;
  q.rep_.assign(x.begin(), x.end());
  if (q.rep_.empty()) return q;
  const double lo = *std::min_element(q.rep_.begin(), q.rep_.end());
  for (double& v : q.rep_) v -= lo;
  return q;
}

}  // namespace ergodic
