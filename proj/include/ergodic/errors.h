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

#ifndef ERGODIC_ERRORS_H_
#define ERGODIC_ERRORS_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace ergodic {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// The matrix-game simplex exceeded its iteration cap or produced strategies
// whose optimality certificates do not hold.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

class UnboundedGrowth : public Error {
 public:
  using Error::Error;
};

class ContractViolation : public Error {
 public:
  using Error::Error;
};

class EmptySet : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidStrategy : public Error {
 public:
  using Error::Error;
};

// Raised by the ergodic solver when the residual never reaches the requested
// tolerance. Carries the best residual seen and the residual trace so callers
// can report them.
class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, double best_residual, int iterations,
                std::vector<double> trace)
      : Error(what),
        best_residual_(best_residual),
        iterations_(iterations),
        trace_(std::move(trace)) {}

  double best_residual() const { return best_residual_; }
  int iterations() const { return iterations_; }
  const std::vector<double>& trace() const { return trace_; }

 private:
  double best_residual_;
  int iterations_;
  std::vector<double> trace_;
};

}  // namespace ergodic

#endif  // ERGODIC_ERRORS_H_
