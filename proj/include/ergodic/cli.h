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

#ifndef ERGODIC_CLI_H_
#define ERGODIC_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace ergodic {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;     // parse, schema, validation, I/O
inline constexpr int kExitExpected = 2;  // NoConvergence, TooLarge, growth

// Runs one subcommand. args excludes the program name. Results go to --out
// when given and to `out` otherwise; diagnostics go to `err`.
int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);
int Dispatch(int argc, char** argv);

}  // namespace ergodic

#endif  // ERGODIC_CLI_H_
