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

#ifndef ERGODIC_JSON_WRITER_H_
#define ERGODIC_JSON_WRITER_H_

#include <string>

#include "json.hpp"

namespace ergodic {

// Serializes `j` with every floating-point number printed using 17
// significant digits, so doubles survive a text round trip bit for bit.
// indent < 0 gives compact output.
std::string DumpJson(const nlohmann::json& j, int indent = 2);

// Writes DumpJson(j) plus a trailing newline. Throws IoError.
void WriteJsonFile(const std::string& path, const nlohmann::json& j);

// Reads and parses a JSON file. Throws IoError / ParseError.
nlohmann::json ReadJsonFile(const std::string& path);

std::string ReadTextFile(const std::string& path);

}  // namespace ergodic

#endif  // ERGODIC_JSON_WRITER_H_
