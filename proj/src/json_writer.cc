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

#include "ergodic/json_writer.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ergodic/errors.h"

namespace ergodic {
namespace {

void Newline(std::string& out, int indent, int depth) {
  if (indent < 0) return;
  out += '\n';
  out.append(static_cast<std::size_t>(indent * depth), ' ');
}

void Dump(const nlohmann::json& j, int indent, int depth, std::string& out) {
  using value_t = nlohmann::json::value_t;
  switch (j.type()) {
    case value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        Newline(out, indent, depth + 1);
        out += nlohmann::json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        Dump(it.value(), indent, depth + 1, out);
      }
      Newline(out, indent, depth);
      out += '}';
      return;
    }
    case value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line; nested arrays break.
      bool flat = true;
      for (const auto& e : j) {
        if (e.is_structured()) flat = false;
      }
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat && indent >= 0 ? ", " : ",";
        first = false;
        if (!flat) Newline(out, indent, depth + 1);
        Dump(e, indent, depth + 1, out);
      }
      if (!flat) Newline(out, indent, depth);
      out += ']';
      return;
    }
    case value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      out += buf;
      // Keep floats recognizable as floats.
      std::string_view s(buf);
      if (s.find_first_of(".eEn") == std::string_view::npos) out += ".0";
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string DumpJson(const nlohmann::json& j, int indent) {
  std::string out;
  Dump(j, indent, 0, out);
  return out;
}

void WriteJsonFile(const std::string& path, const nlohmann::json& j) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << DumpJson(j) << '\n';
  if (!f) throw IoError("write to '" + path + "' failed");
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

nlohmann::json ReadJsonFile(const std::string& path) {
  const std::string text = ReadTextFile(path);
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

}  // namespace ergodic
