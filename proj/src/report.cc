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

#include "ergodic/report.h"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>

#include "ergodic/errors.h"

namespace ergodic {

using nlohmann::json;

std::string Sha256File(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  const std::string data((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(),
                 nullptr) != 1) {
    throw IoError("sha256 failed for '" + path + "'");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof(buf), "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

json ToJson(const RunManifest& m) {
  return {{"command", m.command},
          {"version", m.version},
          {"input", {{"path", m.input_path}, {"sha256", m.input_sha256}}},
          {"seeds", m.seeds},
          {"wall_seconds", m.wall_seconds},
          {"params", m.params}};
}

json ToJson(const StateSet& s) { return s.labels(); }

json ToJson(const DominionReport& r) {
  json list = json::array();
  for (const auto& d : r.dominions) list.push_back(ToJson(d));
  return {{"player", PlayerName(r.player)}, {"dominions", list}};
}

json ToJson(const ErgodicityVerdict& v) {
  json j = {{"ergodic", v.ergodic},
            {"method", v.method == VerdictMethod::kCombinatorial
                           ? "dominions"
                           : "slice_limit"}};
  if (v.witness) {
    j["witness"] = json::array(
        {ToJson(v.witness->first), ToJson(v.witness->second)});
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json ToJson(const SolvabilityProbe& p) {
  json failures = json::array();
  for (const auto& f : p.failures) {
    failures.push_back({{"g", f.g},
                        {"best_residual", f.best_residual},
                        {"iterations", f.iterations}});
  }
  json solvable = json::array();
  for (bool b : p.solvable) solvable.push_back(b);
  return {{"seed", p.seed},         {"trials", p.trials()},
          {"solved", p.solved()},   {"fraction", p.fraction()},
          {"draws", p.draws},       {"solvable", solvable},
          {"failures", failures}};
}

json ToJson(const CrosscheckReport& r) {
  return {{"dominions", ToJson(r.combinatorial)},
          {"slice_limit", ToJson(r.slice)},
          {"probe",
           {{"ergodic", r.probe_ergodic},
            {"trials", r.probe.trials()},
            {"solved", r.probe.solved()},
            {"seed", r.probe.seed}}},
          {"slice_agrees", r.slice_agrees()},
          {"probe_agrees", r.probe_agrees()},
          {"probe_consistent", r.probe_consistent()}};
}

json ToJson(const ErgodicSolution& s) {
  json j = {{"lambda", s.lambda},
            {"u", s.u.rep()},
            {"hilbert_u", s.u.hilbert()},
            {"residual", s.residual},
            {"iterations", s.iterations}};
  if (!s.trace.empty()) j["trace"] = s.trace;
  return j;
}

json ToJson(const StrategyPair& s) {
  json certs = json::array();
  for (std::size_t i = 0; i < s.certificates.size(); ++i) {
    const auto& c = s.certificates[i];
    certs.push_back({{"state", i + 1},
                     {"value", c.value},
                     {"max_guarantee", c.max_guarantee},
                     {"min_guarantee", c.min_guarantee}});
  }
  return {{"sigma", s.sigma},
          {"tau", s.tau},
          {"epsilon", s.epsilon},
          {"certificates", certs}};
}

json ToJson(const MatrixGameSolution& s) {
  return {{"value", s.value}, {"x", s.x}, {"y", s.y}, {"gap", s.gap}};
}

json ToJson(const SimulationResult& s) {
  return {{"initial_state", s.initial_state + 1},
          {"horizon", s.horizon},
          {"episodes", s.episodes},
          {"mean_payoff", s.mean_payoff},
          {"std_error", s.std_error},
          {"seed", s.seed}};
}

json ToJson(const ValidationReport& r) {
  json issues = json::array();
  for (const auto& i : r.issues) {
    issues.push_back({{"location", i.location}, {"message", i.message}});
  }
  return {{"valid", r.ok()}, {"issues", issues}};
}

json ToJson(const UniquenessResult& r) {
  json reps = json::array();
  for (const auto& q : r.representatives) reps.push_back(q.rep());
  return {{"unique", r.unique},
          {"verdict", r.unique ? "Unique" : "MultipleFound"},
          {"representatives", reps},
          {"lambdas", r.lambdas},
          {"seed", r.seed}};
}

namespace {

const char* ErrorType(const std::exception& e) {
  if (dynamic_cast<const NoConvergence*>(&e)) return "NoConvergence";
  if (dynamic_cast<const TooLarge*>(&e)) return "TooLarge";
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const SchemaError*>(&e)) return "SchemaError";
  if (dynamic_cast<const ValidationError*>(&e)) return "ValidationError";
  if (dynamic_cast<const DimensionError*>(&e)) return "DimensionError";
  if (dynamic_cast<const IndexError*>(&e)) return "IndexError";
  if (dynamic_cast<const IoError*>(&e)) return "IoError";
  if (dynamic_cast<const NumericalFailure*>(&e)) return "NumericalFailure";
  if (dynamic_cast<const UnboundedGrowth*>(&e)) return "UnboundedGrowth";
  if (dynamic_cast<const ContractViolation*>(&e)) return "ContractViolation";
  if (dynamic_cast<const EmptySet*>(&e)) return "EmptySet";
  if (dynamic_cast<const InvalidStrategy*>(&e)) return "InvalidStrategy";
  return "Error";
}

}  // namespace

json ErrorToJson(const std::exception& e, std::size_t max_trace) {
  json err = {{"type", ErrorType(e)}, {"message", e.what()}};
  if (const auto* nc = dynamic_cast<const NoConvergence*>(&e)) {
    err["best_residual"] = nc->best_residual();
    err["iterations"] = nc->iterations();
    const auto& trace = nc->trace();
    const std::size_t stride =
        max_trace == 0 ? 1 : (trace.size() + max_trace - 1) / max_trace;
    json ks = json::array(), rs = json::array();
    for (std::size_t k = 0; k < trace.size(); k += std::max<std::size_t>(stride, 1)) {
      ks.push_back(k + 1);
      rs.push_back(trace[k]);
    }
    if (!trace.empty() && ks.back() != trace.size()) {
      ks.push_back(trace.size());
      rs.push_back(trace.back());
    }
    err["residual_trace"] = {{"iteration", ks}, {"residual", rs}};
  }
  return {{"error", err}};
}

std::string TraceToCsv(const ValueIterationTrace& trace, std::size_t n) {
  std::string out = "k";
  for (std::size_t i = 0; i < n; ++i) out += ",v" + std::to_string(i + 1);
  out += ",residual\n";
  char buf[32];
  for (const auto& step : trace.steps) {
    out += std::to_string(step.k);
    for (double v : step.v) {
      std::snprintf(buf, sizeof(buf), ",%.17g", v);
      out += buf;
    }
    std::snprintf(buf, sizeof(buf), ",%.17g\n", step.residual);
    out += buf;
  }
  return out;
}

}  // namespace ergodic
