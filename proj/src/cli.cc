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

#include "ergodic/cli.h"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "ergodic/crosscheck.h"
#include "ergodic/dominion.h"
#include "ergodic/errors.h"
#include "ergodic/game_io.h"
#include "ergodic/json_writer.h"
#include "ergodic/report.h"
#include "ergodic/sim.h"
#include "ergodic/solver.h"

namespace ergodic {
namespace {

using nlohmann::json;

struct Flags {
  std::string game;
  std::string out;
  std::string strategies;
  double tol = SolveOptions{}.tol;
  double tol_lp = kDefaultLpTol;
  double theta = SolveOptions{}.theta;
  int max_iter = SolveOptions{}.max_iter;
  std::size_t enum_cap = kDefaultEnumCap;
  std::uint64_t seed = 0;
  int trials = 20;
  int steps = 100;
  int horizon = 100;
  int episodes = 10000;
  std::size_t state = 1;
};

SolveOptions ToSolveOptions(const Flags& f) {
  SolveOptions o;
  o.tol = f.tol;
  o.theta = f.theta;
  o.max_iter = f.max_iter;
  return o;
}

json SolveParams(const Flags& f) {
  return {{"tol", f.tol}, {"theta", f.theta}, {"max_iter", f.max_iter}};
}

class Run {
 public:
  Run(std::string command, const Flags& flags, std::ostream& out)
      : flags_(flags), out_(out), start_(std::chrono::steady_clock::now()) {
    manifest_.command = std::move(command);
  }

  RunManifest& manifest() { return manifest_; }

  void SetInput(const std::string& path) {
    manifest_.input_path = path;
    manifest_.input_sha256 = Sha256File(path);
  }

  void Finish() {
    manifest_.wall_seconds = std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - start_)
                                 .count();
  }

  // Embeds the manifest and writes to --out or the output stream.
  void EmitJson(json body) {
    Finish();
    body["manifest"] = ToJson(manifest_);
    if (flags_.out.empty()) {
      out_ << DumpJson(body) << "\n";
    } else {
      WriteJsonFile(flags_.out, body);
    }
  }

  // CSV to --out with a sidecar manifest, or to the output stream.
  void EmitCsv(const std::string& csv) {
    Finish();
    if (flags_.out.empty()) {
      out_ << csv;
      return;
    }
    std::ofstream f(flags_.out, std::ios::binary);
    if (!f) throw IoError("cannot write '" + flags_.out + "'");
    f << csv;
    if (!f) throw IoError("write failed for '" + flags_.out + "'");
    WriteJsonFile(flags_.out + ".manifest.json",
                  json{{"manifest", ToJson(manifest_)}});
  }

 private:
  const Flags& flags_;
  std::ostream& out_;
  RunManifest manifest_;
  std::chrono::steady_clock::time_point start_;
};

const FiniteGame& RequireGame(const LoadedOperator& loaded,
                              const std::string& command) {
  if (!loaded.game) {
    throw SchemaError(command + " needs a game file, not a closed-form map");
  }
  return *loaded.game;
}

int RunValidate(const Flags& f, std::ostream& out) {
  Run run("validate", f, out);
  run.SetInput(f.game);
  const json j = ReadJsonFile(f.game);
  json body;
  bool ok = true;
  if (IsClosedFormJson(j)) {
    // OperatorFromJson probes the contract and throws on violation.
    const LoadedOperator loaded = OperatorFromJson(j);
    const ContractReport c =
        ProbeContract(loaded.op, OperatorHandle::kContractProbes, f.seed);
    ok = c.Passed(4 * f.tol_lp);
    body = {{"valid", ok},
            {"kind", "closed_form"},
            {"contract",
             {{"probes", c.probes},
              {"monotonicity", c.monotonicity},
              {"homogeneity", c.homogeneity},
              {"sup_nonexpansive", c.sup_nonexpansive},
              {"hilbert_nonexpansive", c.hilbert_nonexpansive}}}};
  } else {
    GameData data;
    try {
      data = GameDataFromJson(j);
    } catch (const SchemaError& e) {
      throw SchemaError("'" + f.game + "': " + e.what());
    }
    const ValidationReport report = Validate(data);
    ok = report.ok();
    body = ToJson(report);
    body["kind"] = "game";
    body["n"] = data.n;
  }
  run.manifest().seeds = {f.seed};
  run.EmitJson(std::move(body));
  return ok ? kExitOk : kExitUsage;
}

int RunAnalyze(const Flags& f, std::ostream& out) {
  Run run("analyze", f, out);
  run.SetInput(f.game);
  const LoadedOperator loaded = LoadOperator(f.game);
  const FiniteGame& game = RequireGame(loaded, "analyze");
  CrosscheckOptions options;
  options.enum_cap = f.enum_cap;
  options.trials = f.trials;
  options.seed = f.seed;
  options.solve = ToSolveOptions(f);
  const DominionReport max_report =
      EnumerateDominions(game, Player::kMax, f.enum_cap);
  const DominionReport min_report =
      EnumerateDominions(game, Player::kMin, f.enum_cap);
  const CrosscheckReport cross = ErgodicityCrosscheck(game, options);

  json body = ToJson(cross.combinatorial);
  body["n"] = game.num_states();
  body["dominions"] = {{"MAX", ToJson(max_report)["dominions"]},
                       {"MIN", ToJson(min_report)["dominions"]}};
  body["crosscheck"] = ToJson(cross);
  run.manifest().seeds = {f.seed};
  run.manifest().params = SolveParams(f);
  run.manifest().params["enum_cap"] = f.enum_cap;
  run.manifest().params["trials"] = f.trials;
  run.EmitJson(std::move(body));
  return kExitOk;
}

int RunSolve(const Flags& f, std::ostream& out) {
  Run run("solve", f, out);
  run.SetInput(f.game);
  const LoadedOperator loaded = LoadOperator(f.game);
  run.manifest().params = SolveParams(f);
  const ErgodicSolution sol = SolveErgodic(loaded.op, ToSolveOptions(f));
  json body = ToJson(sol);
  body["operator"] = loaded.op.label();
  if (loaded.game) {
    body["strategies"] =
        ToJson(ExtractStrategies(*loaded.game, sol.u.rep(), 0.0, f.tol_lp));
  }
  run.EmitJson(std::move(body));
  return kExitOk;
}

int RunIterate(const Flags& f, std::ostream& out) {
  Run run("iterate", f, out);
  run.SetInput(f.game);
  const LoadedOperator loaded = LoadOperator(f.game);
  if (f.steps < 1) throw ValidationError("--steps must be >= 1");
  const ValueIterationTrace trace = ValueIteration(loaded.op, f.steps);
  run.manifest().params = {{"steps", f.steps}};
  run.EmitCsv(TraceToCsv(trace, loaded.op.dim()));
  return kExitOk;
}

StationaryStrategy ReadStrategy(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw SchemaError(std::string("strategies file lacks \"") + key + "\"");
  }
  return it->get<StationaryStrategy>();
}

int RunSimulate(const Flags& f, std::ostream& out) {
  Run run("simulate", f, out);
  run.SetInput(f.game);
  const FiniteGame game = LoadGame(f.game);
  json sj = ReadJsonFile(f.strategies);
  // Accept a solve output, whose strategies sit under "strategies".
  if (sj.contains("strategies")) sj = sj["strategies"];
  StationaryStrategy sigma, tau;
  try {
    sigma = ReadStrategy(sj, "sigma");
    tau = ReadStrategy(sj, "tau");
  } catch (const json::exception& e) {
    throw SchemaError("'" + f.strategies + "': " + e.what());
  }
  if (f.state < 1 || f.state > game.num_states()) {
    throw IndexError("--state must be in 1.." +
                     std::to_string(game.num_states()));
  }
  if (f.horizon < 1) throw ValidationError("--horizon must be >= 1");
  if (f.episodes < 2) throw ValidationError("--episodes must be >= 2");
  const SimulationResult sim = Simulate(game, sigma, tau, f.state - 1,
                                        f.horizon, f.episodes, f.seed);
  json body = ToJson(sim);
  body["exact_mean"] = ExpectedPayoff(game, sigma, tau, f.horizon)[f.state - 1];
  run.manifest().seeds = {f.seed};
  run.manifest().params = {{"strategies", f.strategies},
                           {"strategies_sha256", Sha256File(f.strategies)},
                           {"state", f.state},
                           {"horizon", f.horizon},
                           {"episodes", f.episodes}};
  run.EmitJson(std::move(body));
  return kExitOk;
}

int RunPerturb(const Flags& f, std::ostream& out) {
  Run run("perturb", f, out);
  run.SetInput(f.game);
  const LoadedOperator loaded = LoadOperator(f.game);
  const SolvabilityProbe probe =
      ProbeSolvability(loaded.op, f.trials, f.seed, ToSolveOptions(f));
  run.manifest().seeds = {f.seed};
  run.manifest().params = SolveParams(f);
  run.manifest().params["trials"] = f.trials;
  run.EmitJson(ToJson(probe));
  return kExitOk;
}

int RunMatrixSolve(const Flags& f, std::ostream& out) {
  Run run("matrix-solve", f, out);
  run.SetInput(f.game);
  json j = ReadJsonFile(f.game);
  if (j.is_object() && j.contains("matrix")) j = j["matrix"];
  std::vector<std::vector<double>> rows;
  try {
    rows = j.get<std::vector<std::vector<double>>>();
  } catch (const json::exception& e) {
    throw SchemaError("'" + f.game + "': expected a matrix of numbers");
  }
  const MatrixGameSolution sol = Solve(MatrixGame::FromRows(rows), f.tol_lp);
  run.manifest().params = {{"tol_lp", f.tol_lp}};
  run.EmitJson(ToJson(sol));
  return kExitOk;
}

bool IsExpectedFailure(const std::exception& e) {
  return dynamic_cast<const NoConvergence*>(&e) ||
         dynamic_cast<const TooLarge*>(&e) ||
         dynamic_cast<const UnboundedGrowth*>(&e);
}

}  // namespace

int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Finite zero-sum stochastic games: ergodicity and mean payoff",
               "ergodic_games"};
  app.require_subcommand(1);
  Flags f;

  auto game_opt = [&](CLI::App* c) {
    c->add_option("--game", f.game, "Game or closed-form operator file")
        ->required()
        ->check(CLI::ExistingFile);
  };
  auto out_opt = [&](CLI::App* c) {
    c->add_option("--out", f.out, "Output path (stdout when omitted)");
  };
  auto solve_opts = [&](CLI::App* c) {
    c->add_option("--tol", f.tol, "Hilbert residual tolerance")
        ->check(CLI::PositiveNumber);
    c->add_option("--theta", f.theta, "Averaging weight in (0, 1]")
        ->check(CLI::Range(1e-12, 1.0));
    c->add_option("--max-iter", f.max_iter, "Iteration budget")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* validate = app.add_subcommand("validate", "Check a game file");
  game_opt(validate);
  out_opt(validate);

  CLI::App* analyze =
      app.add_subcommand("analyze", "Dominions and ergodicity crosscheck");
  game_opt(analyze);
  out_opt(analyze);
  solve_opts(analyze);
  analyze->add_option("--enum-cap", f.enum_cap, "Largest n to enumerate");
  analyze->add_option("--trials", f.trials, "Solvability probe draws");
  analyze->add_option("--seed", f.seed, "Master seed");

  CLI::App* solve = app.add_subcommand("solve", "Solve T(u) = lambda e + u");
  game_opt(solve);
  out_opt(solve);
  solve_opts(solve);

  CLI::App* iterate =
      app.add_subcommand("iterate", "Value iteration trace as CSV");
  game_opt(iterate);
  out_opt(iterate);
  iterate->add_option("--steps", f.steps, "Number of steps K");

  CLI::App* simulate =
      app.add_subcommand("simulate", "Monte Carlo payoff of a strategy pair");
  game_opt(simulate);
  out_opt(simulate);
  simulate->add_option("--strategies", f.strategies, "Strategies file")
      ->required()
      ->check(CLI::ExistingFile);
  simulate->add_option("--state", f.state, "Initial state (1-based)");
  simulate->add_option("--horizon", f.horizon, "Stages per episode");
  simulate->add_option("--episodes", f.episodes, "Number of episodes");
  simulate->add_option("--seed", f.seed, "Master seed");

  CLI::App* perturb =
      app.add_subcommand("perturb", "Solvability probe over random g");
  game_opt(perturb);
  out_opt(perturb);
  solve_opts(perturb);
  perturb->add_option("--trials", f.trials, "Number of draws");
  perturb->add_option("--seed", f.seed, "Master seed");

  CLI::App* matrix =
      app.add_subcommand("matrix-solve", "Value of one matrix game");
  matrix->add_option("--matrix,--game", f.game, "Matrix file")
      ->required()
      ->check(CLI::ExistingFile);
  out_opt(matrix);
  matrix->add_option("--tol", f.tol_lp, "Certificate tolerance")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return RunValidate(f, out);
    if (analyze->parsed()) return RunAnalyze(f, out);
    if (solve->parsed()) return RunSolve(f, out);
    if (iterate->parsed()) return RunIterate(f, out);
    if (simulate->parsed()) return RunSimulate(f, out);
    if (perturb->parsed()) return RunPerturb(f, out);
    if (matrix->parsed()) return RunMatrixSolve(f, out);
  } catch (const std::exception& e) {
    if (IsExpectedFailure(e)) {
      const json body = ErrorToJson(e);
      if (f.out.empty()) {
        out << DumpJson(body) << "\n";
      } else {
        try {
          WriteJsonFile(f.out, body);
        } catch (const std::exception& io) {
          err << "error: " << io.what() << "\n";
        }
      }
      err << "error: " << e.what() << "\n";
      return kExitExpected;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int Dispatch(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return Dispatch(args, std::cout, std::cerr);
}

}  // namespace ergodic
