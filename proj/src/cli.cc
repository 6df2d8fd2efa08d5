// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ksupplier/cli.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ksupplier/generators.h"
#include "ksupplier/instance_io.h"
#include "ksupplier/solver.h"

namespace ksupplier {
namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct RunFlags {
  std::string path;
  std::string objective;
  int parallel = 1;
  double timeout = 0.0;
  bool timing = false;
  uint64_t cap = 0;
};

Objective ResolveObjective(const std::string& flag, const InstanceDocument& doc) {
  if (!flag.empty()) return ParseObjective(flag);
  return doc.objective.value_or(Objective::kSupplier);
}

int EmitSolution(const Solution& s, double bound, bool timing,
                 std::ostream& out) {
  out << EmitSolutionDocument(ToSolutionDocument(s, bound, timing));
  return s.feasible ? kExitOk : kExitInfeasible;
}

int CmdSolve(const RunFlags& f, std::ostream& out) {
  const InstanceDocument doc = ParseInstanceDocument(ReadFile(f.path));
  const MetricInstance instance = ToInstance(doc);
  const Objective objective = ResolveObjective(f.objective, doc);
  const Solution s = Solve(instance, doc.constraint, objective,
                           {f.parallel, f.timeout});
  return EmitSolution(s, ApproximationBound(objective, instance.z()), f.timing,
                      out);
}

int CmdOracle(const RunFlags& f, std::ostream& out) {
  const InstanceDocument doc = ParseInstanceDocument(ReadFile(f.path));
  const MetricInstance instance = ToInstance(doc);
  const Objective objective = ResolveObjective(f.objective, doc);
  const Solution s = OracleSolve(instance, doc.constraint, objective,
                                 {f.parallel, f.timeout}, f.cap);
  return EmitSolution(s, 1.0, f.timing, out);
}

struct VerifyFlags {
  std::string path;
  int trials = 10;
  uint64_t seed = 1;
  std::string family = "unconstrained";
  std::string objective;
  std::string format = "text";
  int parallel = 1;
};

struct VerifyRow {
  int trial = 0;
  uint64_t seed = 0;
  std::string kind;
  std::string family;
  Objective objective = Objective::kSupplier;
  int n = 0;
  int num_locations = 0;
  int k = 0;
  int m = 0;
  double z = 1.0;
  RatioReport report;
};

// A small random instance in the acceptance ranges for trial seed `seed`.
InstanceDocument TrialDocument(uint64_t seed, const std::string& family,
                               const std::string& objective_flag,
                               std::string* kind_name) {
  Rng rng(seed);
  GeneratorParams p;
  p.kind = rng.Coin() ? GeneratorKind::kPlanted : GeneratorKind::kUniformSquare;
  p.seed = rng.Next();
  p.n = rng.Uniform(6, 10);
  const bool center = objective_flag.empty()
                          ? false
                          : ParseObjective(objective_flag) == Objective::kCenter;
  p.num_locations = center ? 0 : rng.Uniform(3, 6);
  p.k = rng.Uniform(2, 3);
  p.m = rng.Uniform(0, 2);
  p.z = rng.Uniform(1, 2);
  p.family = family == "all" ? static_cast<ConstraintFamily>(rng.Uniform(0, 8))
                             : ParseConstraintFamily(family);
  *kind_name = GeneratorKindName(p.kind);
  return GenerateInstance(p);
}

std::string Num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

int CmdVerify(const VerifyFlags& f, std::ostream& out) {
  std::vector<VerifyRow> rows;
  const int trials = f.path.empty() ? f.trials : 1;
  for (int t = 0; t < trials; ++t) {
    VerifyRow row;
    row.trial = t;
    InstanceDocument doc;
    if (f.path.empty()) {
      row.seed = f.seed + static_cast<uint64_t>(t);
      doc = TrialDocument(row.seed, f.family, f.objective, &row.kind);
    } else {
      doc = ParseInstanceDocument(ReadFile(f.path));
      row.kind = "file";
    }
    const MetricInstance instance = ToInstance(doc);
    row.objective = ResolveObjective(f.objective, doc);
    row.family = ConstraintName(doc.constraint);
    row.n = instance.num_clients();
    row.num_locations = instance.num_locations();
    row.k = instance.k();
    row.m = instance.m();
    row.z = instance.z();
    row.report = MakeRatioReport(instance, doc.constraint, row.objective,
                                 {f.parallel, 0.0});
    rows.push_back(std::move(row));
  }
  int passed = 0;
  for (const auto& r : rows) passed += r.report.pass ? 1 : 0;
  const bool all = passed == static_cast<int>(rows.size());

  if (f.format == "json") {
    nlohmann::ordered_json j;
    j["trials"] = rows.size();
    j["passed"] = passed;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json e;
      e["trial"] = r.trial;
      e["seed"] = r.seed;
      e["kind"] = r.kind;
      e["family"] = r.family;
      e["objective"] = ObjectiveName(r.objective);
      e["n"] = r.n;
      e["locations"] = r.num_locations;
      e["k"] = r.k;
      e["m"] = r.m;
      e["z"] = r.z;
      e["feasible"] = r.report.oracle.feasible;
      e["solve"] = r.report.solve.cost.value;
      e["oracle"] = r.report.oracle.cost.value;
      e["ratio"] = r.report.ratio;
      e["bound"] = r.report.bound;
      e["pass"] = r.report.pass;
      list.push_back(std::move(e));
    }
    j["rows"] = std::move(list);
    out << j.dump() << "\n";
  } else {
    out << "trial seed kind family objective n L k m z solve oracle ratio "
           "bound pass\n";
    for (const auto& r : rows) {
      const bool feasible = r.report.oracle.feasible;
      out << r.trial << ' ' << r.seed << ' ' << r.kind << ' ' << r.family << ' '
          << ObjectiveName(r.objective) << ' ' << r.n << ' ' << r.num_locations
          << ' ' << r.k << ' ' << r.m << ' ' << Num(r.z) << ' '
          << (r.report.solve.feasible ? Num(r.report.solve.cost.value) : "-")
          << ' ' << (feasible ? Num(r.report.oracle.cost.value) : "-") << ' '
          << Num(r.report.ratio) << ' ' << Num(r.report.bound) << ' '
          << (r.report.pass ? "pass" : "FAIL") << '\n';
    }
    out << passed << "/" << rows.size() << " within bound\n";
  }
  return all ? kExitOk : kExitError;
}

struct GenFlags {
  std::string kind = "uniform_square";
  int n = 8;
  int locations = 0;
  int k = 2;
  int m = 0;
  double z = 1.0;
  uint64_t seed = 1;
  std::string constraint = "unconstrained";
};

int CmdGen(const GenFlags& f, std::ostream& out) {
  GeneratorParams p;
  p.kind = ParseGeneratorKind(f.kind);
  p.n = f.n;
  p.num_locations = f.locations;
  p.k = f.k;
  p.m = f.m;
  p.z = f.z;
  p.seed = f.seed;
  p.family = ParseConstraintFamily(f.constraint);
  out << EmitInstanceDocument(GenerateInstance(p));
  return kExitOk;
}

void AddRunFlags(CLI::App* cmd, RunFlags* f) {
  cmd->add_option("path", f->path, "Instance document")->required();
  cmd->add_option("--objective", f->objective, "supplier or center");
  cmd->add_option("--parallel", f->parallel, "Worker threads")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--timeout", f->timeout, "Time limit in seconds");
  cmd->add_flag("--timing", f->timing, "Report wall time in stats");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Constrained k-supplier and k-center solver", "ksupplier"};
  app.require_subcommand(1);

  RunFlags solve_flags;
  CLI::App* solve = app.add_subcommand("solve", "Approximate solution");
  AddRunFlags(solve, &solve_flags);

  RunFlags oracle_flags;
  CLI::App* oracle = app.add_subcommand("oracle", "Exact solution by enumeration");
  AddRunFlags(oracle, &oracle_flags);
  oracle->add_option("--cap", oracle_flags.cap,
                     "Enumeration cap (default CLUSTERING_ENUM_CAP or 1e6)");

  VerifyFlags verify_flags;
  CLI::App* verify = app.add_subcommand("verify", "Approximation ratio table");
  verify->add_option("path", verify_flags.path, "Instance document (optional)");
  verify->add_option("--trials", verify_flags.trials, "Random trials")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_flags.seed, "Base seed");
  verify->add_option("--family", verify_flags.family,
                     "Constraint family or \"all\"");
  verify->add_option("--objective", verify_flags.objective, "supplier or center");
  verify->add_option("--format", verify_flags.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--parallel", verify_flags.parallel, "Worker threads")
      ->check(CLI::PositiveNumber);

  GenFlags gen_flags;
  CLI::App* gen = app.add_subcommand("gen", "Random instance document");
  gen->add_option("--kind", gen_flags.kind,
                  "uniform_square, planted or adversarial_line");
  gen->add_option("--n", gen_flags.n, "Clients");
  gen->add_option("--locations", gen_flags.locations,
                  "Separate locations (0 for L = C)");
  gen->add_option("--k", gen_flags.k, "Centres");
  gen->add_option("--m", gen_flags.m, "Outlier budget");
  gen->add_option("--z", gen_flags.z, "Cost exponent");
  gen->add_option("--seed", gen_flags.seed, "Seed");
  gen->add_option("--constraint", gen_flags.constraint, "Constraint family");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (solve->parsed()) return CmdSolve(solve_flags, out);
    if (oracle->parsed()) return CmdOracle(oracle_flags, out);
    if (verify->parsed()) return CmdVerify(verify_flags, out);
    if (gen->parsed()) return CmdGen(gen_flags, out);
  } catch (const EnumerationCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const TimeoutError& e) {
    err << "error: " << e.what() << "\n";
    return kExitTimeout;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace ksupplier
