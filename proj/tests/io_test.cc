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

#include "ksupplier/instance_io.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ksupplier/cli.h"
#include "ksupplier/generators.h"

namespace ksupplier {
namespace {

std::string WriteTemp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  std::vector<std::string> argv = {"ksupplier"};
  argv.insert(argv.end(), args.begin(), args.end());
  const int code = RunCli(argv, out, err);
  return {code, out.str(), err.str()};
}

TEST(InstanceIoTest, RoundTripEveryFamily) {
  for (int f = 0; f < 9; ++f) {
    GeneratorParams p;
    p.seed = 100 + f;
    p.n = 8;
    p.num_locations = f % 2 == 0 ? 0 : 4;
    p.k = 2;
    p.m = 1;
    p.z = 2;
    p.family = static_cast<ConstraintFamily>(f);
    const InstanceDocument doc = GenerateInstance(p);
    const std::string text = EmitInstanceDocument(doc);
    const InstanceDocument back = ParseInstanceDocument(text);
    EXPECT_EQ(back, doc) << ConstraintFamilyName(p.family);
    EXPECT_EQ(EmitInstanceDocument(back), text);
  }
}

TEST(InstanceIoTest, DefaultsAndErrors) {
  const InstanceDocument doc = ParseInstanceDocument(
      R"({"points":{"euclidean":[[0],[4],[1]]},"clients":[0,1],"locations":[2],"k":1,"z":1})");
  EXPECT_FALSE(doc.m.has_value());
  EXPECT_TRUE(std::holds_alternative<UnconstrainedSpec>(doc.constraint));
  EXPECT_EQ(ToInstance(doc).m(), 0);
  EXPECT_THROW(ParseInstanceDocument("{"), std::invalid_argument);
  EXPECT_THROW(ParseInstanceDocument(R"({"clients":[0]})"), std::invalid_argument);
  EXPECT_THROW(
      ToInstance(ParseInstanceDocument(
          R"({"points":{"euclidean":[[0]]},"clients":[0,3],"locations":[0],"k":1,"z":1})")),
      std::invalid_argument);
  EXPECT_THROW(
      ParseInstanceDocument(
          R"({"points":{"euclidean":[[0]]},"clients":[0],"locations":[0],"k":1,"z":1,"constraint":{"type":"nope"}})"),
      std::invalid_argument);
}

TEST(InstanceIoTest, RationalInputs) {
  const InstanceDocument doc = ParseInstanceDocument(
      R"({"points":{"euclidean":[[0],[1]]},"clients":[0,1],"same_as_clients":true,"k":1,"z":1,"constraint":{"type":"fair","classes":[[0],[1]],"alpha":["1/2",1],"beta":[0.25,"0"]}})");
  const auto& fair = std::get<FairSpec>(doc.constraint);
  EXPECT_EQ(fair.alpha[0], (Rational{1, 2}));
  EXPECT_EQ(fair.alpha[1], (Rational{1, 1}));
  EXPECT_EQ(fair.beta[0], (Rational{1, 4}));
  EXPECT_EQ(fair.beta[1], (Rational{0, 1}));
}

TEST(InstanceIoTest, MatrixTriangleViolationRejected) {
  const std::string text =
      R"({"points":{"matrix":[[0,1,5],[1,0,1],[5,1,0]]},"clients":[0,1,2],"same_as_clients":true,"k":1,"z":1})";
  try {
    ToInstance(ParseInstanceDocument(text));
    FAIL() << "expected rejection";
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("triangle"), std::string::npos) << what;
  }
  const std::string ok =
      R"({"points":{"matrix":[[0,1,2],[1,0,1],[2,1,0]]},"clients":[0,1,2],"same_as_clients":true,"k":1,"z":1})";
  EXPECT_EQ(ToInstance(ParseInstanceDocument(ok)).Distance(0, 2), 2.0);
}

TEST(SolutionIoTest, RoundTrip) {
  SolutionDocument doc;
  doc.feasible = true;
  doc.objective = Objective::kCenter;
  doc.cost = 0.1 + 0.2;
  doc.cost_base = 0.5;
  doc.centers = {{3, 2}, {1, 1}};
  doc.facilities = {3, 3, 1};
  doc.clusters = {{0}, {2, 4}, {}};
  doc.outliers = {5};
  doc.list_size = 12;
  doc.candidates = 7;
  doc.guesses = 9;
  doc.networks = 40;
  doc.bound = 4;
  const std::string text = EmitSolutionDocument(doc);
  EXPECT_EQ(ParseSolutionDocument(text), doc);
  doc.wall_ms = 1.5;
  EXPECT_EQ(ParseSolutionDocument(EmitSolutionDocument(doc)), doc);
}

TEST(SolutionIoTest, CentersWithMultiplicity) {
  Solution s;
  s.feasible = true;
  s.centers.members = {4, 2, 4};
  s.facilities = {4, 2, 4};
  s.part.clusters = {{0}, {1}, {}};
  s.cost = {1, 1};
  const SolutionDocument doc = ToSolutionDocument(s, 9, false);
  EXPECT_EQ(doc.centers, (std::vector<CenterMultiplicity>{{4, 2}, {2, 1}}));
  EXPECT_FALSE(doc.wall_ms.has_value());
}

const char kLine[] =
    R"({"points":{"euclidean":[[0],[4],[1]]},"clients":[0,1],"locations":[2],"k":1,"z":1,"constraint":{"type":"unconstrained"}})";
const char kGapped[] =
    R"({"points":{"euclidean":[[0],[1],[10],[11]]},"clients":[0,1,2,3],"locations":[0,2],"k":2,"z":1,"constraint":{"type":"r_gather","lower":[3,3]}})";

TEST(CliTest, SolveAndOracle) {
  const std::string path = WriteTemp("ks_line.json", kLine);
  const CliRun solve = Invoke({"solve", path});
  EXPECT_EQ(solve.code, kExitOk) << solve.err;
  const SolutionDocument doc = ParseSolutionDocument(solve.out);
  EXPECT_TRUE(doc.feasible);
  EXPECT_EQ(doc.cost, 3.0);
  EXPECT_EQ(doc.bound, 3.0);
  const CliRun oracle = Invoke({"oracle", path});
  EXPECT_EQ(oracle.code, kExitOk);
  EXPECT_EQ(ParseSolutionDocument(oracle.out).cost, 3.0);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(Invoke({"solve", WriteTemp("ks_gap.json", kGapped)}).code, kExitInfeasible);
  EXPECT_EQ(Invoke({"solve", WriteTemp("ks_bad.json", "{\"points\":")}).code, kExitError);
  EXPECT_EQ(Invoke({"solve", "/nonexistent/ks.json"}).code, kExitError);
  EXPECT_EQ(Invoke({"bogus"}).code, kExitError);
  EXPECT_EQ(Invoke({"solve", WriteTemp("ks_line2.json", kLine), "--objective", "center"})
                .code,
            kExitError);
  GeneratorParams p;
  p.n = 30;
  p.k = 5;
  const std::string big = WriteTemp("ks_big.json", EmitInstanceDocument(GenerateInstance(p)));
  EXPECT_EQ(Invoke({"oracle", big, "--cap", "10"}).code, kExitCap);
  EXPECT_EQ(Invoke({"solve", big, "--timeout", "0.000001"}).code, kExitTimeout);
}

TEST(CliTest, TimingFlagOnly) {
  const std::string path = WriteTemp("ks_line3.json", kLine);
  EXPECT_EQ(Invoke({"solve", path}).out.find("wall_ms"), std::string::npos);
  EXPECT_NE(Invoke({"solve", path, "--timing"}).out.find("wall_ms"), std::string::npos);
}

TEST(CliTest, GenIsDeterministic) {
  const std::vector<std::string> args = {"gen", "--n", "9", "--k", "2", "--seed", "5",
                                         "--constraint", "fair"};
  const CliRun a = Invoke(args);
  const CliRun b = Invoke(args);
  EXPECT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const InstanceDocument doc = ParseInstanceDocument(a.out);
  EXPECT_EQ(doc.clients.size(), 9u);
  EXPECT_TRUE(std::holds_alternative<FairSpec>(doc.constraint));
}

TEST(CliTest, VerifySmallSuite) {
  const CliRun r = Invoke({"verify", "--trials", "6", "--seed", "11"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_NE(r.out.find("6/6 within bound"), std::string::npos) << r.out;
  const CliRun j = Invoke({"verify", "--trials", "3", "--seed", "11", "--format", "json"});
  EXPECT_EQ(j.code, kExitOk);
  EXPECT_EQ(j.out.front(), '{');
}

}  // namespace
}  // namespace ksupplier
