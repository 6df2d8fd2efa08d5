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

#include "ksupplier/solver.h"

#include <gtest/gtest.h>

#include <cstdlib>

#include "ksupplier/generators.h"
#include "ksupplier/instance_io.h"
#include "oracles.h"

namespace ksupplier {
namespace {

using oracle::Line;

TEST(SolveTest, UnconstrainedLine) {
  const MetricInstance inst = Line({0, 4, 1}, {0, 1}, {2}, 1, 1.0, 0);
  const Solution s = Solve(inst, UnconstrainedSpec{}, Objective::kSupplier);
  ASSERT_TRUE(s.feasible);
  EXPECT_EQ(s.cost.value, 3.0);
}

TEST(SolveTest, RGatherWithinBound) {
  const MetricInstance inst = Line({0, 1, 10, 11}, {0, 1, 2, 3}, {0, 2}, 2, 1.0, 0);
  const RGatherSpec spec{{2, 2}};
  const Solution o = OracleSolve(inst, spec, Objective::kSupplier);
  ASSERT_TRUE(o.feasible);
  EXPECT_EQ(o.cost.value, 1.0);
  const Solution s = Solve(inst, spec, Objective::kSupplier);
  ASSERT_TRUE(s.feasible);
  EXPECT_LE(s.cost.value, 3.0 * o.cost.value);
}

TEST(SolveTest, AllOutliersCostZero) {
  const MetricInstance inst = Line({0, 1, 10, 11, 5}, {0, 1, 2, 3}, {4}, 1, 1.0, 4);
  for (const ConstraintSpec& spec :
       {ConstraintSpec{UnconstrainedSpec{}}, ConstraintSpec{RGatherSpec{{0}}},
        ConstraintSpec{RCapacitySpec{{1}}}}) {
    const Solution s = Solve(inst, spec, Objective::kSupplier);
    ASSERT_TRUE(s.feasible);
    EXPECT_EQ(s.cost.value, 0.0);
  }
}

TEST(SolveTest, InfeasibleSpec) {
  const MetricInstance inst = Line({0, 1, 10, 11}, {0, 1, 2, 3}, {0, 2}, 2, 1.0, 0);
  const RGatherSpec spec{{3, 3}};
  EXPECT_FALSE(Solve(inst, spec, Objective::kSupplier).feasible);
  EXPECT_FALSE(OracleSolve(inst, spec, Objective::kSupplier).feasible);
}

TEST(SolveTest, CenterNeedsLEqualsC) {
  const MetricInstance inst = Line({0, 4, 1}, {0, 1}, {2}, 1, 1.0, 0);
  EXPECT_THROW(Solve(inst, UnconstrainedSpec{}, Objective::kCenter),
               std::invalid_argument);
}

TEST(SolveTest, SpecDimensionsChecked) {
  const MetricInstance inst = Line({0, 1, 10, 11}, {0, 1, 2, 3}, {0, 2}, 2, 1.0, 0);
  EXPECT_THROW(Solve(inst, RGatherSpec{{1}}, Objective::kSupplier),
               std::invalid_argument);
  EXPECT_THROW(Solve(inst, ChromaticSpec{{0, 1}}, Objective::kSupplier),
               std::invalid_argument);
  EXPECT_THROW(Solve(inst, StronglyPrivateSpec{{{0, 1}, {1, 2, 3}}, {0, 0}},
                     Objective::kSupplier),
               std::invalid_argument);
}

TEST(OracleTest, UnconstrainedCenterIsMinVoronoi) {
  Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    GeneratorParams p;
    p.seed = rng.Next();
    p.n = rng.Uniform(3, 8);
    p.k = rng.Uniform(1, 3);
    p.m = rng.Uniform(0, 2);
    const MetricInstance inst = ToInstance(GenerateInstance(p));
    const Solution o = OracleSolve(inst, UnconstrainedSpec{}, Objective::kCenter);
    EXPECT_EQ(o.cost.base, oracle::UnconstrainedOpt(inst));
  }
}

TEST(OracleTest, CapRefusesWithEstimate) {
  GeneratorParams p;
  p.n = 30;
  p.k = 5;
  const MetricInstance inst = ToInstance(GenerateInstance(p));
  try {
    OracleSolve(inst, UnconstrainedSpec{}, Objective::kCenter, {}, 1000);
    FAIL() << "expected refusal";
  } catch (const EnumerationCapExceeded& e) {
    EXPECT_EQ(e.estimate(), 278256u);  // C(34, 5)
    EXPECT_EQ(e.cap(), 1000u);
  }
}

TEST(OracleTest, CapFromEnvironment) {
  setenv("CLUSTERING_ENUM_CAP", "12", 1);
  EXPECT_EQ(OracleEnumerationCap(), 12u);
  setenv("CLUSTERING_ENUM_CAP", "junk", 1);
  EXPECT_EQ(OracleEnumerationCap(), 1000000u);
  unsetenv("CLUSTERING_ENUM_CAP");
  EXPECT_EQ(OracleEnumerationCap(), 1000000u);
}

TEST(RatioTest, BoundsAndVerdicts) {
  EXPECT_EQ(ApproximationBound(Objective::kSupplier, 2.0), 9.0);
  EXPECT_EQ(ApproximationBound(Objective::kCenter, 1.0), 2.0);
  Solution a;
  a.feasible = true;
  a.cost = {2.0, 2.0};
  const RatioReport same = CompareToOracle(a, a, 1.0);
  EXPECT_EQ(same.ratio, 1.0);
  EXPECT_TRUE(same.pass);
  Solution big = a;
  big.cost = {7.0, 7.0};
  EXPECT_FALSE(CompareToOracle(big, a, 1.0).pass);
  Solution small = a;
  small.cost = {1.0, 1.0};
  EXPECT_FALSE(CompareToOracle(small, a, 1.0).pass);
}

ConstraintFamily FamilyFor(int t) {
  static const ConstraintFamily kFamilies[] = {
      ConstraintFamily::kUnconstrained, ConstraintFamily::kRGather,
      ConstraintFamily::kRCapacity,     ConstraintFamily::kBalanced,
      ConstraintFamily::kChromatic,     ConstraintFamily::kFaultTolerant,
      ConstraintFamily::kStronglyPrivate, ConstraintFamily::kLDiversity,
      ConstraintFamily::kFair};
  return kFamilies[t % 9];
}

TEST(SolveTest, RatioWithinBoundAllFamilies) {
  Rng rng(2);
  for (int trial = 0; trial < 90; ++trial) {
    GeneratorParams p;
    p.seed = rng.Next();
    p.kind = static_cast<GeneratorKind>(rng.Uniform(0, 2));
    p.n = rng.Uniform(4, 8);
    const bool center = rng.Coin();
    p.num_locations = center ? 0 : rng.Uniform(3, 5);
    p.k = 2;
    p.m = rng.Uniform(0, 2);
    p.z = rng.Uniform(1, 2);
    p.family = FamilyFor(trial);
    const InstanceDocument doc = GenerateInstance(p);
    const MetricInstance inst = ToInstance(doc);
    const RatioReport r = MakeRatioReport(
        inst, doc.constraint, center ? Objective::kCenter : Objective::kSupplier);
    EXPECT_TRUE(r.pass) << trial << " " << ConstraintFamilyName(p.family)
                        << " ratio " << r.ratio;
  }
}

TEST(SolveTest, ParallelMatchesSequential) {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    GeneratorParams p;
    p.seed = rng.Next();
    p.n = rng.Uniform(6, 10);
    p.num_locations = 0;
    p.k = 3;
    p.m = rng.Uniform(0, 2);
    p.family = FamilyFor(trial);
    const InstanceDocument doc = GenerateInstance(p);
    const MetricInstance inst = ToInstance(doc);
    const Solution a = Solve(inst, doc.constraint, Objective::kCenter, {1, 0});
    const Solution b = Solve(inst, doc.constraint, Objective::kCenter, {4, 0});
    ASSERT_EQ(a.feasible, b.feasible);
    EXPECT_EQ(a.centers, b.centers);
    EXPECT_EQ(a.part, b.part);
    EXPECT_EQ(a.cost.base, b.cost.base);
  }
}

TEST(SolveTest, FaultTolerantReportsOriginalClients) {
  const MetricInstance inst = Line({0, 10, 1, 9}, {0, 1}, {2, 3}, 2, 1.0, 0);
  const Solution s =
      Solve(inst, FaultTolerantSpec{{2, 1}}, Objective::kSupplier);
  ASSERT_TRUE(s.feasible);
  // Client 0 needs both facilities; the far one is 9 away.
  EXPECT_EQ(s.cost.value, 9.0);
  int appearances = 0;
  for (const auto& c : s.part.clusters) {
    appearances += std::count(c.begin(), c.end(), 0);
  }
  EXPECT_EQ(appearances, 2);
}

TEST(SolveTest, TimeoutRaises) {
  GeneratorParams p;
  p.n = 40;
  p.k = 4;
  p.m = 3;
  p.family = ConstraintFamily::kBalanced;
  const InstanceDocument doc = GenerateInstance(p);
  const MetricInstance inst = ToInstance(doc);
  EXPECT_THROW(Solve(inst, doc.constraint, Objective::kCenter, {1, 1e-6}),
               TimeoutError);
}

}  // namespace
}  // namespace ksupplier
