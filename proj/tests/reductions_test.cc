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

#include "ksupplier/reductions.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "ksupplier/generators.h"
#include "oracles.h"

namespace ksupplier {
namespace {

using oracle::Line;

TEST(FaultTolerantTest, UnitEllKeepsPlainCost) {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    GeneratorParams p;
    p.seed = rng.Next();
    p.n = rng.Uniform(2, 6);
    p.num_locations = 3;
    p.k = 2;
    const MetricInstance inst = ToInstance(GenerateInstance(p));
    const std::vector<int> ell(p.n, 1);
    const FaultTolerantReduction red = FaultTolerantReduce(inst, ell);
    EXPECT_EQ(red.instance.num_clients(), p.n);
    for (const auto& f : oracle::AllMultisets(
             {inst.locations().begin(), inst.locations().end()}, 2)) {
      const PartitionResult r =
          FaultTolerantPartition(red, CenterSet{f});
      ASSERT_TRUE(r.feasible);
      std::vector<int> all(inst.clients().begin(), inst.clients().end());
      EXPECT_EQ(r.cost.base, ClusteringCost(inst, f, all).base);
    }
  }
}

TEST(FaultTolerantTest, SecondNearest) {
  const MetricInstance inst = Line({0, 1, 4}, {0}, {1, 2}, 2, 1.0, 0);
  const std::vector<int> ell = {2};
  const FaultTolerantReduction red = FaultTolerantReduce(inst, ell);
  EXPECT_EQ(red.instance.num_clients(), 2);
  const PartitionResult r =
      FaultTolerantPartition(red, CenterSet{{1, 2}});
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.cost.value, 4.0);
}

TEST(FaultTolerantTest, ThreeLocations) {
  // C = {0}, L = {-1, 1, 5}, ell = 2: the second nearest is at distance 1.
  const MetricInstance inst = Line({0, -1, 1, 5}, {0}, {1, 2, 3}, 3, 1.0, 0);
  const std::vector<int> ell = {2};
  const FaultTolerantReduction red = FaultTolerantReduce(inst, ell);
  const PartitionResult r =
      FaultTolerantPartition(red, CenterSet{{1, 2, 3}});
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.cost.value, 1.0);
  EXPECT_EQ(FaultTolerantCost(inst, std::vector<int>{1, 2, 3}, ell).value, 1.0);
}

TEST(FaultTolerantTest, RejectsEllAboveK) {
  const MetricInstance inst = Line({0, 1, 4}, {0}, {1, 2}, 2, 1.0, 0);
  const std::vector<int> ell = {3};
  EXPECT_THROW(FaultTolerantReduce(inst, ell), std::invalid_argument);
}

TEST(FaultTolerantTest, CopiesAreColocated) {
  const MetricInstance inst = Line({0, 7, 1, 4}, {0, 1}, {2, 3}, 2, 1.0, 0);
  const std::vector<int> ell = {2, 2};
  const FaultTolerantReduction red = FaultTolerantReduce(inst, ell);
  ASSERT_EQ(red.instance.num_points(), 6);
  EXPECT_EQ(red.instance.Distance(0, 4), 0.0);
  EXPECT_EQ(red.instance.Distance(1, 5), 0.0);
  EXPECT_EQ(red.instance.Distance(4, 3), inst.Distance(0, 3));
  EXPECT_EQ(red.origin[5], 1);
  EXPECT_TRUE(VerifyMetric(red.instance).empty());
}

// Every F on small instances: chromatic cost of the reduced instance equals
// the ell-th nearest cost.
TEST(FaultTolerantTest, EquivalenceForEveryCenterSet) {
  Rng rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    GeneratorParams p;
    p.seed = rng.Next();
    p.kind = static_cast<GeneratorKind>(rng.Uniform(0, 2));
    p.n = rng.Uniform(1, 5);
    p.num_locations = rng.Uniform(1, 4);
    p.k = rng.Uniform(1, std::min(3, p.num_locations));
    p.z = rng.Uniform(1, 2);
    const MetricInstance inst = ToInstance(GenerateInstance(p));
    std::vector<int> ell;
    for (int x = 0; x < p.n; ++x) ell.push_back(rng.Uniform(1, p.k));
    const FaultTolerantReduction red = FaultTolerantReduce(inst, ell);
    for (const auto& f : oracle::AllMultisets(
             {inst.locations().begin(), inst.locations().end()}, p.k)) {
      double expect = 0.0;
      for (int x = 0; x < p.n; ++x) {
        expect = std::max(expect,
                          oracle::NthNearestCost(inst, f, inst.clients()[x], ell[x]));
      }
      const PartitionResult r =
          FaultTolerantPartition(red, CenterSet{f});
      ASSERT_TRUE(r.feasible);
      EXPECT_EQ(r.cost.base, expect) << trial;
      EXPECT_EQ(FaultTolerantCost(inst, f, ell).base, expect);
      const auto per_client = CopyCostsByClient(inst, red, r);
      double worst = 0.0;
      for (const Cost& c : per_client) worst = std::max(worst, c.base);
      EXPECT_EQ(worst, expect);
    }
  }
}

TEST(LocationwiseTest, SingleClusterKeepsLocations) {
  const MetricInstance inst = Line({0, 3, 1, 5}, {0, 1}, {2, 3}, 1, 1.0, 0);
  const LocationwiseInstance lw = BalancedLocationwiseReduce(inst, {1}, {2});
  ASSERT_EQ(lw.copies.size(), 2u);
  EXPECT_EQ(lw.instance.num_locations(), 2);
  for (const auto& c : lw.copies) {
    EXPECT_EQ(c.lower, 1);
    EXPECT_EQ(c.upper, 2);
  }
}

TEST(LocationwiseTest, BoundPattern) {
  const MetricInstance inst = Line({0, 3, 1, 5}, {0, 1}, {2, 3}, 2, 1.0, 0);
  const LocationwiseInstance lw = BalancedLocationwiseReduce(inst, {0, 1}, {2, 3});
  ASSERT_EQ(lw.copies.size(), 4u);
  EXPECT_EQ(lw.copies[0].original, 2);
  EXPECT_EQ(lw.copies[0].lower, 0);
  EXPECT_EQ(lw.copies[1].original, 2);
  EXPECT_EQ(lw.copies[1].upper, 3);
  EXPECT_EQ(lw.copies[2].original, 3);
  EXPECT_EQ(lw.copies[2].slot, 0);
}

// Cluster-wise optimum under F versus the location-wise optimum over the
// copies serving it. With uniform bounds the two coincide; with non-uniform
// bounds the forward mapping never loses.
TEST(LocationwiseTest, CostAgreement) {
  Rng rng(87);
  for (int trial = 0; trial < 80; ++trial) {
    GeneratorParams p;
    p.seed = rng.Next();
    p.n = rng.Uniform(2, 6);
    p.num_locations = rng.Uniform(2, 3);
    p.k = 2;
    p.m = rng.Uniform(0, 1);
    const MetricInstance inst = ToInstance(GenerateInstance(p));
    const bool uniform = trial % 2 == 0;
    std::vector<int> lo(2), hi(2);
    for (int i = 0; i < 2; ++i) {
      lo[i] = rng.Uniform(0, p.n / 2);
      hi[i] = lo[i] + rng.Uniform(0, 2);
    }
    if (uniform) {
      lo[1] = lo[0];
      hi[1] = hi[0];
    }
    const LocationwiseInstance lw = BalancedLocationwiseReduce(inst, lo, hi);
    const HybridConstraints hc = MakeBalanced(inst, lo, hi);
    for (const auto& f : oracle::AllMultisets(
             {inst.locations().begin(), inst.locations().end()}, 2)) {
      // Cluster-wise with cluster i served by f[i].
      const PartitionResult cw = HybridPartitionForGuess(inst, f, hc);
      const std::vector<int> chosen = ExpandToLocationwise(inst, lw, f);
      const PartitionResult loc = LocationwiseAssign(lw, chosen);
      ASSERT_EQ(cw.feasible, loc.feasible) << trial;
      if (!cw.feasible) continue;
      EXPECT_EQ(cw.cost.base, loc.cost.base);
      const auto back = CollapseToClusterwise(lw, chosen, loc.part, lo, hi);
      ASSERT_TRUE(back.has_value());
      for (size_t i = 0; i < back->part.clusters.size(); ++i) {
        const int size = static_cast<int>(back->part.clusters[i].size());
        EXPECT_GE(size, lo[i]);
        EXPECT_LE(size, hi[i]);
      }
      EXPECT_LE(Psi(inst, back->facilities, back->part).base, loc.cost.base);
    }
  }
}

}  // namespace
}  // namespace ksupplier
