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

#include "ksupplier/circulation.h"

#include <gtest/gtest.h>

#include "ksupplier/generators.h"
#include "oracles.h"

namespace ksupplier {
namespace {

FlowNetwork Net(int nodes, int source, int sink) {
  FlowNetwork net;
  net.node_count = nodes;
  net.source = source;
  net.sink = sink;
  return net;
}

TEST(CirculationTest, SingleArc) {
  FlowNetwork net = Net(2, 0, 1);
  net.AddArc(0, 1, 0, 5);
  const FlowResult r = FeasibleCirculation(net);
  ASSERT_TRUE(r.feasible);
  EXPECT_GE(r.flow[0], 0);
  EXPECT_LE(r.flow[0], 5);
}

TEST(CirculationTest, ConservationImpossible) {
  FlowNetwork net = Net(3, 0, 2);
  net.AddArc(0, 1, 2, 2);
  net.AddArc(1, 2, 0, 1);
  EXPECT_FALSE(FeasibleCirculation(net).feasible);
}

TEST(CirculationTest, Diamond) {
  FlowNetwork net = Net(4, 0, 3);
  net.AddArc(0, 1, 1, 1);
  net.AddArc(0, 2, 1, 1);
  net.AddArc(1, 3, 0, 2);
  net.AddArc(2, 3, 0, 2);
  const FlowResult r = FeasibleCirculation(net);
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.flow, (std::vector<int64_t>{1, 1, 1, 1}));
}

TEST(CirculationTest, RejectsMalformed) {
  FlowNetwork net = Net(2, 0, 1);
  net.AddArc(0, 1, 3, 2);
  EXPECT_THROW(FeasibleCirculation(net), std::invalid_argument);
  FlowNetwork bad = Net(2, 0, 1);
  bad.AddArc(0, 5, 0, 1);
  EXPECT_THROW(FeasibleCirculation(bad), std::invalid_argument);
}

TEST(MaxFlowTest, Examples) {
  FlowNetwork a = Net(2, 0, 1);
  a.AddArc(0, 1, 0, 7);
  EXPECT_EQ(MaxFlowIntegral(a).value, 7);
  FlowNetwork b = Net(3, 0, 2);
  b.AddArc(0, 1, 0, 3);
  b.AddArc(1, 2, 0, 2);
  EXPECT_EQ(MaxFlowIntegral(b).value, 2);
  FlowNetwork c = Net(4, 0, 3);
  c.AddArc(0, 1, 0, 1);
  c.AddArc(1, 3, 0, 1);
  c.AddArc(0, 2, 0, 1);
  c.AddArc(2, 3, 0, 1);
  EXPECT_EQ(MaxFlowIntegral(c).value, 2);
}

TEST(MaxFlowTest, RejectsLowerBounds) {
  FlowNetwork a = Net(2, 0, 1);
  a.AddArc(0, 1, 1, 7);
  EXPECT_THROW(MaxFlowIntegral(a), std::invalid_argument);
}

TEST(CirculationTest, AgreesWithEnumeration) {
  Rng rng(77);
  int feasible = 0;
  for (int trial = 0; trial < 500; ++trial) {
    FlowNetwork net = oracle::RandomNetwork(rng, rng.Uniform(2, 5),
                                            rng.Uniform(1, 6), 3, false);
    const FlowResult r = FeasibleCirculation(net);
    ASSERT_EQ(r.feasible, oracle::EnumeratedFeasible(net)) << trial;
    if (r.feasible) {
      ++feasible;
      EXPECT_TRUE(IsValidFlow(net, r.flow));
    }
  }
  EXPECT_GT(feasible, 0);
}

TEST(MaxFlowTest, EqualsMinCut) {
  Rng rng(78);
  for (int trial = 0; trial < 300; ++trial) {
    FlowNetwork net = oracle::RandomNetwork(rng, rng.Uniform(2, 10),
                                            rng.Uniform(1, 25), 5, true);
    const MaxFlowResult r = MaxFlowIntegral(net);
    EXPECT_EQ(r.value, oracle::EnumeratedMinCut(net)) << trial;
    EXPECT_TRUE(IsValidFlow(net, r.flow));
  }
}

}  // namespace
}  // namespace ksupplier
