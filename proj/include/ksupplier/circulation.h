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

// Integral s-t flows with per-arc lower and upper bounds.

#ifndef KSUPPLIER_CIRCULATION_H_
#define KSUPPLIER_CIRCULATION_H_

#include <cstdint>
#include <vector>

namespace ksupplier {

struct FlowArc {
  int from = 0;
  int to = 0;
  int64_t lower = 0;
  int64_t upper = 0;
};

struct FlowNetwork {
  int node_count = 0;
  int source = 0;
  int sink = 0;
  std::vector<FlowArc> arcs;

  int AddNode() { return node_count++; }
  // Returns the arc index.
  int AddArc(int from, int to, int64_t lower, int64_t upper) {
    arcs.push_back({from, to, lower, upper});
    return static_cast<int>(arcs.size()) - 1;
  }
};

struct FlowResult {
  bool feasible = false;
  // Per-arc flow, empty when infeasible.
  std::vector<int64_t> flow;
};

struct MaxFlowResult {
  int64_t value = 0;
  std::vector<int64_t> flow;
};

// Throws std::invalid_argument for out-of-range nodes, negative bounds or
// lower > upper.
void ValidateNetwork(const FlowNetwork& net);

// Edmonds-Karp. All lower bounds must be zero.
MaxFlowResult MaxFlowIntegral(const FlowNetwork& net);

// Decides whether some integral s-t flow meets every arc's [lower, upper]
// with conservation at all nodes other than source and sink. Any feasible
// flow may be returned.
FlowResult FeasibleCirculation(const FlowNetwork& net);

// True when `flow` respects the bounds and conserves flow away from source
// and sink.
bool IsValidFlow(const FlowNetwork& net, const std::vector<int64_t>& flow);

}  // namespace ksupplier

#endif  // KSUPPLIER_CIRCULATION_H_
