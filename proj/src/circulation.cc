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

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace ksupplier {
namespace {

// Residual graph with paired forward/backward edges.
class Residual {
 public:
  explicit Residual(int nodes) : adjacency_(nodes) {}

  int Add(int from, int to, int64_t capacity) {
    const int id = static_cast<int>(head_.size());
    head_.push_back(to);
    capacity_.push_back(capacity);
    adjacency_[from].push_back(id);
    head_.push_back(from);
    capacity_.push_back(0);
    adjacency_[to].push_back(id + 1);
    return id;
  }

  int64_t Flow(int edge) const { return capacity_[edge ^ 1]; }

  int64_t MaxFlow(int s, int t) {
    if (s == t) return 0;
    const int n = static_cast<int>(adjacency_.size());
    int64_t total = 0;
    std::vector<int> parent_edge(n);
    while (true) {
      std::fill(parent_edge.begin(), parent_edge.end(), -1);
      std::queue<int> frontier;
      frontier.push(s);
      parent_edge[s] = -2;
      while (!frontier.empty() && parent_edge[t] == -1) {
        const int u = frontier.front();
        frontier.pop();
        for (int e : adjacency_[u]) {
          const int v = head_[e];
          if (capacity_[e] > 0 && parent_edge[v] == -1) {
            parent_edge[v] = e;
            frontier.push(v);
          }
        }
      }
      if (parent_edge[t] == -1) break;
      int64_t push = std::numeric_limits<int64_t>::max();
      for (int v = t; v != s; v = head_[parent_edge[v] ^ 1]) {
        push = std::min(push, capacity_[parent_edge[v]]);
      }
      for (int v = t; v != s; v = head_[parent_edge[v] ^ 1]) {
        capacity_[parent_edge[v]] -= push;
        capacity_[parent_edge[v] ^ 1] += push;
      }
      total += push;
    }
    return total;
  }

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> head_;
  std::vector<int64_t> capacity_;
};

}  // namespace

void ValidateNetwork(const FlowNetwork& net) {
  if (net.node_count < 1) throw std::invalid_argument("network has no nodes");
  auto in_range = [&net](int v) { return v >= 0 && v < net.node_count; };
  if (!in_range(net.source) || !in_range(net.sink)) {
    throw std::invalid_argument("source or sink out of range");
  }
  for (const FlowArc& a : net.arcs) {
    if (!in_range(a.from) || !in_range(a.to)) {
      throw std::invalid_argument("arc endpoint out of range");
    }
    if (a.lower < 0 || a.lower > a.upper) {
      throw std::invalid_argument("arc bounds must satisfy 0 <= lower <= upper");
    }
  }
}

MaxFlowResult MaxFlowIntegral(const FlowNetwork& net) {
  ValidateNetwork(net);
  Residual residual(net.node_count);
  std::vector<int> ids;
  ids.reserve(net.arcs.size());
  for (const FlowArc& a : net.arcs) {
    if (a.lower != 0) {
      throw std::invalid_argument("max flow requires zero lower bounds");
    }
    ids.push_back(residual.Add(a.from, a.to, a.upper));
  }
  MaxFlowResult result;
  result.value = residual.MaxFlow(net.source, net.sink);
  result.flow.reserve(ids.size());
  for (int id : ids) result.flow.push_back(residual.Flow(id));
  return result;
}

FlowResult FeasibleCirculation(const FlowNetwork& net) {
  ValidateNetwork(net);
  const int n = net.node_count;
  const int super_source = n;
  const int super_sink = n + 1;
  Residual residual(n + 2);

  int64_t infinity = 1;
  for (const FlowArc& a : net.arcs) infinity += a.upper;

  std::vector<int64_t> excess(n, 0);
  std::vector<int> ids;
  ids.reserve(net.arcs.size());
  for (const FlowArc& a : net.arcs) {
    ids.push_back(residual.Add(a.from, a.to, a.upper - a.lower));
    excess[a.to] += a.lower;
    excess[a.from] -= a.lower;
  }
  // Closing arcs turn the s-t flow into a circulation. The net s-t value may
  // have either sign, so both directions are open.
  if (net.source != net.sink) {
    residual.Add(net.sink, net.source, infinity);
    residual.Add(net.source, net.sink, infinity);
  }

  int64_t demand = 0;
  for (int v = 0; v < n; ++v) {
    if (excess[v] > 0) {
      residual.Add(super_source, v, excess[v]);
      demand += excess[v];
    } else if (excess[v] < 0) {
      residual.Add(v, super_sink, -excess[v]);
    }
  }

  FlowResult result;
  if (residual.MaxFlow(super_source, super_sink) != demand) return result;
  result.feasible = true;
  result.flow.reserve(ids.size());
  for (size_t i = 0; i < ids.size(); ++i) {
    result.flow.push_back(net.arcs[i].lower + residual.Flow(ids[i]));
  }
  if (!IsValidFlow(net, result.flow)) {
    throw std::logic_error("circulation violates its bounds");
  }
  return result;
}

bool IsValidFlow(const FlowNetwork& net, const std::vector<int64_t>& flow) {
  if (flow.size() != net.arcs.size()) return false;
  std::vector<int64_t> balance(net.node_count, 0);
  for (size_t i = 0; i < flow.size(); ++i) {
    const FlowArc& a = net.arcs[i];
    if (flow[i] < a.lower || flow[i] > a.upper) return false;
    balance[a.from] -= flow[i];
    balance[a.to] += flow[i];
  }
  for (int v = 0; v < net.node_count; ++v) {
    if (v == net.source || v == net.sink) continue;
    if (balance[v] != 0) return false;
  }
  return true;
}

}  // namespace ksupplier
