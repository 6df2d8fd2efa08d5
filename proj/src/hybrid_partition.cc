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

#include "ksupplier/hybrid_partition.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ksupplier {

void ValidateHybrid(const MetricInstance& instance,
                    const HybridConstraints& hc) {
  const size_t k = instance.k();
  if (hc.cluster_lower.size() != k || hc.cluster_upper.size() != k) {
    throw std::invalid_argument("cluster bounds must have k entries");
  }
  if (hc.color_of.size() != static_cast<size_t>(instance.num_clients())) {
    throw std::invalid_argument("every client needs exactly one colour");
  }
  if (hc.color_lower.size() != hc.color_upper.size() || hc.num_colors() < 1) {
    throw std::invalid_argument("colour bounds must have one entry per colour");
  }
  for (size_t i = 0; i < k; ++i) {
    if (hc.cluster_lower[i] < 0 || hc.cluster_lower[i] > hc.cluster_upper[i]) {
      throw std::invalid_argument("cluster bounds must satisfy 0 <= l_i <= r_i");
    }
  }
  for (int j = 0; j < hc.num_colors(); ++j) {
    if (hc.color_lower[j] < 0 || hc.color_lower[j] > hc.color_upper[j]) {
      throw std::invalid_argument("colour bounds must satisfy 0 <= a_j <= b_j");
    }
  }
  for (int c : hc.color_of) {
    if (c < 0 || c >= hc.num_colors()) {
      throw std::invalid_argument("client colour out of range");
    }
  }
}

bool SatisfiesHybrid(const MetricInstance& instance, const HybridConstraints& hc,
                     const Partitioning& part) {
  if (static_cast<int>(part.clusters.size()) != instance.k()) return false;
  std::vector<bool> seen(instance.num_points(), false);
  int covered = 0;
  for (size_t i = 0; i < part.clusters.size(); ++i) {
    const auto& cluster = part.clusters[i];
    const int size = static_cast<int>(cluster.size());
    if (size < hc.cluster_lower[i] || size > hc.cluster_upper[i]) return false;
    std::vector<int> per_color(hc.num_colors(), 0);
    for (int x : cluster) {
      if (x < 0 || x >= instance.num_points() || !instance.IsClient(x)) {
        return false;
      }
      if (seen[x]) return false;
      seen[x] = true;
      ++per_color[hc.color_of[instance.ClientOrdinal(x)]];
    }
    for (int j = 0; j < hc.num_colors(); ++j) {
      if (per_color[j] < hc.color_lower[j] || per_color[j] > hc.color_upper[j]) {
        return false;
      }
    }
    covered += size;
  }
  return instance.num_clients() - covered <= instance.m();
}

HybridConstraints MakeUnconstrainedHybrid(const MetricInstance& instance) {
  const int n = instance.num_clients();
  HybridConstraints hc;
  hc.cluster_lower.assign(instance.k(), 0);
  hc.cluster_upper.assign(instance.k(), n);
  hc.color_of.assign(n, 0);
  hc.color_lower = {0};
  hc.color_upper = {n};
  return hc;
}

HybridConstraints MakeRGather(const MetricInstance& instance,
                              std::vector<int> lower) {
  HybridConstraints hc = MakeUnconstrainedHybrid(instance);
  hc.cluster_lower = std::move(lower);
  return hc;
}

HybridConstraints MakeRCapacity(const MetricInstance& instance,
                                std::vector<int> upper) {
  HybridConstraints hc = MakeUnconstrainedHybrid(instance);
  hc.cluster_upper = std::move(upper);
  return hc;
}

HybridConstraints MakeBalanced(const MetricInstance& instance,
                               std::vector<int> lower, std::vector<int> upper) {
  HybridConstraints hc = MakeUnconstrainedHybrid(instance);
  hc.cluster_lower = std::move(lower);
  hc.cluster_upper = std::move(upper);
  return hc;
}

HybridConstraints MakeChromatic(const MetricInstance& instance,
                                std::vector<int> colors) {
  HybridConstraints hc = MakeUnconstrainedHybrid(instance);
  const int num_colors =
      colors.empty() ? 1 : *std::max_element(colors.begin(), colors.end()) + 1;
  hc.color_of = std::move(colors);
  hc.color_lower.assign(num_colors, 0);
  hc.color_upper.assign(num_colors, 1);
  return hc;
}

HybridConstraints MakeStronglyPrivate(const MetricInstance& instance,
                                      std::vector<int> class_of,
                                      std::vector<int> lower) {
  HybridConstraints hc = MakeUnconstrainedHybrid(instance);
  hc.color_of = std::move(class_of);
  hc.color_upper.assign(lower.size(), instance.num_clients());
  hc.color_lower = std::move(lower);
  return hc;
}

HybridNetwork BuildHybridNetwork(const MetricInstance& instance,
                                 const std::vector<int>& guess,
                                 const HybridConstraints& hc, Cost radius) {
  const int n = instance.num_clients();
  const int k = static_cast<int>(guess.size());
  const int w = hc.num_colors();
  HybridNetwork out;
  FlowNetwork& net = out.net;
  net.source = net.AddNode();
  net.sink = net.AddNode();
  const int hub = net.AddNode();
  const int first_client = net.node_count;
  net.node_count += n;
  const int first_pair = net.node_count;
  net.node_count += k * w;
  const int first_cluster = net.node_count;
  net.node_count += k;

  net.AddArc(net.source, hub, n - instance.m(), n);
  for (int x = 0; x < n; ++x) net.AddArc(hub, first_client + x, 0, 1);
  const auto clients = instance.clients();
  for (int x = 0; x < n; ++x) {
    const int color = hc.color_of[x];
    for (int i = 0; i < k; ++i) {
      if (instance.Distance(clients[x], guess[i]) <= radius.base) {
        const int arc =
            net.AddArc(first_client + x, first_pair + i * w + color, 0, 1);
        out.assignments.push_back({arc, x, i});
      }
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < w; ++j) {
      net.AddArc(first_pair + i * w + j, first_cluster + i, hc.color_lower[j],
                 hc.color_upper[j]);
    }
  }
  for (int i = 0; i < k; ++i) {
    net.AddArc(first_cluster + i, net.sink, hc.cluster_lower[i],
               hc.cluster_upper[i]);
  }
  return out;
}

namespace {

// Necessary conditions checked before building a network.
bool PassesReachFilter(const MetricInstance& instance,
                       const std::vector<int>& guess,
                       const HybridConstraints& hc, Cost radius) {
  const auto clients = instance.clients();
  const int k = static_cast<int>(guess.size());
  std::vector<int> reach(k, 0);
  int reachable = 0;
  for (int x : clients) {
    bool any = false;
    for (int i = 0; i < k; ++i) {
      if (instance.Distance(x, guess[i]) <= radius.base) {
        ++reach[i];
        any = true;
      }
    }
    reachable += any ? 1 : 0;
  }
  if (reachable < instance.num_clients() - instance.m()) return false;
  for (int i = 0; i < k; ++i) {
    if (reach[i] < hc.cluster_lower[i]) return false;
  }
  return true;
}

Cost GuessCost(const MetricInstance& instance, const std::vector<int>& guess,
               const Partitioning& part) {
  Cost total;
  for (size_t i = 0; i < part.clusters.size(); ++i) {
    const Cost c = SingleFacilityCost(instance, guess[i], part.clusters[i]);
    if (c > total) total = c;
  }
  return total;
}

}  // namespace

bool HybridFeasibleAt(const MetricInstance& instance,
                      const std::vector<int>& guess,
                      const HybridConstraints& hc, Cost radius,
                      Partitioning* part, PartitionStats* stats) {
  if (!PassesReachFilter(instance, guess, hc, radius)) return false;
  HybridNetwork hn = BuildHybridNetwork(instance, guess, hc, radius);
  if (stats != nullptr) ++stats->networks;
  const FlowResult flow = FeasibleCirculation(hn.net);
  if (!flow.feasible) return false;
  if (part != nullptr) {
    const auto clients = instance.clients();
    part->clusters.assign(guess.size(), {});
    for (const auto& a : hn.assignments) {
      if (flow.flow[a.arc] > 0) part->clusters[a.cluster].push_back(clients[a.client]);
    }
    for (auto& cluster : part->clusters) std::sort(cluster.begin(), cluster.end());
  }
  return true;
}

PartitionResult HybridPartitionForGuess(const MetricInstance& instance,
                                        const std::vector<int>& guess,
                                        const HybridConstraints& hc,
                                        std::optional<CostBound> bound) {
  PartitionResult result;
  result.guess = guess;
  result.stats.guesses = 1;
  std::vector<int> distinct = guess;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<Cost> radii = DistinctCosts(instance, distinct);
  if (bound.has_value()) {
    while (!radii.empty() && !bound->Admits(radii.back())) radii.pop_back();
  }
  if (radii.empty()) return result;

  Partitioning part;
  size_t lo = 0;
  size_t hi = radii.size() - 1;
  if (!HybridFeasibleAt(instance, guess, hc, radii[hi], &part, &result.stats)) {
    return result;
  }
  while (lo < hi) {
    const size_t mid = lo + (hi - lo) / 2;
    Partitioning trial;
    if (HybridFeasibleAt(instance, guess, hc, radii[mid], &trial,
                         &result.stats)) {
      hi = mid;
      part = std::move(trial);
    } else {
      lo = mid + 1;
    }
  }
  result.feasible = true;
  result.part = std::move(part);
  result.cost = GuessCost(instance, guess, result.part);
  return result;
}

std::vector<std::vector<int>> EnumerateGuesses(const CenterSet& centers,
                                               const HybridConstraints& hc) {
  std::vector<int> facilities;
  for (int f : centers.members) {
    if (std::find(facilities.begin(), facilities.end(), f) == facilities.end()) {
      facilities.push_back(f);
    }
  }
  const int k = static_cast<int>(centers.members.size());
  // previous[i]: last earlier cluster with the same size bounds, or -1.
  std::vector<int> previous(k, -1);
  for (int i = 0; i < k; ++i) {
    for (int p = i - 1; p >= 0; --p) {
      if (hc.cluster_lower[p] == hc.cluster_lower[i] &&
          hc.cluster_upper[p] == hc.cluster_upper[i]) {
        previous[i] = p;
        break;
      }
    }
  }
  std::vector<std::vector<int>> guesses;
  std::vector<int> choice(k, 0);
  const int d = static_cast<int>(facilities.size());
  auto recurse = [&](auto&& self, int i) -> void {
    if (i == k) {
      std::vector<int> guess(k);
      for (int t = 0; t < k; ++t) guess[t] = facilities[choice[t]];
      guesses.push_back(std::move(guess));
      return;
    }
    const int start = previous[i] >= 0 ? choice[previous[i]] : 0;
    for (int c = start; c < d; ++c) {
      choice[i] = c;
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);
  return guesses;
}

PartitionResult HybridPartition(const MetricInstance& instance,
                                const CenterSet& centers,
                                const HybridConstraints& hc,
                                std::optional<CostBound> bound) {
  ValidateCenterSet(instance, centers);
  ValidateHybrid(instance, hc);
  PartitionResult best;
  const int lower_total =
      std::accumulate(hc.cluster_lower.begin(), hc.cluster_lower.end(), 0);
  if (lower_total > instance.num_clients()) return best;

  PartitionStats stats;
  std::optional<CostBound> current = bound;
  for (const auto& guess : EnumerateGuesses(centers, hc)) {
    PartitionResult r = HybridPartitionForGuess(instance, guess, hc, current);
    stats.guesses += r.stats.guesses;
    stats.networks += r.stats.networks;
    if (!r.feasible) continue;
    best = std::move(r);
    current = CostBound{best.cost, false};
    if (best.cost.base == 0.0) break;
  }
  best.stats = stats;
  if (best.feasible && !SatisfiesHybrid(instance, hc, best.part)) {
    throw std::logic_error("hybrid partition violates its constraints");
  }
  return best;
}

PartitionResult VoronoiPartition(const MetricInstance& instance,
                                 const CenterSet& centers) {
  ValidateCenterSet(instance, centers);
  const auto clients = instance.clients();
  const int n = instance.num_clients();
  std::vector<int> slot(n);
  std::vector<int> order(n);
  for (int x = 0; x < n; ++x) {
    slot[x] = NearestCenterSlot(instance, centers.members, clients[x]);
    order[x] = x;
  }
  auto dist = [&](int x) {
    return instance.Distance(clients[x], centers.members[slot[x]]);
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return dist(a) < dist(b); });
  const int keep = n - instance.m();

  PartitionResult result;
  result.feasible = true;
  result.guess = centers.members;
  result.part.clusters.assign(centers.members.size(), {});
  if (keep > 0) {
    const double threshold = dist(order[keep - 1]);
    for (int x = 0; x < n; ++x) {
      if (dist(x) > threshold) continue;
      result.part.clusters[slot[x]].push_back(clients[x]);
      const Cost c = instance.CostOf(clients[x], centers.members[slot[x]]);
      if (c > result.cost) result.cost = c;
    }
  }
  return result;
}

}  // namespace ksupplier
