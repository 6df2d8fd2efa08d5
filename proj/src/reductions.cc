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

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ksupplier {

FaultTolerantReduction FaultTolerantReduce(const MetricInstance& instance,
                                           std::span<const int> ell) {
  if (ell.size() != static_cast<size_t>(instance.num_clients())) {
    throw std::invalid_argument("fault tolerance needs one ell per client");
  }
  const auto clients = instance.clients();
  std::vector<int> copy_of;
  std::vector<int> new_clients;
  std::vector<int> colors;
  int next_point = instance.num_points();
  for (size_t x = 0; x < clients.size(); ++x) {
    if (ell[x] < 1 || ell[x] > instance.k()) {
      throw std::invalid_argument("ell must satisfy 1 <= ell[x] <= k");
    }
    new_clients.push_back(clients[x]);
    colors.push_back(static_cast<int>(x));
    for (int c = 1; c < ell[x]; ++c) {
      copy_of.push_back(clients[x]);
      new_clients.push_back(next_point++);
      colors.push_back(static_cast<int>(x));
    }
  }
  std::vector<int> locations(instance.locations().begin(),
                             instance.locations().end());
  FaultTolerantReduction out{
      instance.WithCopies(copy_of, new_clients, std::move(locations)), {}, {}};
  out.origin.resize(out.instance.num_points());
  std::iota(out.origin.begin(), out.origin.begin() + instance.num_points(), 0);
  for (size_t i = 0; i < copy_of.size(); ++i) {
    out.origin[instance.num_points() + i] = copy_of[i];
  }
  out.constraints = MakeChromatic(out.instance, std::move(colors));
  return out;
}

PartitionResult FaultTolerantPartition(const FaultTolerantReduction& reduction,
                                       const CenterSet& centers,
                                       std::optional<CostBound> bound) {
  return HybridPartitionForGuess(reduction.instance, centers.members,
                                 reduction.constraints, bound);
}

Cost FaultTolerantCost(const MetricInstance& instance,
                       std::span<const int> centers, std::span<const int> ell) {
  const auto clients = instance.clients();
  Cost worst;
  std::vector<int> order(centers.begin(), centers.end());
  for (size_t x = 0; x < clients.size(); ++x) {
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return instance.Distance(clients[x], a) < instance.Distance(clients[x], b);
    });
    const Cost c = instance.CostOf(clients[x], order[ell[x] - 1]);
    if (c > worst) worst = c;
  }
  return worst;
}

std::vector<Cost> CopyCostsByClient(const MetricInstance& original,
                                    const FaultTolerantReduction& reduction,
                                    const PartitionResult& result) {
  std::vector<Cost> costs(original.num_clients());
  for (size_t i = 0; i < result.part.clusters.size(); ++i) {
    for (int copy : result.part.clusters[i]) {
      const int x = reduction.origin[copy];
      const Cost c = original.CostOf(x, result.guess[i]);
      Cost& slot = costs[original.ClientOrdinal(x)];
      if (c > slot) slot = c;
    }
  }
  return costs;
}

Partitioning CollapseCopies(const FaultTolerantReduction& reduction,
                            const Partitioning& part) {
  Partitioning out;
  for (const auto& cluster : part.clusters) {
    std::vector<int> originals;
    for (int copy : cluster) originals.push_back(reduction.origin[copy]);
    std::sort(originals.begin(), originals.end());
    originals.erase(std::unique(originals.begin(), originals.end()),
                    originals.end());
    out.clusters.push_back(std::move(originals));
  }
  return out;
}

LocationwiseInstance BalancedLocationwiseReduce(const MetricInstance& instance,
                                                const std::vector<int>& lower,
                                                const std::vector<int>& upper) {
  const int k = instance.k();
  if (lower.size() != static_cast<size_t>(k) ||
      upper.size() != static_cast<size_t>(k)) {
    throw std::invalid_argument("balanced bounds must have k entries");
  }
  std::vector<int> copy_of;
  std::vector<LocationCopy> copies;
  int next_point = instance.num_points();
  for (int f : instance.locations()) {
    for (int i = 0; i < k; ++i) {
      copy_of.push_back(f);
      copies.push_back({next_point++, f, i, lower[i], upper[i]});
    }
  }
  std::vector<int> new_locations;
  for (const auto& c : copies) new_locations.push_back(c.point);
  std::vector<int> clients(instance.clients().begin(), instance.clients().end());
  return {instance.WithCopies(copy_of, std::move(clients),
                              std::move(new_locations)),
          std::move(copies)};
}

std::vector<int> ExpandToLocationwise(const MetricInstance& instance,
                                      const LocationwiseInstance& lw,
                                      const std::vector<int>& facilities) {
  const int k = instance.k();
  std::vector<int> chosen;
  for (int i = 0; i < k; ++i) {
    for (const auto& c : lw.copies) {
      if (c.original == facilities[i] && c.slot == i) {
        chosen.push_back(c.point);
        break;
      }
    }
  }
  if (static_cast<int>(chosen.size()) != k) {
    throw std::invalid_argument("facility is not a location of the instance");
  }
  return chosen;
}

namespace {

const LocationCopy& FindCopy(const LocationwiseInstance& lw, int point) {
  for (const auto& c : lw.copies) {
    if (c.point == point) return c;
  }
  throw std::invalid_argument("point is not a location copy");
}

}  // namespace

PartitionResult LocationwiseAssign(const LocationwiseInstance& lw,
                                   const std::vector<int>& chosen) {
  std::vector<int> lower;
  std::vector<int> upper;
  for (int p : chosen) {
    const LocationCopy& c = FindCopy(lw, p);
    lower.push_back(c.lower);
    upper.push_back(c.upper);
  }
  std::vector<int> sorted = chosen;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("location-wise facilities must be distinct");
  }
  const HybridConstraints hc =
      MakeBalanced(lw.instance, std::move(lower), std::move(upper));
  ValidateHybrid(lw.instance, hc);
  return HybridPartitionForGuess(lw.instance, chosen, hc);
}

std::optional<ClusterwiseSolution> CollapseToClusterwise(
    const LocationwiseInstance& lw, const std::vector<int>& chosen,
    const Partitioning& part, const std::vector<int>& lower,
    const std::vector<int>& upper) {
  const int k = static_cast<int>(chosen.size());
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int c = 0; c < k && ok; ++c) {
      const int size = static_cast<int>(part.clusters[c].size());
      ok = size >= lower[perm[c]] && size <= upper[perm[c]];
    }
    if (!ok) continue;
    ClusterwiseSolution out;
    out.part.clusters.assign(k, {});
    out.facilities.assign(k, 0);
    for (int c = 0; c < k; ++c) {
      out.part.clusters[perm[c]] = part.clusters[c];
      out.facilities[perm[c]] = FindCopy(lw, chosen[c]).original;
    }
    return out;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace ksupplier
