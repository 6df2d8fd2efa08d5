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

// Problem reductions: fault-tolerant k-supplier to chromatic k-supplier, and
// cluster-wise balanced k-supplier to location-wise balanced k-supplier.

#ifndef KSUPPLIER_REDUCTIONS_H_
#define KSUPPLIER_REDUCTIONS_H_

#include <optional>
#include <span>
#include <vector>

#include "ksupplier/hybrid_partition.h"
#include "ksupplier/metric.h"

namespace ksupplier {

// Each client x is replaced by ell[x] co-located copies sharing a colour that
// no other client uses. The first copy of x is x itself; the rest are new
// points appended to the universe.
struct FaultTolerantReduction {
  MetricInstance instance;
  // Chromatic constraints over the reduced clients.
  HybridConstraints constraints;
  // Original point for every point of the reduced universe.
  std::vector<int> origin;
};

// `ell` is indexed by client ordinal. Throws std::invalid_argument unless
// 1 <= ell[x] <= k.
FaultTolerantReduction FaultTolerantReduce(const MetricInstance& instance,
                                           std::span<const int> ell);

// Chromatic partition of the reduced instance with cluster i served by
// centers.members[i]. A soft guess would let two clusters share one facility
// and put every copy of a client there, so the identity guess is the only one
// tried.
PartitionResult FaultTolerantPartition(
    const FaultTolerantReduction& reduction, const CenterSet& centers,
    std::optional<CostBound> bound = std::nullopt);

// max over x of d(x, ell_x-th nearest member of F)^z.
Cost FaultTolerantCost(const MetricInstance& instance,
                       std::span<const int> centers, std::span<const int> ell);

// Per original client, the largest assignment cost over its copies in a
// reduced partition result (serving facility per cluster taken from
// `result.guess`). Clients with no assigned copy get zero.
std::vector<Cost> CopyCostsByClient(const MetricInstance& original,
                                    const FaultTolerantReduction& reduction,
                                    const PartitionResult& result);

// The clusters of a reduced partition with every copy replaced by its
// original client. A client appears once per cluster serving one of its
// copies.
Partitioning CollapseCopies(const FaultTolerantReduction& reduction,
                            const Partitioning& part);

struct LocationCopy {
  int point = 0;     // point in the location-wise instance
  int original = 0;  // location it copies
  int slot = 0;      // the cluster index i whose bounds it carries
  int lower = 0;
  int upper = 0;
};

struct LocationwiseInstance {
  // Clients as before; locations are the k * |L| copies.
  MetricInstance instance;
  std::vector<LocationCopy> copies;
};

// Creates k copies f^1..f^k of every location f with g(f^i) = lower[i] and
// h(f^i) = upper[i].
LocationwiseInstance BalancedLocationwiseReduce(const MetricInstance& instance,
                                                const std::vector<int>& lower,
                                                const std::vector<int>& upper);

// Copy serving cluster i of a cluster-wise solution: f_i^i where f_i =
// facilities[i].
std::vector<int> ExpandToLocationwise(const MetricInstance& instance,
                                      const LocationwiseInstance& lw,
                                      const std::vector<int>& facilities);

// Optimal assignment for k distinct chosen copies, each bounded by its own
// (g, h). Clusters are indexed like `chosen`.
PartitionResult LocationwiseAssign(const LocationwiseInstance& lw,
                                   const std::vector<int>& chosen);

// Maps a location-wise solution back to a cluster-wise one by matching each
// chosen copy's client set to a distinct cluster index whose bounds admit its
// size. Returns the clusters (reindexed by cluster) and original facilities,
// or nullopt when no such matching exists.
struct ClusterwiseSolution {
  Partitioning part;
  std::vector<int> facilities;
};
std::optional<ClusterwiseSolution> CollapseToClusterwise(
    const LocationwiseInstance& lw, const std::vector<int>& chosen,
    const Partitioning& part, const std::vector<int>& lower,
    const std::vector<int>& upper);

}  // namespace ksupplier

#endif  // KSUPPLIER_REDUCTIONS_H_
