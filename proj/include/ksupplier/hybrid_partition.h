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

// Exact partition algorithm for a fixed centre set under hybrid constraints:
// per-cluster size bounds l_i <= |O_i| <= r_i and per-cluster, per-colour
// count bounds a_j <= |O_i n C_j| <= b_j, with up to m outliers.
//
// For every guess sigma mapping clusters to facilities of F and every radius
// lambda, feasibility is a circulation problem on
//
//   s -[|C|-m, |C|]-> o -[0,1]-> x -[0,1]-> (i, colour(x)) -[a_j, b_j]-> i
//     -[l_i, r_i]-> t
//
// where x -> (i, j) exists iff d(x, sigma(i)) <= lambda. The middle layers are
// keyed by cluster index, so two clusters sent to the same facility keep
// separate bounds.
//
// The r-gather, r-capacity, balanced, chromatic and strongly private problems
// are special cases; see the Make* constructors.

#ifndef KSUPPLIER_HYBRID_PARTITION_H_
#define KSUPPLIER_HYBRID_PARTITION_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "ksupplier/circulation.h"
#include "ksupplier/metric.h"

namespace ksupplier {

struct HybridConstraints {
  std::vector<int> cluster_lower;
  std::vector<int> cluster_upper;
  // Colour of each client, indexed by client ordinal.
  std::vector<int> color_of;
  std::vector<int> color_lower;
  std::vector<int> color_upper;

  int num_colors() const { return static_cast<int>(color_lower.size()); }
};

// Throws std::invalid_argument on dimension mismatches or inverted bounds.
void ValidateHybrid(const MetricInstance& instance, const HybridConstraints& hc);

// True when `part` respects every bound in `hc` and the outlier budget.
bool SatisfiesHybrid(const MetricInstance& instance, const HybridConstraints& hc,
                     const Partitioning& part);

HybridConstraints MakeUnconstrainedHybrid(const MetricInstance& instance);
HybridConstraints MakeRGather(const MetricInstance& instance,
                              std::vector<int> lower);
HybridConstraints MakeRCapacity(const MetricInstance& instance,
                                std::vector<int> upper);
HybridConstraints MakeBalanced(const MetricInstance& instance,
                               std::vector<int> lower, std::vector<int> upper);
// `colors` is indexed by client ordinal; at most one client of each colour per
// cluster.
HybridConstraints MakeChromatic(const MetricInstance& instance,
                                std::vector<int> colors);
// `class_of` is indexed by client ordinal; cluster i must hold at least
// lower[j] clients of class j.
HybridConstraints MakeStronglyPrivate(const MetricInstance& instance,
                                      std::vector<int> class_of,
                                      std::vector<int> lower);

struct PartitionStats {
  int64_t guesses = 0;
  int64_t networks = 0;
};

struct PartitionResult {
  bool feasible = false;
  Partitioning part;
  Cost cost;
  // Facility serving each cluster (the guess sigma).
  std::vector<int> guess;
  PartitionStats stats;
};

// Restricts a search to costs below `cost`, or at most `cost` when
// `inclusive`. Used by callers that already hold a solution of that cost.
struct CostBound {
  Cost cost;
  bool inclusive = false;

  bool Admits(const Cost& c) const {
    return inclusive ? c.base <= cost.base : c.base < cost.base;
  }
};

// Figure-style network for one (guess, radius) pair. Arc order: s->o, o->x
// per client, then x->(i,j), (i,j)->i and i->t arcs.
struct HybridNetwork {
  FlowNetwork net;
  // Index of each x->(i,j) arc with its client ordinal and cluster.
  struct Assignment {
    int arc;
    int client;
    int cluster;
  };
  std::vector<Assignment> assignments;
};

HybridNetwork BuildHybridNetwork(const MetricInstance& instance,
                                 const std::vector<int>& guess,
                                 const HybridConstraints& hc, Cost radius);

// Feasibility at one radius for a fixed guess; fills `part` when feasible.
bool HybridFeasibleAt(const MetricInstance& instance,
                      const std::vector<int>& guess,
                      const HybridConstraints& hc, Cost radius,
                      Partitioning* part, PartitionStats* stats = nullptr);

// Minimum feasible radius for a fixed guess by binary search over the
// client-to-guess distances.
PartitionResult HybridPartitionForGuess(
    const MetricInstance& instance, const std::vector<int>& guess,
    const HybridConstraints& hc, std::optional<CostBound> bound = std::nullopt);

// Guesses over the distinct facilities of F; clusters with identical (l_i,
// r_i) rows are interchangeable, so only nondecreasing guesses within such a
// block are tried.
std::vector<std::vector<int>> EnumerateGuesses(const CenterSet& centers,
                                               const HybridConstraints& hc);

// Minimum-cost feasible partitioning over every guess and radius. Ties go to
// the earliest guess. Infeasible (or nothing within `bound`) yields
// feasible = false.
PartitionResult HybridPartition(const MetricInstance& instance,
                                const CenterSet& centers,
                                const HybridConstraints& hc,
                                std::optional<CostBound> bound = std::nullopt);

// Unconstrained partition: every client goes to its nearest centre slot and
// the clients beyond the (|C| - m)-th smallest nearest distance are dropped.
PartitionResult VoronoiPartition(const MetricInstance& instance,
                                 const CenterSet& centers);

}  // namespace ksupplier

#endif  // KSUPPLIER_HYBRID_PARTITION_H_
