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

// Partition algorithm for the fair and l-diversity outlier k-supplier
// problems. Colour classes may overlap; every cluster O must satisfy
// beta_j |O| <= |O n C_j| <= alpha_j |O| for every class j.
//
// Clients are grouped by identical class membership. For a fixed radius the
// search runs over integer matrices h (h[f][i] = clients of group i sent to
// centre slot f) that satisfy the fairness rows and the outlier budget, and
// each candidate h is checked for an integral assignment on the network
//
//   s -[T, T]-> o -[0,1]-> x -[0,1]-> (f, group(x)) -[h[f][i], h[f][i]]-> t
//
// with T = sum of h and x -> (f, i) present iff d(x, F[f]) <= lambda.

#ifndef KSUPPLIER_FAIR_PARTITION_H_
#define KSUPPLIER_FAIR_PARTITION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ksupplier/hybrid_partition.h"
#include "ksupplier/metric.h"

namespace ksupplier {

// Nonnegative fraction num / den, den > 0, kept in lowest terms.
struct Rational {
  int64_t num = 0;
  int64_t den = 1;

  static Rational Of(int64_t num, int64_t den);
  // Fraction with the smallest denominator <= 10^6 within 1e-12 of x.
  static Rational FromDouble(double x);
  double ToDouble() const { return static_cast<double>(num) / den; }
  std::string ToString() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

// count <= r * total, exactly.
inline bool AtMost(int64_t count, const Rational& r, int64_t total) {
  return count * r.den <= r.num * total;
}
// count >= r * total, exactly.
inline bool AtLeast(int64_t count, const Rational& r, int64_t total) {
  return count * r.den >= r.num * total;
}

struct FairConstraints {
  // Client point indices of each class; classes may overlap.
  std::vector<std::vector<int>> classes;
  // Upper fractions.
  std::vector<Rational> alpha;
  // Lower fractions.
  std::vector<Rational> beta;
};

// Throws std::invalid_argument on dimension mismatch, beta_j > alpha_j,
// fractions outside [0, 1], or class members that are not clients.
void ValidateFair(const MetricInstance& instance, const FairConstraints& fc);

struct GroupStructure {
  // Client point indices per group, ascending.
  std::vector<std::vector<int>> groups;
  // Class indices shared by every member of the group.
  std::vector<std::vector<int>> signature;
};

// Groups clients by identical class membership, ordered by first client.
GroupStructure DeriveGroups(std::span<const int> clients,
                            const std::vector<std::vector<int>>& classes);

// alpha_j = 1 / ell, beta_j = 0. Throws std::invalid_argument for
// overlapping classes.
FairConstraints MakeLDiversity(const std::vector<std::vector<int>>& classes,
                               Rational ell);

// True when every cluster satisfies every class's fraction bounds and at most
// m clients are uncovered.
bool SatisfiesFairness(const MetricInstance& instance,
                       const FairConstraints& fc, const Partitioning& part);

// Minimum radius for which some fair h admits an integral assignment.
// Clusters are indexed by centre slot and `guess` is F itself.
PartitionResult FairPartition(const MetricInstance& instance,
                              const CenterSet& centers,
                              const FairConstraints& fc,
                              std::optional<CostBound> bound = std::nullopt);

// Feasibility at one radius. When feasible, fills `part` and `h`.
bool FairFeasibleAt(const MetricInstance& instance, const CenterSet& centers,
                    const FairConstraints& fc, const GroupStructure& groups,
                    Cost radius, Partitioning* part,
                    std::vector<std::vector<int>>* h,
                    PartitionStats* stats = nullptr);

}  // namespace ksupplier

#endif  // KSUPPLIER_FAIR_PARTITION_H_
