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

// Constrained k-supplier / k-center solver: bi-criteria pool, candidate list,
// and an exact partition algorithm per candidate. Also the exhaustive oracle.

#ifndef KSUPPLIER_SOLVER_H_
#define KSUPPLIER_SOLVER_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ksupplier/fair_partition.h"
#include "ksupplier/hybrid_partition.h"
#include "ksupplier/metric.h"

namespace ksupplier {

struct UnconstrainedSpec {
  friend bool operator==(const UnconstrainedSpec&,
                         const UnconstrainedSpec&) = default;
};
struct RGatherSpec {
  std::vector<int> lower;  // per cluster
  friend bool operator==(const RGatherSpec&, const RGatherSpec&) = default;
};
struct RCapacitySpec {
  std::vector<int> upper;  // per cluster
  friend bool operator==(const RCapacitySpec&, const RCapacitySpec&) = default;
};
struct BalancedSpec {
  std::vector<int> lower;
  std::vector<int> upper;
  friend bool operator==(const BalancedSpec&, const BalancedSpec&) = default;
};
struct ChromaticSpec {
  std::vector<int> colors;  // per client ordinal
  friend bool operator==(const ChromaticSpec&, const ChromaticSpec&) = default;
};
struct FaultTolerantSpec {
  std::vector<int> ell;  // per client ordinal
  friend bool operator==(const FaultTolerantSpec&,
                         const FaultTolerantSpec&) = default;
};
struct StronglyPrivateSpec {
  // Disjoint classes of client point indices covering the clients.
  std::vector<std::vector<int>> classes;
  std::vector<int> lower;  // per class
  friend bool operator==(const StronglyPrivateSpec&,
                         const StronglyPrivateSpec&) = default;
};
struct LDiversitySpec {
  std::vector<std::vector<int>> classes;
  Rational ell;
  friend bool operator==(const LDiversitySpec&, const LDiversitySpec&) = default;
};
struct FairSpec {
  std::vector<std::vector<int>> classes;
  std::vector<Rational> alpha;
  std::vector<Rational> beta;
  friend bool operator==(const FairSpec&, const FairSpec&) = default;
};

using ConstraintSpec =
    std::variant<UnconstrainedSpec, RGatherSpec, RCapacitySpec, BalancedSpec,
                 ChromaticSpec, FaultTolerantSpec, StronglyPrivateSpec,
                 LDiversitySpec, FairSpec>;

// Stable lowercase name ("unconstrained", "r_gather", ...).
std::string ConstraintName(const ConstraintSpec& spec);

// Throws std::invalid_argument when payload dimensions do not match the
// instance.
void ValidateSpec(const MetricInstance& instance, const ConstraintSpec& spec);

struct SolveStats {
  uint64_t list_size = 0;
  int64_t candidates = 0;
  int64_t guesses = 0;
  int64_t networks = 0;
  double wall_ms = 0.0;
};

struct Solution {
  bool feasible = false;
  CenterSet centers;
  // Facility serving each cluster.
  std::vector<int> facilities;
  // Clusters of original client ids. Under fault tolerance a client appears
  // once per cluster serving one of its copies.
  Partitioning part;
  std::vector<int> outliers;
  Cost cost;
  Objective objective = Objective::kSupplier;
  SolveStats stats;
};

struct SolveOptions {
  int workers = 1;
  // Seconds; zero or negative disables the limit.
  double timeout = 0.0;
};

class TimeoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EnumerationCapExceeded : public std::runtime_error {
 public:
  EnumerationCapExceeded(uint64_t estimate, uint64_t cap);
  uint64_t estimate() const { return estimate_; }
  uint64_t cap() const { return cap_; }

 private:
  uint64_t estimate_;
  uint64_t cap_;
};

Solution Solve(const MetricInstance& instance, const ConstraintSpec& spec,
               Objective objective, const SolveOptions& options = {});

// 10^6 unless CLUSTERING_ENUM_CAP holds a positive integer.
uint64_t OracleEnumerationCap();

// Exact optimum over every k-multiset of L. Throws EnumerationCapExceeded
// when C(|L| + k - 1, k) exceeds `cap` (0 means OracleEnumerationCap()).
Solution OracleSolve(const MetricInstance& instance, const ConstraintSpec& spec,
                     Objective objective, const SolveOptions& options = {},
                     uint64_t cap = 0);

// 3^z for k-supplier, 2^z for k-center.
double ApproximationBound(Objective objective, double z);

struct RatioReport {
  Solution solve;
  Solution oracle;
  double ratio = 1.0;
  double bound = 1.0;
  bool pass = false;
};

RatioReport MakeRatioReport(const MetricInstance& instance,
                            const ConstraintSpec& spec, Objective objective,
                            const SolveOptions& options = {});

// Ratio and verdict from two already computed solutions.
RatioReport CompareToOracle(Solution solve, Solution oracle, double z);

}  // namespace ksupplier

#endif  // KSUPPLIER_SOLVER_H_
