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

// Metric instances for the (outlier) k-supplier / k-center problems and the
// cost functions defined over them.
//
// Points live in a single universe indexed 0..num_points()-1. Clients and
// facility locations are ordered index sets into that universe. All cost
// comparisons are made on base distances; the exponent z is applied only when
// a value is reported, so orderings are exact.

#ifndef KSUPPLIER_METRIC_H_
#define KSUPPLIER_METRIC_H_

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ksupplier {

enum class Objective { kSupplier, kCenter };

const char* ObjectiveName(Objective objective);

// A d^z cost together with the distance d it was computed from. Comparisons
// use `base` only.
struct Cost {
  double base = 0.0;
  double value = 0.0;

  friend bool operator<(const Cost& a, const Cost& b) { return a.base < b.base; }
  friend bool operator>(const Cost& a, const Cost& b) { return a.base > b.base; }
  friend bool operator<=(const Cost& a, const Cost& b) {
    return a.base <= b.base;
  }
  friend bool operator>=(const Cost& a, const Cost& b) {
    return a.base >= b.base;
  }
  friend bool operator==(const Cost& a, const Cost& b) {
    return a.base == b.base;
  }
};

class MetricInstance {
 public:
  // `dist` must be square; clients and locations must be nonempty lists of
  // distinct point indices. Throws std::invalid_argument on malformed input or
  // when 1 <= k <= |locations|, 0 <= m <= |clients|, z > 0 is violated.
  MetricInstance(std::vector<std::vector<double>> dist, std::vector<int> clients,
                 std::vector<int> locations, int k, double z, int m);

  // Computes Euclidean distances. When every coordinate is an integer the
  // squared distances are kept exactly, and z = 2 costs are reported from
  // them instead of from sqrt(d)^2.
  static MetricInstance FromEuclidean(
      const std::vector<std::vector<double>>& points, std::vector<int> clients,
      std::vector<int> locations, int k, double z, int m);

  int num_points() const { return n_; }
  std::span<const int> clients() const { return clients_; }
  std::span<const int> locations() const { return locations_; }
  int num_clients() const { return static_cast<int>(clients_.size()); }
  int num_locations() const { return static_cast<int>(locations_.size()); }
  int k() const { return k_; }
  double z() const { return z_; }
  int m() const { return m_; }

  double Distance(int a, int b) const { return dist_[a * n_ + b]; }
  // d(a, b)^z.
  Cost CostOf(int a, int b) const;
  // Raises a base distance to the power z (no exact-square shortcut).
  double Raise(double base) const;

  // Position of `point` in clients(), or -1.
  int ClientOrdinal(int point) const { return client_ordinal_[point]; }
  bool IsClient(int point) const { return client_ordinal_[point] >= 0; }
  bool IsLocation(int point) const { return is_location_[point]; }
  // True when the location set equals the client set (the k-center case).
  bool LocationsEqualClients() const;

  bool has_exact_squares() const { return !squared_.empty(); }
  // Row-major n x n distance matrix.
  const std::vector<double>& matrix() const { return dist_; }

  MetricInstance WithK(int k) const;
  MetricInstance WithOutlierBudget(int m) const;
  MetricInstance WithZ(double z) const;
  MetricInstance WithLocations(std::vector<int> locations) const;
  // Appends co-located copies: new point num_points() + i duplicates
  // copy_of[i] (zero distance to it, same distances to everything else).
  MetricInstance WithCopies(const std::vector<int>& copy_of,
                            std::vector<int> clients,
                            std::vector<int> locations) const;

 private:
  MetricInstance() = default;
  void Init();

  int n_ = 0;
  std::vector<double> dist_;
  std::vector<double> squared_;
  std::vector<int> clients_;
  std::vector<int> locations_;
  std::vector<int> client_ordinal_;
  std::vector<bool> is_location_;
  int k_ = 1;
  double z_ = 1.0;
  int m_ = 0;
};

// A k-multiset of location indices. Repetition is allowed (soft assignment).
struct CenterSet {
  std::vector<int> members;

  friend bool operator==(const CenterSet&, const CenterSet&) = default;
};

// Checks |F| = k and membership in locations. Throws std::invalid_argument.
void ValidateCenterSet(const MetricInstance& instance, const CenterSet& centers);

// k disjoint client clusters; clients in no cluster are outliers.
struct Partitioning {
  std::vector<std::vector<int>> clusters;

  std::vector<int> Covered() const;
  std::vector<int> Outliers(const MetricInstance& instance) const;

  friend bool operator==(const Partitioning&, const Partitioning&) = default;
};

// Throws std::invalid_argument unless the clusters are pairwise disjoint
// client sets and at most m clients are left uncovered. The number of
// clusters must equal k.
void ValidatePartitioning(const MetricInstance& instance,
                          const Partitioning& part);

// max over x in subset of d(F, x)^z; zero for an empty subset. Throws
// std::invalid_argument when `centers` is empty.
Cost ClusteringCost(const MetricInstance& instance, std::span<const int> centers,
                    std::span<const int> subset);

// Index into `centers` of the facility closest to `point`, lowest index on
// ties.
int NearestCenterSlot(const MetricInstance& instance,
                      std::span<const int> centers, int point);

// 1-supplier cost of a single cluster served by `facility`.
Cost SingleFacilityCost(const MetricInstance& instance, int facility,
                        std::span<const int> cluster);

// Psi(F, O): every cluster is served entirely by its best facility in F.
// Empty clusters contribute zero.
Cost Psi(const MetricInstance& instance, std::span<const int> centers,
         const Partitioning& part);

// Psi*(O) and a centre set achieving it. Each cluster picks its best single
// location independently, which is exact under soft assignment. Empty
// clusters are given the first location.
std::pair<Cost, CenterSet> PsiStar(const MetricInstance& instance,
                                   const Partitioning& part);

// Sorted distinct client-to-location costs, with 0 prepended if absent.
std::vector<Cost> DistinctCosts(const MetricInstance& instance);

// Same, restricted to facilities in `centers`.
std::vector<Cost> DistinctCosts(const MetricInstance& instance,
                                std::span<const int> centers);

struct MetricViolation {
  enum class Kind { kNegative, kNonzeroDiagonal, kAsymmetric, kTriangle };
  Kind kind;
  int i = 0;
  int j = 0;
  // Intermediate point for triangle violations, otherwise -1.
  int via = -1;
  double lhs = 0.0;
  double rhs = 0.0;

  std::string ToString() const;
};

// Empty iff nonnegativity, zero diagonal, symmetry and the triangle
// inequality hold within `tol` (relative to max(1, rhs)).
std::vector<MetricViolation> VerifyMetric(const MetricInstance& instance,
                                          double tol = 1e-9);

}  // namespace ksupplier

#endif  // KSUPPLIER_METRIC_H_
