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

#include "ksupplier/metric.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ksupplier {

const char* ObjectiveName(Objective objective) {
  return objective == Objective::kCenter ? "center" : "supplier";
}

MetricInstance::MetricInstance(std::vector<std::vector<double>> dist,
                               std::vector<int> clients,
                               std::vector<int> locations, int k, double z,
                               int m) {
  n_ = static_cast<int>(dist.size());
  dist_.reserve(static_cast<size_t>(n_) * n_);
  for (const auto& row : dist) {
    if (static_cast<int>(row.size()) != n_) {
      throw std::invalid_argument("distance matrix is not square");
    }
    dist_.insert(dist_.end(), row.begin(), row.end());
  }
  clients_ = std::move(clients);
  locations_ = std::move(locations);
  k_ = k;
  z_ = z;
  m_ = m;
  Init();
}

MetricInstance MetricInstance::FromEuclidean(
    const std::vector<std::vector<double>>& points, std::vector<int> clients,
    std::vector<int> locations, int k, double z, int m) {
  MetricInstance instance;
  const int n = static_cast<int>(points.size());
  size_t dim = points.empty() ? 0 : points[0].size();
  bool integral = true;
  for (const auto& p : points) {
    if (p.size() != dim) {
      throw std::invalid_argument("points have inconsistent dimension");
    }
    for (double c : p) {
      if (!std::isfinite(c)) throw std::invalid_argument("non-finite coordinate");
      if (c != std::floor(c) || std::abs(c) > (1 << 24)) integral = false;
    }
  }
  instance.n_ = n;
  instance.dist_.assign(static_cast<size_t>(n) * n, 0.0);
  if (integral) instance.squared_.assign(static_cast<size_t>(n) * n, 0.0);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      double sq = 0.0;
      for (size_t t = 0; t < dim; ++t) {
        const double diff = points[a][t] - points[b][t];
        sq += diff * diff;
      }
      const double d = std::sqrt(sq);
      instance.dist_[a * n + b] = instance.dist_[b * n + a] = d;
      if (integral) instance.squared_[a * n + b] = instance.squared_[b * n + a] = sq;
    }
  }
  instance.clients_ = std::move(clients);
  instance.locations_ = std::move(locations);
  instance.k_ = k;
  instance.z_ = z;
  instance.m_ = m;
  instance.Init();
  return instance;
}

void MetricInstance::Init() {
  if (clients_.empty()) throw std::invalid_argument("client set is empty");
  if (locations_.empty()) throw std::invalid_argument("location set is empty");
  client_ordinal_.assign(n_, -1);
  is_location_.assign(n_, false);
  for (size_t i = 0; i < clients_.size(); ++i) {
    const int c = clients_[i];
    if (c < 0 || c >= n_) throw std::invalid_argument("client index out of range");
    if (client_ordinal_[c] >= 0) throw std::invalid_argument("duplicate client");
    client_ordinal_[c] = static_cast<int>(i);
  }
  for (int f : locations_) {
    if (f < 0 || f >= n_) {
      throw std::invalid_argument("location index out of range");
    }
    if (is_location_[f]) throw std::invalid_argument("duplicate location");
    is_location_[f] = true;
  }
  for (double d : dist_) {
    if (!std::isfinite(d)) throw std::invalid_argument("non-finite distance");
  }
  if (k_ < 1 || k_ > num_locations()) {
    throw std::invalid_argument("k must satisfy 1 <= k <= |locations|");
  }
  if (m_ < 0 || m_ > num_clients()) {
    throw std::invalid_argument("m must satisfy 0 <= m <= |clients|");
  }
  if (!(z_ > 0.0) || !std::isfinite(z_)) {
    throw std::invalid_argument("z must be positive");
  }
}

double MetricInstance::Raise(double base) const {
  if (z_ == 1.0) return base;
  if (z_ == 2.0) return base * base;
  return std::pow(base, z_);
}

Cost MetricInstance::CostOf(int a, int b) const {
  const double base = Distance(a, b);
  if (z_ == 2.0 && !squared_.empty()) return {base, squared_[a * n_ + b]};
  return {base, Raise(base)};
}

bool MetricInstance::LocationsEqualClients() const {
  if (clients_.size() != locations_.size()) return false;
  return std::all_of(clients_.begin(), clients_.end(),
                     [&](int c) { return is_location_[c]; });
}

MetricInstance MetricInstance::WithK(int k) const {
  MetricInstance copy = *this;
  copy.k_ = k;
  copy.Init();
  return copy;
}

MetricInstance MetricInstance::WithOutlierBudget(int m) const {
  MetricInstance copy = *this;
  copy.m_ = m;
  copy.Init();
  return copy;
}

MetricInstance MetricInstance::WithZ(double z) const {
  MetricInstance copy = *this;
  copy.z_ = z;
  copy.Init();
  return copy;
}

MetricInstance MetricInstance::WithLocations(std::vector<int> locations) const {
  MetricInstance copy = *this;
  copy.locations_ = std::move(locations);
  copy.Init();
  return copy;
}

MetricInstance MetricInstance::WithCopies(const std::vector<int>& copy_of,
                                          std::vector<int> clients,
                                          std::vector<int> locations) const {
  const int extra = static_cast<int>(copy_of.size());
  const int n = n_ + extra;
  std::vector<int> origin(n);
  for (int p = 0; p < n_; ++p) origin[p] = p;
  for (int i = 0; i < extra; ++i) {
    if (copy_of[i] < 0 || copy_of[i] >= n_) {
      throw std::invalid_argument("copy source out of range");
    }
    origin[n_ + i] = copy_of[i];
  }
  MetricInstance copy;
  copy.n_ = n;
  copy.dist_.assign(static_cast<size_t>(n) * n, 0.0);
  if (!squared_.empty()) copy.squared_.assign(static_cast<size_t>(n) * n, 0.0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const size_t src = static_cast<size_t>(origin[a]) * n_ + origin[b];
      copy.dist_[static_cast<size_t>(a) * n + b] = dist_[src];
      if (!squared_.empty()) {
        copy.squared_[static_cast<size_t>(a) * n + b] = squared_[src];
      }
    }
  }
  copy.clients_ = std::move(clients);
  copy.locations_ = std::move(locations);
  copy.k_ = k_;
  copy.z_ = z_;
  copy.m_ = m_;
  copy.Init();
  return copy;
}

void ValidateCenterSet(const MetricInstance& instance,
                       const CenterSet& centers) {
  if (static_cast<int>(centers.members.size()) != instance.k()) {
    throw std::invalid_argument("centre set must have exactly k members");
  }
  for (int f : centers.members) {
    if (f < 0 || f >= instance.num_points() || !instance.IsLocation(f)) {
      throw std::invalid_argument("centre is not a facility location");
    }
  }
}

std::vector<int> Partitioning::Covered() const {
  std::vector<int> covered;
  for (const auto& cluster : clusters) {
    covered.insert(covered.end(), cluster.begin(), cluster.end());
  }
  std::sort(covered.begin(), covered.end());
  return covered;
}

std::vector<int> Partitioning::Outliers(const MetricInstance& instance) const {
  std::vector<bool> seen(instance.num_points(), false);
  for (const auto& cluster : clusters) {
    for (int x : cluster) seen[x] = true;
  }
  std::vector<int> outliers;
  for (int c : instance.clients()) {
    if (!seen[c]) outliers.push_back(c);
  }
  return outliers;
}

void ValidatePartitioning(const MetricInstance& instance,
                          const Partitioning& part) {
  if (static_cast<int>(part.clusters.size()) != instance.k()) {
    throw std::invalid_argument("partitioning must have exactly k clusters");
  }
  std::vector<bool> seen(instance.num_points(), false);
  int covered = 0;
  for (const auto& cluster : part.clusters) {
    for (int x : cluster) {
      if (x < 0 || x >= instance.num_points() || !instance.IsClient(x)) {
        throw std::invalid_argument("cluster member is not a client");
      }
      if (seen[x]) throw std::invalid_argument("clusters are not disjoint");
      seen[x] = true;
      ++covered;
    }
  }
  if (instance.num_clients() - covered > instance.m()) {
    throw std::invalid_argument("more than m clients left uncovered");
  }
}

int NearestCenterSlot(const MetricInstance& instance,
                      std::span<const int> centers, int point) {
  int best = 0;
  for (size_t s = 1; s < centers.size(); ++s) {
    if (instance.Distance(point, centers[s]) <
        instance.Distance(point, centers[best])) {
      best = static_cast<int>(s);
    }
  }
  return best;
}

Cost ClusteringCost(const MetricInstance& instance,
                    std::span<const int> centers, std::span<const int> subset) {
  if (centers.empty()) throw std::invalid_argument("empty centre set");
  Cost worst;
  for (int x : subset) {
    const int f = centers[NearestCenterSlot(instance, centers, x)];
    const Cost c = instance.CostOf(x, f);
    if (c > worst) worst = c;
  }
  return worst;
}

Cost SingleFacilityCost(const MetricInstance& instance, int facility,
                        std::span<const int> cluster) {
  Cost worst;
  for (int x : cluster) {
    const Cost c = instance.CostOf(x, facility);
    if (c > worst) worst = c;
  }
  return worst;
}

Cost Psi(const MetricInstance& instance, std::span<const int> centers,
         const Partitioning& part) {
  if (centers.empty()) throw std::invalid_argument("empty centre set");
  Cost total;
  for (const auto& cluster : part.clusters) {
    if (cluster.empty()) continue;
    Cost best = SingleFacilityCost(instance, centers[0], cluster);
    for (size_t s = 1; s < centers.size(); ++s) {
      const Cost c = SingleFacilityCost(instance, centers[s], cluster);
      if (c < best) best = c;
    }
    if (best > total) total = best;
  }
  return total;
}

std::pair<Cost, CenterSet> PsiStar(const MetricInstance& instance,
                                   const Partitioning& part) {
  Cost total;
  CenterSet centers;
  const auto locations = instance.locations();
  for (const auto& cluster : part.clusters) {
    int best_f = locations[0];
    Cost best = SingleFacilityCost(instance, best_f, cluster);
    for (size_t t = 1; t < locations.size() && !cluster.empty(); ++t) {
      const Cost c = SingleFacilityCost(instance, locations[t], cluster);
      if (c < best) {
        best = c;
        best_f = locations[t];
      }
    }
    centers.members.push_back(best_f);
    if (best > total) total = best;
  }
  return {total, centers};
}

namespace {

std::vector<Cost> SortedUnique(std::vector<Cost> costs) {
  std::sort(costs.begin(), costs.end(),
            [](const Cost& a, const Cost& b) { return a.base < b.base; });
  costs.erase(std::unique(costs.begin(), costs.end(),
                          [](const Cost& a, const Cost& b) {
                            return a.base == b.base;
                          }),
              costs.end());
  if (costs.empty() || costs.front().base != 0.0) {
    costs.insert(costs.begin(), Cost{0.0, 0.0});
  }
  return costs;
}

}  // namespace

std::vector<Cost> DistinctCosts(const MetricInstance& instance) {
  return DistinctCosts(instance, instance.locations());
}

std::vector<Cost> DistinctCosts(const MetricInstance& instance,
                                std::span<const int> centers) {
  std::vector<Cost> costs;
  costs.reserve(instance.clients().size() * centers.size() + 1);
  for (int x : instance.clients()) {
    for (int f : centers) costs.push_back(instance.CostOf(x, f));
  }
  return SortedUnique(std::move(costs));
}

std::string MetricViolation::ToString() const {
  std::ostringstream out;
  out.precision(17);
  switch (kind) {
    case Kind::kNegative:
      out << "negative distance d(" << i << "," << j << ") = " << lhs;
      break;
    case Kind::kNonzeroDiagonal:
      out << "nonzero diagonal d(" << i << "," << i << ") = " << lhs;
      break;
    case Kind::kAsymmetric:
      out << "asymmetric d(" << i << "," << j << ") = " << lhs << " but d("
          << j << "," << i << ") = " << rhs;
      break;
    case Kind::kTriangle:
      out << "triangle inequality violated: d(" << i << "," << j
          << ") = " << lhs << " > d(" << i << "," << via << ") + d(" << via
          << "," << j << ") = " << rhs;
      break;
  }
  return out.str();
}

std::vector<MetricViolation> VerifyMetric(const MetricInstance& instance,
                                          double tol) {
  using Kind = MetricViolation::Kind;
  std::vector<MetricViolation> out;
  const int n = instance.num_points();
  auto slack = [tol](double rhs) { return tol * std::max(1.0, std::abs(rhs)); };
  for (int i = 0; i < n; ++i) {
    if (std::abs(instance.Distance(i, i)) > slack(0.0)) {
      out.push_back({Kind::kNonzeroDiagonal, i, i, -1,
                     instance.Distance(i, i), 0.0});
    }
    for (int j = 0; j < n; ++j) {
      if (instance.Distance(i, j) < -slack(0.0)) {
        out.push_back({Kind::kNegative, i, j, -1, instance.Distance(i, j), 0.0});
      }
    }
    for (int j = i + 1; j < n; ++j) {
      const double a = instance.Distance(i, j);
      const double b = instance.Distance(j, i);
      if (std::abs(a - b) > slack(std::max(a, b))) {
        out.push_back({Kind::kAsymmetric, i, j, -1, a, b});
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double direct = instance.Distance(i, j);
      for (int l = 0; l < n; ++l) {
        if (l == i || l == j) continue;
        const double detour = instance.Distance(i, l) + instance.Distance(l, j);
        if (direct > detour + slack(detour)) {
          out.push_back({Kind::kTriangle, i, j, l, direct, detour});
        }
      }
    }
  }
  return out;
}

}  // namespace ksupplier
