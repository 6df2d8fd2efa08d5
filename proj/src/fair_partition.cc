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

#include "ksupplier/fair_partition.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "ksupplier/circulation.h"

namespace ksupplier {

Rational Rational::Of(int64_t num, int64_t den) {
  if (den <= 0 || num < 0) {
    throw std::invalid_argument("fractions must be nonnegative with den > 0");
  }
  const int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

Rational Rational::FromDouble(double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw std::invalid_argument("fraction must be a finite nonnegative number");
  }
  Rational best = Of(static_cast<int64_t>(std::llround(x)), 1);
  double best_err = std::abs(best.ToDouble() - x);
  for (int64_t den = 1; den <= 1000000 && best_err > 1e-12; ++den) {
    const int64_t num = std::llround(x * static_cast<double>(den));
    const double err = std::abs(static_cast<double>(num) / den - x);
    if (err < best_err) {
      best = Of(num, den);
      best_err = err;
    }
  }
  return best;
}

std::string Rational::ToString() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

void ValidateFair(const MetricInstance& instance, const FairConstraints& fc) {
  const size_t w = fc.classes.size();
  if (fc.alpha.size() != w || fc.beta.size() != w) {
    throw std::invalid_argument("alpha and beta need one entry per class");
  }
  const Rational one{1, 1};
  for (size_t j = 0; j < w; ++j) {
    if (fc.alpha[j].den <= 0 || fc.beta[j].den <= 0 || fc.alpha[j].num < 0 ||
        fc.beta[j].num < 0) {
      throw std::invalid_argument("malformed fraction");
    }
    // beta <= alpha <= 1.
    if (fc.beta[j].num * fc.alpha[j].den > fc.alpha[j].num * fc.beta[j].den ||
        !AtMost(fc.alpha[j].num, one, fc.alpha[j].den)) {
      throw std::invalid_argument("fractions must satisfy 0 <= beta <= alpha <= 1");
    }
    std::vector<int> members = fc.classes[j];
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
      throw std::invalid_argument("class lists a client twice");
    }
    for (int x : members) {
      if (x < 0 || x >= instance.num_points() || !instance.IsClient(x)) {
        throw std::invalid_argument("class member is not a client");
      }
    }
  }
}

GroupStructure DeriveGroups(std::span<const int> clients,
                            const std::vector<std::vector<int>>& classes) {
  std::vector<int> sorted(clients.begin(), clients.end());
  std::sort(sorted.begin(), sorted.end());
  std::map<int, std::vector<int>> membership;
  for (int x : sorted) membership[x];
  for (size_t j = 0; j < classes.size(); ++j) {
    for (int x : classes[j]) {
      auto it = membership.find(x);
      if (it != membership.end()) it->second.push_back(static_cast<int>(j));
    }
  }
  GroupStructure out;
  std::map<std::vector<int>, int> index;
  for (int x : sorted) {
    std::vector<int>& sig = membership[x];
    std::sort(sig.begin(), sig.end());
    sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
    auto [it, inserted] = index.emplace(sig, static_cast<int>(out.groups.size()));
    if (inserted) {
      out.groups.emplace_back();
      out.signature.push_back(sig);
    }
    out.groups[it->second].push_back(x);
  }
  return out;
}

FairConstraints MakeLDiversity(const std::vector<std::vector<int>>& classes,
                               Rational ell) {
  if (ell.den <= 0 || ell.num < ell.den) {
    throw std::invalid_argument("ell must be at least 1");
  }
  std::vector<int> all;
  for (const auto& c : classes) all.insert(all.end(), c.begin(), c.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw std::invalid_argument("l-diversity classes must be disjoint");
  }
  FairConstraints fc;
  fc.classes = classes;
  fc.alpha.assign(classes.size(), Rational::Of(ell.den, ell.num));
  fc.beta.assign(classes.size(), Rational{0, 1});
  return fc;
}

bool SatisfiesFairness(const MetricInstance& instance,
                       const FairConstraints& fc, const Partitioning& part) {
  std::vector<bool> seen(instance.num_points(), false);
  int covered = 0;
  for (const auto& cluster : part.clusters) {
    for (int x : cluster) {
      if (x < 0 || x >= instance.num_points() || !instance.IsClient(x) ||
          seen[x]) {
        return false;
      }
      seen[x] = true;
      ++covered;
    }
  }
  if (instance.num_clients() - covered > instance.m()) return false;
  for (const auto& cluster : part.clusters) {
    std::vector<bool> in_cluster(instance.num_points(), false);
    for (int x : cluster) in_cluster[x] = true;
    const int64_t size = static_cast<int64_t>(cluster.size());
    for (size_t j = 0; j < fc.classes.size(); ++j) {
      int64_t count = 0;
      for (int x : fc.classes[j]) count += in_cluster[x] ? 1 : 0;
      if (!AtMost(count, fc.alpha[j], size) || !AtLeast(count, fc.beta[j], size)) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Rounding network for the groups in `columns` only; all groups gives the
// full network.
struct RoundingNetwork {
  FlowNetwork net;
  struct Assignment {
    int arc;
    int client;  // point index
    int slot;
  };
  std::vector<Assignment> assignments;
};

RoundingNetwork BuildRoundingNetwork(const MetricInstance& instance,
                                     const CenterSet& centers,
                                     const GroupStructure& groups,
                                     const std::vector<std::vector<int>>& h,
                                     const std::vector<int>& columns,
                                     Cost radius) {
  const int k = static_cast<int>(centers.members.size());
  RoundingNetwork out;
  FlowNetwork& net = out.net;
  net.source = net.AddNode();
  net.sink = net.AddNode();
  const int hub = net.AddNode();
  int64_t total = 0;
  for (int i : columns) {
    for (int f = 0; f < k; ++f) total += h[f][i];
  }
  net.AddArc(net.source, hub, total, total);
  for (int i : columns) {
    const int first_pair = net.node_count;
    net.node_count += k;
    for (int f = 0; f < k; ++f) {
      net.AddArc(first_pair + f, net.sink, h[f][i], h[f][i]);
    }
    for (int x : groups.groups[i]) {
      const int node = net.AddNode();
      net.AddArc(hub, node, 0, 1);
      for (int f = 0; f < k; ++f) {
        if (h[f][i] > 0 &&
            instance.Distance(x, centers.members[f]) <= radius.base) {
          const int arc = net.AddArc(node, first_pair + f, 0, 1);
          out.assignments.push_back({arc, x, f});
        }
      }
    }
  }
  return out;
}

class HSearch {
 public:
  HSearch(const MetricInstance& instance, const CenterSet& centers,
          const FairConstraints& fc, const GroupStructure& groups, Cost radius,
          PartitionStats* stats)
      : instance_(instance),
        centers_(centers),
        fc_(fc),
        groups_(groups),
        radius_(radius),
        stats_(stats),
        k_(static_cast<int>(centers.members.size())),
        num_groups_(static_cast<int>(groups.groups.size())),
        num_classes_(static_cast<int>(fc.classes.size())) {
    reach_.assign(k_, std::vector<int>(num_groups_, 0));
    any_reach_.assign(num_groups_, 0);
    for (int i = 0; i < num_groups_; ++i) {
      for (int x : groups_.groups[i]) {
        bool any = false;
        for (int f = 0; f < k_; ++f) {
          if (instance_.Distance(x, centers_.members[f]) <= radius_.base) {
            ++reach_[f][i];
            any = true;
          }
        }
        any_reach_[i] += any ? 1 : 0;
      }
    }
    in_class_.assign(num_groups_, std::vector<bool>(num_classes_, false));
    for (int i = 0; i < num_groups_; ++i) {
      for (int j : groups_.signature[i]) in_class_[i][j] = true;
    }
    suffix_reach_.assign(num_groups_ + 1, 0);
    for (int i = num_groups_ - 1; i >= 0; --i) {
      suffix_reach_[i] = suffix_reach_[i + 1] + any_reach_[i];
    }
    column_cache_.resize(num_groups_);
    h_.assign(k_, std::vector<int>(num_groups_, 0));
    target_ = instance_.num_clients() - instance_.m();
  }

  bool Run(Partitioning* part, std::vector<std::vector<int>>* h) {
    if (suffix_reach_[0] < target_) return false;
    if (!Column(0, 0)) return false;
    if (h != nullptr) *h = h_;
    if (part != nullptr) *part = std::move(found_);
    return true;
  }

 private:
  // Columns [0, i) are fixed with `total` clients assigned.
  bool Column(int i, int total) {
    if (i == num_groups_) return Leaf();
    const int need = std::max(0, target_ - total - suffix_reach_[i + 1]);
    return Entry(i, 0, total, 0, need);
  }

  bool Entry(int i, int f, int total, int column_sum, int need) {
    if (f == k_) {
      if (column_sum < need) return false;
      if (!ColumnFeasible(i)) return false;
      if (!PartialFair(i)) return false;
      return Column(i + 1, total + column_sum);
    }
    const int room = std::min(any_reach_[i], static_cast<int>(groups_.groups[i].size())) -
                     column_sum;
    int top = std::min(reach_[f][i], room);
    // Remaining slots in this column cannot make up more than their reach.
    int later = 0;
    for (int g = f + 1; g < k_; ++g) later += reach_[g][i];
    for (int v = top; v >= 0; --v) {
      if (column_sum + v + std::min(later, room - v) < need) break;
      h_[f][i] = v;
      if (Entry(i, f + 1, total, column_sum + v, need)) return true;
    }
    h_[f][i] = 0;
    return false;
  }

  bool ColumnFeasible(int i) {
    std::vector<int> key(k_);
    for (int f = 0; f < k_; ++f) key[f] = h_[f][i];
    auto it = column_cache_[i].find(key);
    if (it != column_cache_[i].end()) return it->second;
    bool feasible = true;
    if (std::any_of(key.begin(), key.end(), [](int v) { return v > 0; })) {
      RoundingNetwork rn = BuildRoundingNetwork(instance_, centers_, groups_,
                                                h_, {i}, radius_);
      if (stats_ != nullptr) ++stats_->networks;
      feasible = FeasibleCirculation(rn.net).feasible;
    }
    column_cache_[i].emplace(std::move(key), feasible);
    return feasible;
  }

  // Necessary condition on columns [0, i]: the remaining groups can still
  // repair every slot's class fractions.
  bool PartialFair(int i) const {
    for (int f = 0; f < k_; ++f) {
      int64_t size = 0;
      for (int t = 0; t <= i; ++t) size += h_[f][t];
      for (int j = 0; j < num_classes_; ++j) {
        int64_t inside = 0;
        int64_t rest_in = 0;
        int64_t rest_out = 0;
        for (int t = 0; t <= i; ++t) inside += in_class_[t][j] ? h_[f][t] : 0;
        for (int t = i + 1; t < num_groups_; ++t) {
          (in_class_[t][j] ? rest_in : rest_out) += reach_[f][t];
        }
        if (!AtMost(inside, fc_.alpha[j], size + rest_out)) return false;
        if (!AtLeast(inside + rest_in, fc_.beta[j], size + rest_in)) return false;
      }
    }
    return true;
  }

  bool Leaf() {
    for (int f = 0; f < k_; ++f) {
      int64_t size = 0;
      for (int t = 0; t < num_groups_; ++t) size += h_[f][t];
      for (int j = 0; j < num_classes_; ++j) {
        int64_t inside = 0;
        for (int t = 0; t < num_groups_; ++t) {
          inside += in_class_[t][j] ? h_[f][t] : 0;
        }
        if (!AtMost(inside, fc_.alpha[j], size) ||
            !AtLeast(inside, fc_.beta[j], size)) {
          return false;
        }
      }
    }
    std::vector<int> all(num_groups_);
    std::iota(all.begin(), all.end(), 0);
    RoundingNetwork rn =
        BuildRoundingNetwork(instance_, centers_, groups_, h_, all, radius_);
    if (stats_ != nullptr) ++stats_->networks;
    const FlowResult flow = FeasibleCirculation(rn.net);
    if (!flow.feasible) return false;
    found_.clusters.assign(k_, {});
    for (const auto& a : rn.assignments) {
      if (flow.flow[a.arc] > 0) found_.clusters[a.slot].push_back(a.client);
    }
    for (auto& cluster : found_.clusters) std::sort(cluster.begin(), cluster.end());
    return true;
  }

  const MetricInstance& instance_;
  const CenterSet& centers_;
  const FairConstraints& fc_;
  const GroupStructure& groups_;
  const Cost radius_;
  PartitionStats* stats_;
  const int k_;
  const int num_groups_;
  const int num_classes_;
  int target_ = 0;
  std::vector<std::vector<int>> reach_;
  std::vector<int> any_reach_;
  std::vector<int> suffix_reach_;
  std::vector<std::vector<bool>> in_class_;
  std::vector<std::map<std::vector<int>, bool>> column_cache_;
  std::vector<std::vector<int>> h_;
  Partitioning found_;
};

}  // namespace

bool FairFeasibleAt(const MetricInstance& instance, const CenterSet& centers,
                    const FairConstraints& fc, const GroupStructure& groups,
                    Cost radius, Partitioning* part,
                    std::vector<std::vector<int>>* h, PartitionStats* stats) {
  HSearch search(instance, centers, fc, groups, radius, stats);
  return search.Run(part, h);
}

PartitionResult FairPartition(const MetricInstance& instance,
                              const CenterSet& centers,
                              const FairConstraints& fc,
                              std::optional<CostBound> bound) {
  ValidateCenterSet(instance, centers);
  ValidateFair(instance, fc);
  const GroupStructure groups = DeriveGroups(instance.clients(), fc.classes);

  PartitionResult result;
  result.guess = centers.members;
  result.stats.guesses = 1;
  std::vector<Cost> radii = DistinctCosts(instance, centers.members);
  if (bound.has_value()) {
    while (!radii.empty() && !bound->Admits(radii.back())) radii.pop_back();
  }
  if (radii.empty()) return result;

  Partitioning part;
  std::vector<std::vector<int>> h;
  size_t lo = 0;
  size_t hi = radii.size() - 1;
  if (!FairFeasibleAt(instance, centers, fc, groups, radii[hi], &part, &h,
                      &result.stats)) {
    return result;
  }
  while (lo < hi) {
    const size_t mid = lo + (hi - lo) / 2;
    Partitioning trial;
    std::vector<std::vector<int>> trial_h;
    if (FairFeasibleAt(instance, centers, fc, groups, radii[mid], &trial,
                       &trial_h, &result.stats)) {
      hi = mid;
      part = std::move(trial);
      h = std::move(trial_h);
    } else {
      lo = mid + 1;
    }
  }

  // The integral assignment reproduces h exactly, column by column.
  for (size_t f = 0; f < part.clusters.size(); ++f) {
    for (size_t i = 0; i < groups.groups.size(); ++i) {
      int count = 0;
      for (int x : part.clusters[f]) {
        count += std::binary_search(groups.groups[i].begin(),
                                    groups.groups[i].end(), x)
                     ? 1
                     : 0;
      }
      if (count != h[f][i]) {
        throw std::logic_error("rounded assignment does not match h");
      }
    }
  }
  if (!SatisfiesFairness(instance, fc, part)) {
    throw std::logic_error("fair partition violates its constraints");
  }
  result.feasible = true;
  result.part = std::move(part);
  for (size_t f = 0; f < result.part.clusters.size(); ++f) {
    const Cost c = SingleFacilityCost(instance, centers.members[f],
                                      result.part.clusters[f]);
    if (c > result.cost) result.cost = c;
  }
  return result;
}

}  // namespace ksupplier
