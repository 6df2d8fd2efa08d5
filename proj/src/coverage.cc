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

#include "ksupplier/coverage.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ksupplier {

CoverageInstance ReduceToCoverage(const MetricInstance& instance, Cost radius) {
  CoverageInstance cov;
  cov.universe_size = instance.num_clients();
  cov.k = instance.k();
  const auto clients = instance.clients();
  for (int f : instance.locations()) {
    std::vector<int> members;
    for (int j = 0; j < cov.universe_size; ++j) {
      if (instance.Distance(clients[j], f) <= radius.base) members.push_back(j);
    }
    cov.sets.push_back(std::move(members));
  }
  return cov;
}

GreedyCover GreedyPartialCover(const CoverageInstance& cov, int outlier_budget,
                               int cap) {
  if (cap < 1) throw std::invalid_argument("cover cap must be positive");
  std::vector<bool> covered(cov.universe_size, false);
  std::vector<bool> used(cov.sets.size(), false);
  int remaining = cov.universe_size;
  GreedyCover result;
  while (remaining > outlier_budget &&
         static_cast<int>(result.chosen.size()) < cap) {
    int best = -1;
    int best_gain = 0;
    for (size_t t = 0; t < cov.sets.size(); ++t) {
      if (used[t]) continue;
      int gain = 0;
      for (int e : cov.sets[t]) gain += covered[e] ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        best = static_cast<int>(t);
      }
    }
    if (best < 0) break;
    used[best] = true;
    for (int e : cov.sets[best]) covered[e] = true;
    remaining -= best_gain;
    result.chosen.push_back(best);
  }
  for (int e = 0; e < cov.universe_size; ++e) {
    if (!covered[e]) result.uncovered.push_back(e);
  }
  return result;
}

int CoverCap(int k, int n) {
  if (n < 1) throw std::invalid_argument("cover cap needs n >= 1");
  return static_cast<int>(std::ceil(k * (std::log(static_cast<double>(n)) + 1.0)));
}

BiCriteriaResult BiCriteria(const MetricInstance& instance) {
  const std::vector<Cost> radii = DistinctCosts(instance);
  const int cap = CoverCap(instance.k(), instance.num_clients());
  const int budget = instance.m();
  auto succeeds = [&](const GreedyCover& g) {
    return static_cast<int>(g.uncovered.size()) <= budget;
  };

  // Invariant: greedy succeeds at radii[hi]. At the largest radius every set
  // holds every client.
  size_t lo = 0;
  size_t hi = radii.size() - 1;
  GreedyCover best = GreedyPartialCover(ReduceToCoverage(instance, radii[hi]),
                                        budget, cap);
  if (!succeeds(best)) {
    throw std::logic_error("greedy cover failed at the largest radius");
  }
  while (lo < hi) {
    const size_t mid = lo + (hi - lo) / 2;
    GreedyCover g =
        GreedyPartialCover(ReduceToCoverage(instance, radii[mid]), budget, cap);
    if (succeeds(g)) {
      hi = mid;
      best = std::move(g);
    } else {
      lo = mid + 1;
    }
  }

  BiCriteriaResult result;
  result.radius = radii[hi];
  const auto locations = instance.locations();
  const auto clients = instance.clients();
  for (int t : best.chosen) result.opened.push_back(locations[t]);
  for (int e : best.uncovered) result.outliers.push_back(clients[e]);
  std::sort(result.outliers.begin(), result.outliers.end());
  return result;
}

}  // namespace ksupplier
