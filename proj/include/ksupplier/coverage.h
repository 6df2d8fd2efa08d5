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

// (1, O(ln n)) bi-criteria approximation for outlier k-supplier, by reduction
// to max k-coverage at a guessed radius and the partial-cover greedy.

#ifndef KSUPPLIER_COVERAGE_H_
#define KSUPPLIER_COVERAGE_H_

#include <vector>

#include "ksupplier/metric.h"

namespace ksupplier {

// Elements are client ordinals; set t belongs to locations()[t].
struct CoverageInstance {
  int universe_size = 0;
  std::vector<std::vector<int>> sets;
  int k = 1;
};

struct GreedyCover {
  // Set indices in the order greedy picked them.
  std::vector<int> chosen;
  // Elements still uncovered, ascending.
  std::vector<int> uncovered;
};

struct BiCriteriaResult {
  // Opened facilities (point indices), in greedy pick order.
  std::vector<int> opened;
  // Uncovered clients (point indices), ascending.
  std::vector<int> outliers;
  // Radius at which greedy first succeeded.
  Cost radius;
};

// S_f = { clients j : d(j, f) <= radius.base }.
CoverageInstance ReduceToCoverage(const MetricInstance& instance, Cost radius);

// Picks the set with the largest marginal gain (lowest index on ties) until at
// most `outlier_budget` elements remain uncovered, `cap` sets are chosen, or
// no set adds anything.
GreedyCover GreedyPartialCover(const CoverageInstance& cov, int outlier_budget,
                               int cap);

// ceil(k * (ln n + 1)).
int CoverCap(int k, int n);

// Binary search over DistinctCosts for the smallest radius at which greedy
// leaves at most m clients uncovered using CoverCap(k, |C|) sets. The radius
// never exceeds the optimal outlier k-supplier cost.
BiCriteriaResult BiCriteria(const MetricInstance& instance);

}  // namespace ksupplier

#endif  // KSUPPLIER_COVERAGE_H_
