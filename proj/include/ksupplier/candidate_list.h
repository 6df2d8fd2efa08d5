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

// Candidate centre sets for the list outlier k-supplier / k-center problem.
//
// The pool is the bi-criteria solution S plus, for every outlier x, either the
// location nearest to x (supplier) or x itself (center). Every k-multiset of
// the pool is a candidate; for any partitioning O of at least |C| - m clients
// one of them is within 3^z (supplier) or 2^z (center) of Psi*(O).

#ifndef KSUPPLIER_CANDIDATE_LIST_H_
#define KSUPPLIER_CANDIDATE_LIST_H_

#include <cstdint>
#include <vector>

#include "ksupplier/coverage.h"
#include "ksupplier/metric.h"

namespace ksupplier {

enum class PoolSource { kBiCriteria, kOutlierProjection, kOutlierItself };

struct CandidatePool {
  std::vector<int> members;
  std::vector<PoolSource> provenance;
};

struct CandidateList {
  std::vector<CenterSet> sets;
};

// Location closest to `client`, lowest point index on ties.
int NearestLocation(const MetricInstance& instance, int client);

// Deduplicated S followed by the outlier-derived members, in outlier order.
// Throws std::invalid_argument for the center objective when L != C.
CandidatePool BuildPool(const MetricInstance& instance,
                        const BiCriteriaResult& bicriteria,
                        Objective objective);

// C(pool_size + k - 1, k), saturating at UINT64_MAX.
uint64_t MultisetCount(int pool_size, int k);

// Restartable lexicographic enumeration of the k-multisets of a pool. Members
// of each produced set are in pool order.
class MultisetEnumerator {
 public:
  MultisetEnumerator(std::vector<int> pool, int k);

  // Writes the next multiset and returns true, or returns false when done.
  bool Next(CenterSet* out);
  void Reset();
  uint64_t Count() const { return MultisetCount(static_cast<int>(pool_.size()), k_); }

 private:
  std::vector<int> pool_;
  int k_;
  std::vector<int> positions_;
  bool started_ = false;
  bool done_ = false;
};

// Materializes every k-multiset. Throws std::invalid_argument for an empty
// pool.
CandidateList EnumerateList(const CandidatePool& pool, int k);

}  // namespace ksupplier

#endif  // KSUPPLIER_CANDIDATE_LIST_H_
