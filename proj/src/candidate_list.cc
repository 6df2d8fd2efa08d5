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

#include "ksupplier/candidate_list.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ksupplier {

int NearestLocation(const MetricInstance& instance, int client) {
  int best = -1;
  for (int f : instance.locations()) {
    if (best < 0) {
      best = f;
      continue;
    }
    const double d = instance.Distance(client, f);
    const double b = instance.Distance(client, best);
    if (d < b || (d == b && f < best)) best = f;
  }
  return best;
}

CandidatePool BuildPool(const MetricInstance& instance,
                        const BiCriteriaResult& bicriteria,
                        Objective objective) {
  if (objective == Objective::kCenter && !instance.LocationsEqualClients()) {
    throw std::invalid_argument("center objective requires L = C");
  }
  CandidatePool pool;
  auto add = [&pool](int f, PoolSource source) {
    if (std::find(pool.members.begin(), pool.members.end(), f) !=
        pool.members.end()) {
      return;
    }
    pool.members.push_back(f);
    pool.provenance.push_back(source);
  };
  for (int f : bicriteria.opened) add(f, PoolSource::kBiCriteria);
  for (int x : bicriteria.outliers) {
    if (objective == Objective::kCenter) {
      add(x, PoolSource::kOutlierItself);
    } else {
      add(NearestLocation(instance, x), PoolSource::kOutlierProjection);
    }
  }
  return pool;
}

uint64_t MultisetCount(int pool_size, int k) {
  if (k == 0) return 1;
  if (pool_size <= 0) return 0;
  // C(n, r) with n = pool_size + k - 1, r = min(k, pool_size - 1).
  const uint64_t n = static_cast<uint64_t>(pool_size) + k - 1;
  const uint64_t r = std::min<uint64_t>(k, pool_size - 1);
  unsigned __int128 acc = 1;
  for (uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > std::numeric_limits<uint64_t>::max()) {
      return std::numeric_limits<uint64_t>::max();
    }
  }
  return static_cast<uint64_t>(acc);
}

MultisetEnumerator::MultisetEnumerator(std::vector<int> pool, int k)
    : pool_(std::move(pool)), k_(k) {
  if (pool_.empty()) throw std::invalid_argument("candidate pool is empty");
  if (k_ < 1) throw std::invalid_argument("k must be positive");
}

void MultisetEnumerator::Reset() {
  started_ = false;
  done_ = false;
  positions_.clear();
}

bool MultisetEnumerator::Next(CenterSet* out) {
  if (done_) return false;
  const int p = static_cast<int>(pool_.size());
  if (!started_) {
    positions_.assign(k_, 0);
    started_ = true;
  } else {
    // Advance the nondecreasing position tuple.
    int t = k_ - 1;
    while (t >= 0 && positions_[t] == p - 1) --t;
    if (t < 0) {
      done_ = true;
      return false;
    }
    const int v = positions_[t] + 1;
    for (int s = t; s < k_; ++s) positions_[s] = v;
  }
  out->members.resize(k_);
  for (int s = 0; s < k_; ++s) out->members[s] = pool_[positions_[s]];
  return true;
}

CandidateList EnumerateList(const CandidatePool& pool, int k) {
  MultisetEnumerator it(pool.members, k);
  CandidateList list;
  CenterSet set;
  while (it.Next(&set)) list.sets.push_back(set);
  return list;
}

}  // namespace ksupplier
