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

#include "ksupplier/solver.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "ksupplier/candidate_list.h"
#include "ksupplier/coverage.h"
#include "ksupplier/reductions.h"

namespace ksupplier {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

// Above this many k-multisets of L an empty candidate list is not
// cross-checked against the oracle.
constexpr uint64_t kInfeasibleCheckLimit = 20000;

using Clock = std::chrono::steady_clock;

void CheckPerCluster(const MetricInstance& instance, size_t size,
                     const char* what) {
  if (size != static_cast<size_t>(instance.k())) {
    throw std::invalid_argument(std::string(what) + " needs k entries");
  }
}

void CheckPerClient(const MetricInstance& instance, size_t size,
                    const char* what) {
  if (size != static_cast<size_t>(instance.num_clients())) {
    throw std::invalid_argument(std::string(what) + " needs one entry per client");
  }
}

void CheckClasses(const MetricInstance& instance,
                  const std::vector<std::vector<int>>& classes) {
  for (const auto& c : classes) {
    for (int x : c) {
      if (x < 0 || x >= instance.num_points() || !instance.IsClient(x)) {
        throw std::invalid_argument("class member is not a client");
      }
    }
  }
}

// Class index per client ordinal for a partition of the clients.
std::vector<int> ClassOfClients(const MetricInstance& instance,
                                const std::vector<std::vector<int>>& classes) {
  CheckClasses(instance, classes);
  std::vector<int> class_of(instance.num_clients(), -1);
  for (size_t j = 0; j < classes.size(); ++j) {
    for (int x : classes[j]) {
      int& slot = class_of[instance.ClientOrdinal(x)];
      if (slot != -1) throw std::invalid_argument("classes must be disjoint");
      slot = static_cast<int>(j);
    }
  }
  if (std::find(class_of.begin(), class_of.end(), -1) != class_of.end()) {
    throw std::invalid_argument("classes must cover every client");
  }
  return class_of;
}

struct Prepared {
  enum class Kind { kVoronoi, kHybrid, kFair };
  const MetricInstance* original = nullptr;
  Kind kind = Kind::kVoronoi;
  std::optional<FaultTolerantReduction> ft;
  HybridConstraints hc;
  FairConstraints fc;

  const MetricInstance& work() const { return ft ? ft->instance : *original; }
};

Prepared Prepare(const MetricInstance& instance, const ConstraintSpec& spec) {
  ValidateSpec(instance, spec);
  Prepared p;
  p.original = &instance;
  std::visit(
      Overloaded{
          [&](const UnconstrainedSpec&) { p.kind = Prepared::Kind::kVoronoi; },
          [&](const RGatherSpec& s) {
            p.kind = Prepared::Kind::kHybrid;
            p.hc = MakeRGather(instance, s.lower);
          },
          [&](const RCapacitySpec& s) {
            p.kind = Prepared::Kind::kHybrid;
            p.hc = MakeRCapacity(instance, s.upper);
          },
          [&](const BalancedSpec& s) {
            p.kind = Prepared::Kind::kHybrid;
            p.hc = MakeBalanced(instance, s.lower, s.upper);
          },
          [&](const ChromaticSpec& s) {
            p.kind = Prepared::Kind::kHybrid;
            p.hc = MakeChromatic(instance, s.colors);
          },
          [&](const FaultTolerantSpec& s) {
            p.kind = Prepared::Kind::kHybrid;
            p.ft = FaultTolerantReduce(instance, s.ell);
            p.hc = p.ft->constraints;
          },
          [&](const StronglyPrivateSpec& s) {
            p.kind = Prepared::Kind::kHybrid;
            p.hc = MakeStronglyPrivate(instance,
                                       ClassOfClients(instance, s.classes),
                                       s.lower);
          },
          [&](const LDiversitySpec& s) {
            p.kind = Prepared::Kind::kFair;
            p.fc = MakeLDiversity(s.classes, s.ell);
          },
          [&](const FairSpec& s) {
            p.kind = Prepared::Kind::kFair;
            p.fc = {s.classes, s.alpha, s.beta};
          },
      },
      spec);
  if (p.kind == Prepared::Kind::kHybrid) ValidateHybrid(p.work(), p.hc);
  if (p.kind == Prepared::Kind::kFair) ValidateFair(instance, p.fc);
  return p;
}

PartitionResult Evaluate(const Prepared& p, const CenterSet& centers,
                         std::optional<CostBound> bound) {
  switch (p.kind) {
    case Prepared::Kind::kVoronoi:
      return VoronoiPartition(p.work(), centers);
    case Prepared::Kind::kHybrid:
      if (p.ft) return FaultTolerantPartition(*p.ft, centers, bound);
      return HybridPartition(p.work(), centers, p.hc, bound);
    case Prepared::Kind::kFair:
      return FairPartition(p.work(), centers, p.fc, bound);
  }
  throw std::logic_error("unknown partition kind");
}

struct Best {
  bool found = false;
  uint64_t index = 0;
  CenterSet centers;
  PartitionResult result;
};

// Evaluates every multiset from `it` and keeps the minimum by (cost, index).
Best Search(const Prepared& p, MultisetEnumerator& it,
            const SolveOptions& options, SolveStats* stats) {
  const auto start = Clock::now();
  const bool limited = options.timeout > 0.0;
  const auto deadline =
      start + std::chrono::duration_cast<Clock::duration>(
                  std::chrono::duration<double>(limited ? options.timeout : 0.0));

  std::mutex mu;
  Best best;
  uint64_t next_index = 0;
  bool stop = false;
  bool timed_out = false;
  std::exception_ptr error;

  auto worker = [&]() {
    while (true) {
      CenterSet centers;
      uint64_t index = 0;
      std::optional<CostBound> bound;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (stop) return;
        if (limited && Clock::now() > deadline) {
          timed_out = true;
          stop = true;
          return;
        }
        if (!it.Next(&centers)) {
          stop = true;
          return;
        }
        index = next_index++;
        if (best.found) bound = CostBound{best.result.cost, best.index > index};
      }
      PartitionResult r;
      try {
        r = Evaluate(p, centers, bound);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
        stop = true;
        return;
      }
      std::lock_guard<std::mutex> lock(mu);
      ++stats->candidates;
      stats->guesses += r.stats.guesses;
      stats->networks += r.stats.networks;
      if (!r.feasible) continue;
      const bool better =
          !best.found || r.cost < best.result.cost ||
          (r.cost == best.result.cost && index < best.index);
      if (better) {
        best.found = true;
        best.index = index;
        best.centers = std::move(centers);
        best.result = std::move(r);
        // Nothing handed out later can beat cost zero.
        if (best.result.cost.base == 0.0) stop = true;
      }
    }
  };

  const int workers = std::max(1, options.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  stats->wall_ms +=
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (error) std::rethrow_exception(error);
  if (timed_out) throw TimeoutError("time limit reached before the search finished");
  return best;
}

Solution Assemble(const Prepared& p, Objective objective, const Best& best,
                  const SolveStats& stats) {
  Solution s;
  s.objective = objective;
  s.stats = stats;
  if (!best.found) return s;
  s.feasible = true;
  s.centers = best.centers;
  s.facilities = best.result.guess;
  s.cost = best.result.cost;
  if (p.ft) {
    s.part = CollapseCopies(*p.ft, best.result.part);
    for (int copy : best.result.part.Outliers(p.ft->instance)) {
      s.outliers.push_back(p.ft->origin[copy]);
    }
    std::sort(s.outliers.begin(), s.outliers.end());
    s.outliers.erase(std::unique(s.outliers.begin(), s.outliers.end()),
                     s.outliers.end());
  } else {
    s.part = best.result.part;
    s.outliers = s.part.Outliers(*p.original);
  }
  return s;
}

void CheckObjective(const MetricInstance& instance, Objective objective) {
  if (objective == Objective::kCenter && !instance.LocationsEqualClients()) {
    throw std::invalid_argument("the k-center objective requires L = C");
  }
}

Solution OracleFromPrepared(const Prepared& p, Objective objective,
                            const SolveOptions& options, uint64_t cap) {
  const MetricInstance& instance = *p.original;
  const uint64_t count = MultisetCount(instance.num_locations(), instance.k());
  if (count > cap) throw EnumerationCapExceeded(count, cap);
  MultisetEnumerator it(
      std::vector<int>(instance.locations().begin(), instance.locations().end()),
      instance.k());
  SolveStats stats;
  stats.list_size = count;
  const Best best = Search(p, it, options, &stats);
  return Assemble(p, objective, best, stats);
}

}  // namespace

std::string ConstraintName(const ConstraintSpec& spec) {
  static const char* const kNames[] = {
      "unconstrained",  "r_gather",         "r_capacity",
      "balanced",       "chromatic",        "fault_tolerant",
      "strongly_private", "l_diversity",    "fair"};
  return kNames[spec.index()];
}

void ValidateSpec(const MetricInstance& instance, const ConstraintSpec& spec) {
  std::visit(
      Overloaded{
          [&](const UnconstrainedSpec&) {},
          [&](const RGatherSpec& s) {
            CheckPerCluster(instance, s.lower.size(), "r-gather lower bounds");
          },
          [&](const RCapacitySpec& s) {
            CheckPerCluster(instance, s.upper.size(), "r-capacity upper bounds");
          },
          [&](const BalancedSpec& s) {
            CheckPerCluster(instance, s.lower.size(), "balanced lower bounds");
            CheckPerCluster(instance, s.upper.size(), "balanced upper bounds");
          },
          [&](const ChromaticSpec& s) {
            CheckPerClient(instance, s.colors.size(), "chromatic colours");
            for (int c : s.colors) {
              if (c < 0) throw std::invalid_argument("colours must be >= 0");
            }
          },
          [&](const FaultTolerantSpec& s) {
            CheckPerClient(instance, s.ell.size(), "fault tolerance");
          },
          [&](const StronglyPrivateSpec& s) {
            if (s.lower.size() != s.classes.size()) {
              throw std::invalid_argument(
                  "strongly private needs one lower bound per class");
            }
            ClassOfClients(instance, s.classes);
          },
          [&](const LDiversitySpec& s) { CheckClasses(instance, s.classes); },
          [&](const FairSpec& s) {
            ValidateFair(instance, {s.classes, s.alpha, s.beta});
          },
      },
      spec);
}

EnumerationCapExceeded::EnumerationCapExceeded(uint64_t estimate, uint64_t cap)
    : std::runtime_error("oracle would enumerate " + std::to_string(estimate) +
                         " center sets, above the cap of " +
                         std::to_string(cap)),
      estimate_(estimate),
      cap_(cap) {}

uint64_t OracleEnumerationCap() {
  constexpr uint64_t kDefault = 1000000;
  const char* env = std::getenv("CLUSTERING_ENUM_CAP");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) return kDefault;
  return v;
}

Solution Solve(const MetricInstance& instance, const ConstraintSpec& spec,
               Objective objective, const SolveOptions& options) {
  CheckObjective(instance, objective);
  const Prepared p = Prepare(instance, spec);
  const auto start = Clock::now();

  BiCriteriaResult bc = BiCriteria(p.work());
  if (p.ft) {
    for (int& x : bc.outliers) x = p.ft->origin[x];
    std::sort(bc.outliers.begin(), bc.outliers.end());
    bc.outliers.erase(std::unique(bc.outliers.begin(), bc.outliers.end()),
                      bc.outliers.end());
  }
  const CandidatePool pool = BuildPool(instance, bc, objective);
  MultisetEnumerator it(pool.members, instance.k());

  SolveStats stats;
  stats.list_size = it.Count();
  SolveOptions remaining = options;
  if (options.timeout > 0.0) {
    remaining.timeout -=
        std::chrono::duration<double>(Clock::now() - start).count();
    if (remaining.timeout <= 0.0) {
      throw TimeoutError("time limit reached before the search started");
    }
  }
  const Best best = Search(p, it, remaining, &stats);
  stats.wall_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (!best.found &&
      MultisetCount(instance.num_locations(), instance.k()) <=
          kInfeasibleCheckLimit) {
    const Solution exact =
        OracleFromPrepared(p, objective, SolveOptions{}, kInfeasibleCheckLimit);
    if (exact.feasible) {
      throw std::logic_error(
          "no candidate is feasible but the instance has a feasible solution");
    }
  }
  return Assemble(p, objective, best, stats);
}

Solution OracleSolve(const MetricInstance& instance, const ConstraintSpec& spec,
                     Objective objective, const SolveOptions& options,
                     uint64_t cap) {
  CheckObjective(instance, objective);
  const Prepared p = Prepare(instance, spec);
  return OracleFromPrepared(p, objective, options,
                            cap == 0 ? OracleEnumerationCap() : cap);
}

double ApproximationBound(Objective objective, double z) {
  return std::pow(objective == Objective::kCenter ? 2.0 : 3.0, z);
}

RatioReport CompareToOracle(Solution solve, Solution oracle, double z) {
  RatioReport r;
  r.bound = ApproximationBound(solve.objective, z);
  if (!oracle.feasible) {
    r.pass = !solve.feasible;
  } else if (!solve.feasible) {
    r.ratio = std::numeric_limits<double>::infinity();
  } else {
    if (oracle.cost.value == 0.0) {
      r.ratio = solve.cost.value == 0.0
                    ? 1.0
                    : std::numeric_limits<double>::infinity();
    } else {
      r.ratio = solve.cost.value / oracle.cost.value;
    }
    r.pass = r.ratio <= r.bound * (1.0 + 1e-9) &&
             solve.cost.base >= oracle.cost.base;
  }
  r.solve = std::move(solve);
  r.oracle = std::move(oracle);
  return r;
}

RatioReport MakeRatioReport(const MetricInstance& instance,
                            const ConstraintSpec& spec, Objective objective,
                            const SolveOptions& options) {
  Solution s = Solve(instance, spec, objective, options);
  Solution o = OracleSolve(instance, spec, objective, options);
  return CompareToOracle(std::move(s), std::move(o), instance.z());
}

}  // namespace ksupplier
