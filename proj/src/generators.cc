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

#include "ksupplier/generators.h"

#include <algorithm>
#include <stdexcept>

namespace ksupplier {
namespace {

constexpr const char* kKindNames[] = {"uniform_square", "planted",
                                      "adversarial_line"};
constexpr const char* kFamilyNames[] = {
    "unconstrained", "r_gather",         "r_capacity",  "balanced", "chromatic",
    "fault_tolerant", "strongly_private", "l_diversity", "fair"};

int CeilDiv(int a, int b) { return (a + b - 1) / b; }

// Splits `clients` into `parts` nonempty round-robin classes of a random
// permutation.
std::vector<std::vector<int>> RandomClasses(const std::vector<int>& clients,
                                            int parts, Rng& rng) {
  std::vector<int> order = clients;
  rng.Shuffle(order);
  std::vector<std::vector<int>> classes(parts);
  for (size_t p = 0; p < order.size(); ++p) {
    classes[p % parts].push_back(order[p]);
  }
  for (auto& c : classes) std::sort(c.begin(), c.end());
  return classes;
}

}  // namespace

int Rng::Uniform(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(Next() % span);
}

const char* GeneratorKindName(GeneratorKind kind) {
  return kKindNames[static_cast<int>(kind)];
}

GeneratorKind ParseGeneratorKind(const std::string& name) {
  for (int i = 0; i < 3; ++i) {
    if (name == kKindNames[i]) return static_cast<GeneratorKind>(i);
  }
  throw std::invalid_argument("unknown generator kind \"" + name + "\"");
}

const char* ConstraintFamilyName(ConstraintFamily family) {
  return kFamilyNames[static_cast<int>(family)];
}

ConstraintFamily ParseConstraintFamily(const std::string& name) {
  for (int i = 0; i < 9; ++i) {
    if (name == kFamilyNames[i]) return static_cast<ConstraintFamily>(i);
  }
  throw std::invalid_argument("unknown constraint family \"" + name + "\"");
}

ConstraintSpec GenerateConstraint(ConstraintFamily family,
                                  const std::vector<int>& clients, int k, int m,
                                  Rng& rng) {
  const int n = static_cast<int>(clients.size());
  switch (family) {
    case ConstraintFamily::kUnconstrained:
      return UnconstrainedSpec{};
    case ConstraintFamily::kRGather: {
      RGatherSpec s;
      for (int i = 0; i < k; ++i) s.lower.push_back(rng.Uniform(1, std::max(1, n / k)));
      return s;
    }
    case ConstraintFamily::kRCapacity: {
      RCapacitySpec s;
      const int least = CeilDiv(n - m, k);
      for (int i = 0; i < k; ++i) {
        s.upper.push_back(std::min(n, rng.Uniform(std::max(1, least), least + 2)));
      }
      return s;
    }
    case ConstraintFamily::kBalanced: {
      BalancedSpec s;
      for (int i = 0; i < k; ++i) {
        const int lo = rng.Uniform(1, std::max(1, n / k));
        s.lower.push_back(lo);
        s.upper.push_back(std::max(lo, CeilDiv(n, k)) + rng.Uniform(0, 1));
      }
      return s;
    }
    case ConstraintFamily::kChromatic: {
      // At most k clients per colour keeps the instance feasible.
      const int colors = CeilDiv(n, k) + rng.Uniform(0, 1);
      std::vector<int> order(n);
      for (int x = 0; x < n; ++x) order[x] = x;
      rng.Shuffle(order);
      ChromaticSpec s;
      s.colors.assign(n, 0);
      for (int p = 0; p < n; ++p) s.colors[order[p]] = p % colors;
      return s;
    }
    case ConstraintFamily::kFaultTolerant: {
      FaultTolerantSpec s;
      for (int x = 0; x < n; ++x) s.ell.push_back(rng.Uniform(1, k));
      return s;
    }
    case ConstraintFamily::kStronglyPrivate: {
      StronglyPrivateSpec s;
      s.classes = RandomClasses(clients, std::min(n, rng.Uniform(1, 2)), rng);
      for (const auto& c : s.classes) {
        const int most = std::min<int>(2, static_cast<int>(c.size()) / k);
        s.lower.push_back(rng.Uniform(0, most));
      }
      return s;
    }
    case ConstraintFamily::kLDiversity: {
      const int omega = std::min(n, rng.Uniform(2, 3));
      LDiversitySpec s;
      s.classes = RandomClasses(clients, omega, rng);
      const Rational choices[] = {{1, 1}, {3, 2}, {2, 1}};
      s.ell = choices[rng.Uniform(0, omega == 3 ? 2 : 1)];
      return s;
    }
    case ConstraintFamily::kFair: {
      // Classes are unions of at most three base groups, so at most three
      // membership signatures arise.
      const int base = std::min(n, rng.Uniform(1, 3));
      const auto groups = RandomClasses(clients, base, rng);
      const int omega = rng.Uniform(1, 3);
      FairSpec s;
      for (int j = 0; j < omega; ++j) {
        int mask = rng.Uniform(1, (1 << base) - 1);
        std::vector<int> members;
        for (int g = 0; g < base; ++g) {
          if (mask & (1 << g)) {
            members.insert(members.end(), groups[g].begin(), groups[g].end());
          }
        }
        std::sort(members.begin(), members.end());
        s.classes.push_back(std::move(members));
        const Rational alphas[] = {{1, 1}, {3, 4}, {2, 3}};
        const Rational betas[] = {{0, 1}, {1, 4}, {1, 3}};
        s.alpha.push_back(alphas[rng.Uniform(0, 2)]);
        s.beta.push_back(betas[rng.Uniform(0, 2)]);
      }
      return s;
    }
  }
  throw std::invalid_argument("unknown constraint family");
}

InstanceDocument GenerateInstance(const GeneratorParams& params) {
  const int n = params.n;
  const int num_locations = params.num_locations;
  const bool center = num_locations == 0;
  if (n <= 0 || params.k <= 0 || num_locations < 0) {
    throw std::invalid_argument("generator sizes must be positive");
  }
  if (params.k > (center ? n : num_locations)) {
    throw std::invalid_argument("k exceeds the number of locations");
  }
  if (params.m < 0 || params.m > n) {
    throw std::invalid_argument("m must lie in [0, n]");
  }
  if (!(params.z > 0.0)) throw std::invalid_argument("z must be positive");

  Rng rng(params.seed);
  InstanceDocument doc;
  doc.euclidean = true;
  const int k = params.k;
  auto point = [](int x, int y) {
    return std::vector<double>{static_cast<double>(x), static_cast<double>(y)};
  };
  switch (params.kind) {
    case GeneratorKind::kUniformSquare:
      for (int i = 0; i < n + num_locations; ++i) {
        doc.points.push_back(point(rng.Uniform(0, 100), rng.Uniform(0, 100)));
      }
      break;
    case GeneratorKind::kPlanted: {
      std::vector<std::pair<int, int>> hubs;
      for (int c = 0; c < k; ++c) {
        hubs.emplace_back(300 * c + rng.Uniform(0, 20),
                          300 * (c % 2) + rng.Uniform(0, 20));
      }
      for (int i = 0; i < n; ++i) {
        const auto& h = hubs[i % k];
        doc.points.push_back(point(h.first + rng.Uniform(-10, 10),
                                   h.second + rng.Uniform(-10, 10)));
      }
      for (int i = 0; i < num_locations; ++i) {
        const auto& h = hubs[i % k];
        doc.points.push_back(point(h.first + rng.Uniform(-30, 30),
                                   h.second + rng.Uniform(-30, 30)));
      }
      break;
    }
    case GeneratorKind::kAdversarialLine:
      // Even client positions and odd location positions on a short line
      // produce many equal distances.
      for (int i = 0; i < n; ++i) {
        doc.points.push_back(point(2 * rng.Uniform(0, n), 0));
      }
      for (int i = 0; i < num_locations; ++i) {
        doc.points.push_back(point(2 * rng.Uniform(0, n) + 1, 0));
      }
      break;
  }
  for (int i = 0; i < n; ++i) doc.clients.push_back(i);
  if (center) {
    doc.same_as_clients = true;
  } else {
    for (int i = 0; i < num_locations; ++i) doc.locations.push_back(n + i);
  }
  doc.k = k;
  doc.z = params.z;
  doc.m = params.m;
  doc.constraint = GenerateConstraint(params.family, doc.clients, k, params.m, rng);
  doc.objective = center ? Objective::kCenter : Objective::kSupplier;
  return doc;
}

}  // namespace ksupplier
