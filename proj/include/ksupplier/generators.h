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

// Seeded random instances with integer coordinates. Output depends only on
// the parameters: raw mt19937_64 words reduced by modulo, no std
// distributions.

#ifndef KSUPPLIER_GENERATORS_H_
#define KSUPPLIER_GENERATORS_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ksupplier/instance_io.h"
#include "ksupplier/solver.h"

namespace ksupplier {

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}
  uint64_t Next() { return engine_(); }
  // Uniform in [lo, hi].
  int Uniform(int lo, int hi);
  bool Coin() { return (Next() & 1) != 0; }
  template <class T>
  void Shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[Next() % i]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

enum class GeneratorKind { kUniformSquare, kPlanted, kAdversarialLine };

const char* GeneratorKindName(GeneratorKind kind);
// Throws std::invalid_argument for unknown names.
GeneratorKind ParseGeneratorKind(const std::string& name);

// Index order matches ConstraintSpec alternatives.
enum class ConstraintFamily {
  kUnconstrained,
  kRGather,
  kRCapacity,
  kBalanced,
  kChromatic,
  kFaultTolerant,
  kStronglyPrivate,
  kLDiversity,
  kFair,
};

const char* ConstraintFamilyName(ConstraintFamily family);
ConstraintFamily ParseConstraintFamily(const std::string& name);

struct GeneratorParams {
  GeneratorKind kind = GeneratorKind::kUniformSquare;
  int n = 8;  // clients
  // Separate location points; 0 makes L = C (k-center).
  int num_locations = 0;
  int k = 2;
  int m = 0;
  double z = 1.0;
  uint64_t seed = 1;
  ConstraintFamily family = ConstraintFamily::kUnconstrained;
};

// Points 0..n-1 are clients and n..n+|L|-1 locations. The objective is
// center when num_locations is 0 and supplier otherwise. Throws
// std::invalid_argument for nonpositive sizes, k > |L| or m > n.
InstanceDocument GenerateInstance(const GeneratorParams& params);

// Random payload for `family` over `clients` (point indices).
ConstraintSpec GenerateConstraint(ConstraintFamily family,
                                  const std::vector<int>& clients, int k, int m,
                                  Rng& rng);

}  // namespace ksupplier

#endif  // KSUPPLIER_GENERATORS_H_
