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

// JSON instance and solution documents.
//
// Instance:
//   {"points": {"euclidean": [[x, y], ...]} | {"matrix": [[...], ...]},
//    "clients": [...], "locations": [...] | "same_as_clients": true,
//    "k": 2, "z": 1, "m": 0,
//    "constraint": {"type": "r_gather", "lower": [2, 2]},
//    "objective": "supplier"}
//
// Fractions (l_diversity "ell", fair "alpha"/"beta") are numbers or "p/q"
// strings.

#ifndef KSUPPLIER_INSTANCE_IO_H_
#define KSUPPLIER_INSTANCE_IO_H_

#include <optional>
#include <string>
#include <vector>

#include "ksupplier/metric.h"
#include "ksupplier/solver.h"

namespace ksupplier {

struct InstanceDocument {
  bool euclidean = true;
  // Coordinates per point, or the distance matrix.
  std::vector<std::vector<double>> points;
  std::vector<int> clients;
  // Empty when same_as_clients is set.
  std::vector<int> locations;
  bool same_as_clients = false;
  int k = 1;
  double z = 1.0;
  std::optional<int> m;
  ConstraintSpec constraint;
  std::optional<Objective> objective;

  friend bool operator==(const InstanceDocument&,
                         const InstanceDocument&) = default;
};

// Throws std::invalid_argument on malformed JSON or schema errors.
InstanceDocument ParseInstanceDocument(const std::string& text);
std::string EmitInstanceDocument(const InstanceDocument& doc);

// Builds the metric instance. Matrix documents must pass VerifyMetric; the
// first violation is reported in the exception message.
MetricInstance ToInstance(const InstanceDocument& doc);

Objective ParseObjective(const std::string& name);

struct CenterMultiplicity {
  int location = 0;
  int multiplicity = 0;
  friend bool operator==(const CenterMultiplicity&,
                         const CenterMultiplicity&) = default;
};

struct SolutionDocument {
  bool feasible = false;
  Objective objective = Objective::kSupplier;
  double cost = 0.0;
  double cost_base = 0.0;
  // Distinct centre locations in first-appearance order.
  std::vector<CenterMultiplicity> centers;
  std::vector<int> facilities;
  std::vector<std::vector<int>> clusters;
  std::vector<int> outliers;
  uint64_t list_size = 0;
  int64_t candidates = 0;
  int64_t guesses = 0;
  int64_t networks = 0;
  std::optional<double> wall_ms;
  double bound = 1.0;

  friend bool operator==(const SolutionDocument&,
                         const SolutionDocument&) = default;
};

// Wall time is copied only when `timing` is set.
SolutionDocument ToSolutionDocument(const Solution& solution, double bound,
                                    bool timing);
std::string EmitSolutionDocument(const SolutionDocument& doc);
SolutionDocument ParseSolutionDocument(const std::string& text);

}  // namespace ksupplier

#endif  // KSUPPLIER_INSTANCE_IO_H_
