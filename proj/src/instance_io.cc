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

#include "ksupplier/instance_io.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace ksupplier {
namespace {

using Json = nlohmann::ordered_json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

[[noreturn]] void Fail(const std::string& what) {
  throw std::invalid_argument(what);
}

const Json& Need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    Fail(std::string("missing key \"") + key + "\"");
  }
  return j.at(key);
}

int64_t AsInt(const Json& j, const char* what) {
  if (j.is_number_integer()) return j.get<int64_t>();
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 9e15) {
      return static_cast<int64_t>(v);
    }
  }
  Fail(std::string(what) + " must be an integer");
}

double AsDouble(const Json& j, const char* what) {
  if (!j.is_number()) Fail(std::string(what) + " must be a number");
  return j.get<double>();
}

std::vector<int> AsIntList(const Json& j, const char* what) {
  if (!j.is_array()) Fail(std::string(what) + " must be a list");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(static_cast<int>(AsInt(v, what)));
  return out;
}

std::vector<std::vector<int>> AsIntLists(const Json& j, const char* what) {
  if (!j.is_array()) Fail(std::string(what) + " must be a list of lists");
  std::vector<std::vector<int>> out;
  for (const auto& v : j) out.push_back(AsIntList(v, what));
  return out;
}

std::vector<std::vector<double>> AsRows(const Json& j, const char* what) {
  if (!j.is_array()) Fail(std::string(what) + " must be a list of lists");
  std::vector<std::vector<double>> out;
  for (const auto& row : j) {
    if (!row.is_array()) Fail(std::string(what) + " must be a list of lists");
    std::vector<double> r;
    for (const auto& v : row) r.push_back(AsDouble(v, what));
    out.push_back(std::move(r));
  }
  return out;
}

Rational AsRational(const Json& j, const char* what) {
  if (j.is_number_integer()) return Rational::Of(j.get<int64_t>(), 1);
  if (j.is_number_float()) return Rational::FromDouble(j.get<double>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const size_t slash = s.find('/');
    try {
      size_t used = 0;
      if (slash == std::string::npos) {
        const int64_t num = std::stoll(s, &used);
        if (used == s.size()) return Rational::Of(num, 1);
      } else {
        const std::string a = s.substr(0, slash);
        const std::string b = s.substr(slash + 1);
        size_t used_b = 0;
        const int64_t num = std::stoll(a, &used);
        const int64_t den = std::stoll(b, &used_b);
        if (used == a.size() && used_b == b.size()) return Rational::Of(num, den);
      }
    } catch (const std::logic_error&) {
    }
  }
  Fail(std::string(what) + " must be a number or a \"p/q\" string");
}

std::vector<Rational> AsRationals(const Json& j, const char* what) {
  if (!j.is_array()) Fail(std::string(what) + " must be a list");
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(AsRational(v, what));
  return out;
}

Json RationalsJson(const std::vector<Rational>& rs) {
  Json out = Json::array();
  for (const auto& r : rs) out.push_back(r.ToString());
  return out;
}

ConstraintSpec ParseConstraint(const Json& j) {
  if (!j.is_object()) Fail("constraint must be an object");
  const Json& type = Need(j, "type");
  if (!type.is_string()) Fail("constraint type must be a string");
  const std::string t = type.get<std::string>();
  if (t == "unconstrained") return UnconstrainedSpec{};
  if (t == "r_gather") return RGatherSpec{AsIntList(Need(j, "lower"), "lower")};
  if (t == "r_capacity") {
    return RCapacitySpec{AsIntList(Need(j, "upper"), "upper")};
  }
  if (t == "balanced") {
    return BalancedSpec{AsIntList(Need(j, "lower"), "lower"),
                        AsIntList(Need(j, "upper"), "upper")};
  }
  if (t == "chromatic") {
    return ChromaticSpec{AsIntList(Need(j, "colors"), "colors")};
  }
  if (t == "fault_tolerant") {
    return FaultTolerantSpec{AsIntList(Need(j, "ell"), "ell")};
  }
  if (t == "strongly_private") {
    return StronglyPrivateSpec{AsIntLists(Need(j, "classes"), "classes"),
                               AsIntList(Need(j, "lower"), "lower")};
  }
  if (t == "l_diversity") {
    return LDiversitySpec{AsIntLists(Need(j, "classes"), "classes"),
                          AsRational(Need(j, "ell"), "ell")};
  }
  if (t == "fair") {
    return FairSpec{AsIntLists(Need(j, "classes"), "classes"),
                    AsRationals(Need(j, "alpha"), "alpha"),
                    AsRationals(Need(j, "beta"), "beta")};
  }
  Fail("unknown constraint type \"" + t + "\"");
}

Json ConstraintJson(const ConstraintSpec& spec) {
  Json j;
  j["type"] = ConstraintName(spec);
  std::visit(Overloaded{
                 [&](const UnconstrainedSpec&) {},
                 [&](const RGatherSpec& s) { j["lower"] = s.lower; },
                 [&](const RCapacitySpec& s) { j["upper"] = s.upper; },
                 [&](const BalancedSpec& s) {
                   j["lower"] = s.lower;
                   j["upper"] = s.upper;
                 },
                 [&](const ChromaticSpec& s) { j["colors"] = s.colors; },
                 [&](const FaultTolerantSpec& s) { j["ell"] = s.ell; },
                 [&](const StronglyPrivateSpec& s) {
                   j["classes"] = s.classes;
                   j["lower"] = s.lower;
                 },
                 [&](const LDiversitySpec& s) {
                   j["classes"] = s.classes;
                   j["ell"] = s.ell.ToString();
                 },
                 [&](const FairSpec& s) {
                   j["classes"] = s.classes;
                   j["alpha"] = RationalsJson(s.alpha);
                   j["beta"] = RationalsJson(s.beta);
                 },
             },
             spec);
  return j;
}

Json ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    Fail(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Objective ParseObjective(const std::string& name) {
  if (name == "supplier") return Objective::kSupplier;
  if (name == "center") return Objective::kCenter;
  Fail("objective must be \"supplier\" or \"center\"");
}

InstanceDocument ParseInstanceDocument(const std::string& text) {
  const Json j = ParseJson(text);
  if (!j.is_object()) Fail("instance document must be a JSON object");
  InstanceDocument doc;
  const Json& points = Need(j, "points");
  if (points.is_object() && points.contains("euclidean")) {
    doc.euclidean = true;
    doc.points = AsRows(points.at("euclidean"), "euclidean");
  } else if (points.is_object() && points.contains("matrix")) {
    doc.euclidean = false;
    doc.points = AsRows(points.at("matrix"), "matrix");
  } else {
    Fail("points must hold \"euclidean\" or \"matrix\"");
  }
  doc.clients = AsIntList(Need(j, "clients"), "clients");
  if (j.contains("same_as_clients")) {
    if (!j.at("same_as_clients").is_boolean()) {
      Fail("same_as_clients must be a boolean");
    }
    doc.same_as_clients = j.at("same_as_clients").get<bool>();
  }
  if (j.contains("locations")) {
    if (doc.same_as_clients) Fail("give either locations or same_as_clients");
    doc.locations = AsIntList(j.at("locations"), "locations");
  } else if (!doc.same_as_clients) {
    Fail("missing key \"locations\"");
  }
  doc.k = static_cast<int>(AsInt(Need(j, "k"), "k"));
  doc.z = AsDouble(Need(j, "z"), "z");
  if (j.contains("m")) doc.m = static_cast<int>(AsInt(j.at("m"), "m"));
  doc.constraint = j.contains("constraint") ? ParseConstraint(j.at("constraint"))
                                            : ConstraintSpec{UnconstrainedSpec{}};
  if (j.contains("objective")) {
    if (!j.at("objective").is_string()) Fail("objective must be a string");
    doc.objective = ParseObjective(j.at("objective").get<std::string>());
  }
  return doc;
}

std::string EmitInstanceDocument(const InstanceDocument& doc) {
  Json j;
  j["points"][doc.euclidean ? "euclidean" : "matrix"] = doc.points;
  j["clients"] = doc.clients;
  if (doc.same_as_clients) {
    j["same_as_clients"] = true;
  } else {
    j["locations"] = doc.locations;
  }
  j["k"] = doc.k;
  j["z"] = doc.z;
  if (doc.m) j["m"] = *doc.m;
  j["constraint"] = ConstraintJson(doc.constraint);
  if (doc.objective) j["objective"] = ObjectiveName(*doc.objective);
  return j.dump() + "\n";
}

MetricInstance ToInstance(const InstanceDocument& doc) {
  const int n = static_cast<int>(doc.points.size());
  auto check_ids = [n](const std::vector<int>& ids, const char* what) {
    for (int id : ids) {
      if (id < 0 || id >= n) {
        Fail(std::string(what) + " index " + std::to_string(id) +
             " is out of range");
      }
    }
  };
  check_ids(doc.clients, "client");
  check_ids(doc.locations, "location");
  std::vector<int> locations = doc.same_as_clients ? doc.clients : doc.locations;
  const int m = doc.m.value_or(0);
  if (doc.euclidean) {
    if (!doc.points.empty()) {
      for (const auto& p : doc.points) {
        if (p.size() != doc.points[0].size()) {
          Fail("euclidean points must share one dimension");
        }
      }
    }
    return MetricInstance::FromEuclidean(doc.points, doc.clients,
                                         std::move(locations), doc.k, doc.z, m);
  }
  for (const auto& row : doc.points) {
    if (row.size() != doc.points.size()) Fail("distance matrix must be square");
  }
  MetricInstance instance(doc.points, doc.clients, std::move(locations), doc.k,
                          doc.z, m);
  const auto violations = VerifyMetric(instance);
  if (!violations.empty()) {
    Fail("distance matrix is not a metric: " + violations.front().ToString());
  }
  return instance;
}

SolutionDocument ToSolutionDocument(const Solution& solution, double bound,
                                    bool timing) {
  SolutionDocument doc;
  doc.feasible = solution.feasible;
  doc.objective = solution.objective;
  doc.list_size = solution.stats.list_size;
  doc.candidates = solution.stats.candidates;
  doc.guesses = solution.stats.guesses;
  doc.networks = solution.stats.networks;
  if (timing) doc.wall_ms = solution.stats.wall_ms;
  doc.bound = bound;
  if (!solution.feasible) return doc;
  doc.cost = solution.cost.value;
  doc.cost_base = solution.cost.base;
  for (int f : solution.centers.members) {
    auto it = std::find_if(doc.centers.begin(), doc.centers.end(),
                           [f](const CenterMultiplicity& c) {
                             return c.location == f;
                           });
    if (it == doc.centers.end()) {
      doc.centers.push_back({f, 1});
    } else {
      ++it->multiplicity;
    }
  }
  doc.facilities = solution.facilities;
  doc.clusters = solution.part.clusters;
  doc.outliers = solution.outliers;
  return doc;
}

std::string EmitSolutionDocument(const SolutionDocument& doc) {
  Json j;
  j["feasible"] = doc.feasible;
  j["objective"] = ObjectiveName(doc.objective);
  if (doc.feasible) {
    j["cost"] = doc.cost;
    j["cost_base"] = doc.cost_base;
    Json centers = Json::array();
    for (const auto& c : doc.centers) {
      centers.push_back({{"location", c.location},
                         {"multiplicity", c.multiplicity}});
    }
    j["centers"] = centers;
    j["facilities"] = doc.facilities;
    j["clusters"] = doc.clusters;
    j["outliers"] = doc.outliers;
  }
  Json stats;
  stats["list_size"] = doc.list_size;
  stats["candidates"] = doc.candidates;
  stats["guesses"] = doc.guesses;
  stats["networks"] = doc.networks;
  if (doc.wall_ms) stats["wall_ms"] = *doc.wall_ms;
  j["stats"] = stats;
  j["bound"] = doc.bound;
  return j.dump() + "\n";
}

SolutionDocument ParseSolutionDocument(const std::string& text) {
  const Json j = ParseJson(text);
  if (!j.is_object()) Fail("solution document must be a JSON object");
  SolutionDocument doc;
  const Json& feasible = Need(j, "feasible");
  if (!feasible.is_boolean()) Fail("feasible must be a boolean");
  doc.feasible = feasible.get<bool>();
  const Json& objective = Need(j, "objective");
  if (!objective.is_string()) Fail("objective must be a string");
  doc.objective = ParseObjective(objective.get<std::string>());
  if (doc.feasible) {
    doc.cost = AsDouble(Need(j, "cost"), "cost");
    doc.cost_base = AsDouble(Need(j, "cost_base"), "cost_base");
    const Json& centers = Need(j, "centers");
    if (!centers.is_array()) Fail("centers must be a list");
    for (const auto& c : centers) {
      doc.centers.push_back(
          {static_cast<int>(AsInt(Need(c, "location"), "location")),
           static_cast<int>(AsInt(Need(c, "multiplicity"), "multiplicity"))});
    }
    doc.facilities = AsIntList(Need(j, "facilities"), "facilities");
    doc.clusters = AsIntLists(Need(j, "clusters"), "clusters");
    doc.outliers = AsIntList(Need(j, "outliers"), "outliers");
  }
  const Json& stats = Need(j, "stats");
  doc.list_size = static_cast<uint64_t>(AsInt(Need(stats, "list_size"), "list_size"));
  doc.candidates = AsInt(Need(stats, "candidates"), "candidates");
  doc.guesses = AsInt(Need(stats, "guesses"), "guesses");
  doc.networks = AsInt(Need(stats, "networks"), "networks");
  if (stats.contains("wall_ms")) {
    doc.wall_ms = AsDouble(stats.at("wall_ms"), "wall_ms");
  }
  doc.bound = AsDouble(Need(j, "bound"), "bound");
  return doc;
}

}  // namespace ksupplier
