// Copyright 2026 The crescent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Scenario files (JSON, schema version 1; // comments allowed on input).

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "crescent/scenario.hpp"

namespace crescent::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Normalized scenario file. Bodies, domains and commands are kept as
/// validated JSON so that serialization reproduces them exactly.
struct ScenarioFile {
  int schema_version = kSchemaVersion;
  std::string name;
  std::optional<std::string> fixture;
  int dim = 0;
  json domain;  // null when the fixture supplies it
  std::vector<Mat> generators;
  std::vector<json> candidates;
  std::vector<json> commands;
};

ScenarioFile parse_scenario(const std::string& text);
ScenarioFile read_scenario(const std::string& path);
json to_json(const ScenarioFile& f);
std::string serialize(const ScenarioFile& f);

/// Scenario described by the file. Fixture generators are replaced when the
/// file lists its own; fixture candidates are used when it lists none.
Scenario build(const ScenarioFile& f);

/// File describing a built-in fixture (domain and generators expanded).
ScenarioFile describe(const Scenario& s);

json point_json(const SpherePoint& p);
json points_json(const std::vector<SpherePoint>& ps);
json vec_json(const Vec& v);
json mat_json(const Mat& m);  // row-major

Domain domain_from_json(const json& j, int n);
json domain_to_json(const Domain& d);
ConvexBody body_from_json(const json& j, int n);
json body_to_json(const ConvexBody& b);

}  // namespace crescent::io
