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

// Command dispatch: each command turns a scenario into a JSON report.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scenario_io.hpp"

namespace crescent::io {

struct RunOptions {
  std::uint64_t seed = 0;
  int budget = 10000;
  double tol = 1e-6;
};

const std::vector<std::string>& command_names();

/// Report for one command. `args` holds per-command arguments (a batch entry
/// from the scenario file, or an empty object). Throws UsageError for an
/// unknown command and GeometryError if a non-finite number reaches the
/// report.
json run_command(const Scenario& s, const std::string& command, const json& args,
                 const RunOptions& options);

/// Fixture names with provenance, in stable order.
json fixtures_report();

/// Throws GeometryError when the document holds NaN or infinity.
void check_finite(const json& j);

}  // namespace crescent::io
