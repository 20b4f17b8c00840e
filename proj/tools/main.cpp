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

// crescent: run geometry commands on a scenario file and write a JSON report.
//
// Exit status: 0 success, 2 usage or precondition error, 3 parse error,
// 4 geometric inconsistency.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

int emit(const crescent::io::json& report, const std::string& out) {
  const std::string text = report.dump(2) + "\n";
  if (out.empty() || out == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out);
  if (!f) {
    std::cerr << "crescent: cannot write " << out << "\n";
    return 2;
  }
  f << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace crescent;
  CLI::App app{"Convex bodies, crescents and convexity probes on S^n"};
  std::string scenario_path, fixture_name, command, out;
  io::RunOptions options;
  bool list = false;
  auto* src = app.add_option("--scenario", scenario_path, "Scenario file (JSON)");
  app.add_option("--fixture", fixture_name, "Built-in fixture, e.g. hopf(3)")->excludes(src);
  app.add_option("--command", command, "Command to run")
      ->check(CLI::IsMember(io::command_names()));
  app.add_option("--out", out, "Report path (default: stdout)");
  app.add_option("--seed", options.seed, "Sampling seed")->capture_default_str();
  app.add_option("--budget", options.budget, "Sample budget for probes")->capture_default_str();
  app.add_option("--tol", options.tol, "Angular tolerance for limits")->capture_default_str();
  app.add_flag("--list-fixtures", list, "List built-in fixtures");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list) return emit(io::fixtures_report(), out);
    if (scenario_path.empty() && fixture_name.empty()) {
      throw UsageError("one of --scenario, --fixture or --list-fixtures is required");
    }
    io::ScenarioFile file;
    if (!fixture_name.empty()) {
      file.fixture = fixture_name;
      try {
        file.dim = fixture(fixture_name).dim;
      } catch (const UsageError& e) {
        throw io::ParseError(e.what());
      }
      file.name = fixture_name;
    } else {
      file = io::read_scenario(scenario_path);
    }
    const Scenario s = io::build(file);

    io::json report = {{"schema_version", io::kSchemaVersion}};
    if (!command.empty()) {
      io::json args = io::json::object();
      for (const auto& c : file.commands) {
        if (c["command"] == command) {
          args = c;
          break;
        }
      }
      report.update(io::run_command(s, command, args, options));
    } else {
      if (file.commands.empty()) throw UsageError("no --command given and the file has no commands");
      report["reports"] = io::json::array();
      for (const auto& c : file.commands) {
        report["reports"].push_back(io::run_command(s, c["command"].get<std::string>(), c, options));
      }
    }
    return emit(report, out);
  } catch (const io::ParseError& e) {
    std::cerr << "crescent: parse error: " << e.what() << "\n";
    return 3;
  } catch (const UsageError& e) {
    std::cerr << "crescent: usage error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "crescent: precondition failed: " << e.what() << "\n";
    return 2;
  } catch (const GeometryError& e) {
    std::cerr << "crescent: geometry error: " << e.what() << "\n";
    return 4;
  }
}
