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

// Explicit Kuiper models: a domain of S^n together with automorphisms that
// preserve it, plus the built-in example scenarios.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crescent/convex_body.hpp"
#include "crescent/domain.hpp"

namespace crescent {

struct Scenario {
  std::string name;
  int dim = 0;
  Domain domain;
  std::vector<Automorphism> generators;
  std::optional<std::string> fixture_tag;
  /// Candidate crescents shipped with the scenario (may be empty).
  std::vector<ConvexBody> candidates;
  /// Identity used to refuse mixing crescents of different scenarios.
  std::uint64_t id = 0;

  Membership ideal_membership(const SpherePoint& p) const { return domain.classify(p); }
};

/// Builds a scenario and assigns a fresh id. Throws PreconditionError on
/// dimension mismatches or n < 2.
Scenario make_scenario(std::string name, int dim, Domain domain,
                       std::vector<Automorphism> generators,
                       std::optional<std::string> fixture_tag = std::nullopt,
                       std::vector<ConvexBody> candidates = {});

struct InvarianceReport {
  bool holds;
  int samples;
  /// Per generator, the first sample whose image left the domain (if any).
  std::vector<std::optional<SpherePoint>> counterexamples;
};

/// Checks g(domain) = domain on `samples` random domain points for each
/// generator and its inverse.
InvarianceReport check_generator_invariance(const Scenario& s, int samples,
                                            std::uint64_t seed);

struct FixtureInfo {
  std::string name;
  std::string provenance;
};

/// Built-in scenarios in a stable order.
std::vector<FixtureInfo> list_fixtures();

/// Fixture by name: "hopf(n)", "halfspace-minus-line(n)",
/// "annulus-two-faced", "open-hemisphere(n)". Throws UsageError otherwise.
Scenario fixture(const std::string& name);

Scenario hopf(int n);
Scenario halfspace_minus_line(int n);
Scenario annulus_two_faced();
Scenario open_hemisphere_scenario(int n);

/// Point of S^n with affine coordinates x in the standard patch x_0 > 0.
SpherePoint patch_point(const std::vector<double>& x);

/// Closure in S^n of the affine half-space {c . x + offset >= 0} of the
/// standard patch: the cone {x_0 >= 0, offset x_0 + c . x >= 0}.
ConvexBody patch_halfspace(const std::vector<double>& c, double offset);

}  // namespace crescent
