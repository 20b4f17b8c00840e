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

// m-convexity probing with simplex witnesses, and a direct convexity check.
// Negative answers are only "consistent with" convexity: they come from a
// finite search.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crescent/scenario.hpp"

namespace crescent {

struct SimplexWitness {
  /// m + 2 points spanning an (m+1)-simplex in an affine patch.
  std::vector<SpherePoint> vertices;
  /// F1 is the face opposite this vertex.
  std::size_t distinguished_face = 0;
  /// Ideal points in the relative interior of F1.
  std::vector<SpherePoint> ideal_hits;

  int m() const { return static_cast<int>(vertices.size()) - 2; }
};

struct ClauseStats {
  std::string name;
  bool holds;
  int samples;
  int failures;
  std::optional<SpherePoint> first_failure;
};

struct WitnessReport {
  bool valid;
  std::vector<ClauseStats> clauses;
};

/// Number of random probes of the simplex interior in verify_witness.
inline constexpr int kWitnessSamples = 10000;

/// Checks that the simplex minus the open face F1 lies in the domain and that
/// every ideal hit is ideal and in the relative interior of F1. Throws
/// PreconditionError for a degenerate simplex (patch volume below 1e-12) or
/// vertices outside a common open hemisphere.
WitnessReport verify_witness(const Scenario& s, const SimplexWitness& w, std::uint64_t seed = 0);

/// Patch volume of the simplex, measured in the chart centered at the
/// normalized vertex sum.
double simplex_volume(const std::vector<SpherePoint>& vertices);

/// The simplex {y_i <= 1, sum y_i >= 0} of R^{m+1}, mapped to the chart
/// centered at `anchor` by y -> anchor + scale * sum y_i frame_i. F1 is the
/// face on sum y_i = 0 and contains the anchor in its relative interior.
SimplexWitness corner_simplex(const SpherePoint& anchor, const Mat& frame, double scale);

struct ProbeResult {
  std::optional<SimplexWitness> witness;
  int budget;
  int tried;
  /// "witness-found" or "consistent-with-m-convex".
  std::string verdict;
};

/// Searches for a simplex witness of m-convexity failure. Half the budget goes
/// to axis-aligned corner simplices around ideal sample points (point leaves
/// first), half to randomly oriented ones. Throws PreconditionError unless
/// 1 <= m <= n - 1.
ProbeResult probe_m_convexity(const Scenario& s, int m, int budget, std::uint64_t seed = 0);

struct ConvexCheck {
  bool convex_consistent;
  std::optional<std::pair<SpherePoint, SpherePoint>> witness_pair;
  int pairs_tested;
};

/// Tests pairs of domain points for a minor arc inside the domain. Half the
/// pairs are point reflections through ideal sample points.
ConvexCheck check_convex(const Scenario& s, int budget, std::uint64_t seed = 0);

}  // namespace crescent
