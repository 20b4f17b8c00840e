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

// Cartan (KTK) decomposition of automorphisms and attractor / blow-up
// dynamics of sequences of automorphisms.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "crescent/convex_body.hpp"
#include "crescent/sphere.hpp"

namespace crescent {

/// g = k1 * diag(d) * k2 with k1, k2 orthogonal and d positive,
/// nonincreasing, with product 1.
struct KTKDecomposition {
  Automorphism k1;
  Vec d;
  Automorphism k2;

  Mat reconstruct() const;
};

KTKDecomposition ktk_decompose(const Automorphism& g);

struct AttractorReport {
  /// +/- the attracting axis in the diagonal frame.
  std::vector<SpherePoint> attractor_points;
  /// +/- k1 e_0 of the last element, for automorphism input.
  std::optional<std::vector<SpherePoint>> ambient_attractors;
  /// lambda_i / lambda'_i: top diagonal entry over the next largest.
  std::vector<double> ratio_sequence;
  bool diverges;
};

/// Ratio above which a strictly increasing tail counts as divergence.
inline constexpr double kDivergenceThreshold = 1e3;

/// Attractor analysis of positive diagonal entries (one vector per element,
/// any order within a vector). Needs at least three elements.
AttractorReport attractor_report(std::span<const Vec> diagonals);
AttractorReport attractor_report(std::span<const Automorphism> maps);

/// Closed metric ball of S^n.
struct MetricBall {
  SpherePoint center;
  double radius;

  /// Deterministic sample of the boundary sphere (two points when n = 1).
  std::vector<SpherePoint> boundary_sample(int count) const;
};

/// Diameter of g(ball), from a boundary sample.
double image_diameter(const Automorphism& g, const MetricBall& ball, int samples = 64);

struct BlowupOptions {
  int boundary_samples = 512;
  double cauchy_tol = 1e-3;
};

struct BlowupResult {
  ConvexBody limit;
  bool is_hemisphere;
  bool cauchy;
  /// Hemisphere spanned by the limit's supporting functional (when
  /// is_hemisphere holds).
  std::optional<Hemisphere> limit_hemisphere;
  /// Hausdorff distance of each pullback phi_i^{-1}(L) to the limit
  /// hemisphere (or to the limit body otherwise).
  std::vector<double> hausdorff_trace;
  std::vector<double> consecutive_distances;
  std::vector<double> image_diameters;
};

/// Pulls the ball L back by each phi_i and reports the geometric limit.
/// Throws PreconditionError unless the image diameters of the balls strictly
/// decrease and the sizes of the inputs agree.
BlowupResult blowup_limit(std::span<const Automorphism> phis,
                          std::span<const MetricBall> balls, const MetricBall& L,
                          const BlowupOptions& options = {});

}  // namespace crescent
