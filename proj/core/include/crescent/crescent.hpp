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

// n-crescents of a scenario: validation, dipping, transversal intersection,
// Lambda-classes and two-faced (copied) components.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crescent/scenario.hpp"

namespace crescent {

enum class CrescentKind { kBihedral, kHemispheric };

const char* to_string(CrescentKind kind);

struct Crescent {
  ConvexBody body;
  CrescentKind kind;
  /// Closures of the ideal side: one facet for a bihedron, a list of
  /// (n-1)-hemispheres of the boundary sphere for a hemisphere. The ideal
  /// side itself is the union of their relative interiors.
  std::vector<ConvexBody> alpha;
  /// The other facet for a bihedron; the whole boundary sphere for a
  /// hemisphere (nu is then this sphere minus alpha).
  ConvexBody nu_hull;
  std::uint64_t scenario_id = 0;

  bool in_alpha(const SpherePoint& p) const;
  bool in_nu(const SpherePoint& p) const;
  Crescent transformed(const Automorphism& g) const;
};

enum class CrescentRejection {
  kInteriorNotInside,
  kNoIdealSide,
  kAllSidesIdeal,
  kIdealNotHemisphereUnion,
};

const char* to_string(CrescentRejection r);

struct CrescentCheck {
  std::optional<Crescent> crescent;
  std::optional<CrescentRejection> rejection;
  std::string detail;
  /// Point that certifies the rejection (e.g. an ideal point of the interior).
  std::optional<SpherePoint> witness;
  int interior_samples = 0;
};

struct CrescentOptions {
  int interior_samples = 10000;
  int side_samples = 2000;
  std::uint64_t seed = 0;
};

/// Validates `candidate` as an n-crescent of the scenario. Throws
/// PreconditionError unless it is an n-bihedron or an n-hemisphere.
CrescentCheck validate_crescent(const Scenario& s, const ConvexBody& candidate,
                                const CrescentOptions& options = {});

struct ScanEntry {
  std::size_t index;
  Classification classification;
  /// Empty when the candidate is not an n-bihedron or n-hemisphere.
  std::optional<CrescentCheck> check;
};

/// Runs validate_crescent over the candidates, skipping non-ball inputs.
std::vector<ScanEntry> crescent_scan(const Scenario& s, const std::vector<ConvexBody>& candidates,
                                     const CrescentOptions& options = {});

// Dipping ---------------------------------------------------------------

enum class DipVerdict { kNotDipped, kDipped, kNicelyDipped };

const char* to_string(DipVerdict v);

struct Clause {
  std::string name;
  bool holds;
  std::vector<SpherePoint> witnesses;
};

struct DipReport {
  DipVerdict verdict;
  std::vector<Clause> clauses;
};

/// Tests whether the n-ball F is dipped (nicely) into (D, alpha), where alpha
/// is a convex (n-1)-ball in the boundary of D. Throws PreconditionError when
/// F or D is not n-dimensional or alpha does not lie in the boundary of D.
DipReport dips_into(const ConvexBody& f, const ConvexBody& d, const ConvexBody& alpha);

enum class CrescentSide { kAlpha, kNu };

/// Dipping into (R, side) for a bihedral crescent R.
DipReport dips_into(const ConvexBody& f, const Crescent& r, CrescentSide side);

// Transversal intersection -------------------------------------------------

enum class TransversalKind { kTransversal, kContained, kDisjoint, kIrregular };

const char* to_string(TransversalKind k);

struct TransversalReport {
  TransversalKind kind;
  /// For kContained: "equal", "first-in-second" or "second-in-first".
  std::string containment;
  /// The six conditions, each for (i, j) = (1, 2) and (2, 1).
  std::vector<Clause> conditions;
};

/// Throws UsageError for crescents of different scenarios.
TransversalReport transversal_report(const Crescent& r1, const Crescent& r2);

// Lambda-classes -------------------------------------------------------------

struct LambdaClass {
  /// Indices into the input list.
  std::vector<std::size_t> members;
  std::vector<Crescent> crescents;
  std::vector<SpherePoint> union_body_samples;
  /// Unit normal of the great (n-1)-sphere containing every alpha.
  Vec boundary_normal;
  double boundary_residual;
};

/// Partition by the transitive closure of overlap. Throws UsageError for
/// hemispheric inputs and GeometryError when the alphas of a class do not
/// share a great sphere.
std::vector<LambdaClass> lambda_classes(const Scenario& s, const std::vector<Crescent>& crescents,
                                        std::uint64_t seed = 0);

// Two-faced components -------------------------------------------------------

struct TwoFacedComponent {
  std::size_t first;  // crescent indices
  std::size_t second;
  std::optional<std::size_t> first_class;  // class indices (bihedral input)
  std::optional<std::size_t> second_class;
  /// Exact arc description when nu is one-dimensional.
  bool exact;
  std::optional<SpherePoint> start;
  std::optional<SpherePoint> end;
  bool start_included = false;
  bool end_included = false;
  std::vector<SpherePoint> samples;
  bool disjoint_from_interiors;
};

/// Angular resolution of the sampled component graph in dimension >= 3.
inline constexpr double kComponentResolution = 0.05;

/// Components of nu shared by two crescents of different Lambda-classes
/// (bihedral input) or by two hemispheric crescents. Throws UsageError on
/// mixed kinds.
std::vector<TwoFacedComponent> two_faced_components(const Scenario& s,
                                                    const std::vector<Crescent>& crescents,
                                                    std::uint64_t seed = 0);

// Equivariance ---------------------------------------------------------------

struct EquivarianceReport {
  bool holds;
  /// False when some image g(R) is missing from the classes.
  bool complete;
  struct Missing {
    std::size_t generator;
    std::size_t crescent;
  };
  /// Images g(R) that are not in the crescent list (completeness only).
  std::vector<Missing> missing;
  /// (generator, class) pairs whose image is not a single class.
  std::vector<std::pair<std::size_t, std::size_t>> violations;
};

EquivarianceReport equivariance_check(const Scenario& s, const std::vector<LambdaClass>& classes);

}  // namespace crescent
