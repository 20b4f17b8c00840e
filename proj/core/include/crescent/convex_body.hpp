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

// Spherical convex bodies represented by finitely generated cones of
// R^{n+1}. A body is stored in both forms: minimal generators (lineality
// basis plus extreme rays) and supporting functionals (facet normals inside
// the linear span).

#pragma once

#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "crescent/cone.hpp"
#include "crescent/sphere.hpp"

namespace crescent {

enum class BodyKind { kGreatSphere, kHemisphere, kBihedron, kProperConvex };

std::string to_string(BodyKind kind);

struct Classification {
  BodyKind kind;
  int dim;  // dimension of the smallest great sphere containing the body
  bool simply_convex;
  int max_great_sphere_dim;  // -1 when the body contains no great sphere

  bool operator==(const Classification&) const = default;
};

enum class Containment { kClosed, kInterior };

class ConvexBody {
 public:
  /// Convex hull of the points. Throws PreconditionError on empty input and
  /// on input that reduces to a single antipodal pair (not convex).
  static ConvexBody hull(std::span<const SpherePoint> points);
  static ConvexBody hull(std::initializer_list<SpherePoint> points) {
    return hull(std::span<const SpherePoint>(points.begin(), points.size()));
  }

  /// Body {x : <a_i, x> >= 0, <e_j, x> = 0} in S^n. Throws GeometryError if
  /// the cone is {0}.
  static ConvexBody from_halfspaces(int n, const std::vector<Vec>& normals,
                                    const std::vector<Vec>& equalities = {});

  /// Body generated by the cone; throws GeometryError if the cone is {0}.
  static ConvexBody from_cone(const ConeGenerators& cone);

  int ambient_dim() const { return static_cast<int>(span_.rows()); }
  /// Dimension of the containing great sphere <A>.
  int dim() const { return static_cast<int>(span_.cols()) - 1; }

  const Mat& span() const { return span_; }
  const Mat& lineality() const { return lineality_; }
  const std::vector<Vec>& rays() const { return rays_; }
  const std::vector<Vec>& facet_normals() const { return normals_; }

  /// Extreme rays followed by +/- each lineality basis vector.
  std::vector<SpherePoint> generators() const;
  /// Generators as matrix columns.
  Mat generator_matrix() const;

  bool contains(const SpherePoint& p, Containment mode = Containment::kClosed) const;
  bool in_span(const Vec& v, double tol = kEpsAngle) const;

  ConvexBody transformed(const Automorphism& g) const;

  /// Inequality rows (facet normals) and equality rows (complement of the
  /// span) describing the cone.
  Mat inequality_rows() const;
  Mat equality_rows() const;

 private:
  ConvexBody() = default;
  static ConvexBody from_vectors(const std::vector<Vec>& vectors);

  Mat span_;
  Mat lineality_;
  std::vector<Vec> rays_;
  std::vector<Vec> normals_;
};

Classification classify(const ConvexBody& body);

/// Best strict separation margin found: max over candidate functionals c of
/// min over generators g of <c, g>. Non-positive when the cone has lineality.
double separation_margin(const ConvexBody& body);

/// Intersection of two bodies, nullopt when the cones meet only at 0.
std::optional<ConvexBody> intersect(const ConvexBody& a, const ConvexBody& b);

/// A point with every facet functional > kEpsAngle / 2 inside the span.
std::optional<SpherePoint> interior_point(const ConvexBody& body);

/// True iff the relative interiors of two bodies of the same dimension share
/// a point with margin `margin` on every facet of both.
bool interiors_overlap(const ConvexBody& a, const ConvexBody& b,
                       double margin = kEpsMargin);

bool body_subset(const ConvexBody& a, const ConvexBody& b, double tol = kEpsAngle);
bool bodies_equal(const ConvexBody& a, const ConvexBody& b, double tol = kEpsAngle);

/// Closed n-hemisphere containing `body` with `x` on its boundary sphere.
Hemisphere supporting_hypersphere(const ConvexBody& body, const SpherePoint& x);

/// Angular distance from `p` to the body (0 when p is inside).
double distance_to_body(const SpherePoint& p, const ConvexBody& body);

/// Number of grid directions used by hausdorff_distance.
inline constexpr int kHausdorffGrid = 4096;

/// Deterministic direction grid with `count` points on the unit sphere of
/// R^k (Fibonacci lattice for k = 3, equispaced for k = 2).
std::vector<Vec> direction_grid(int k, int count);

/// Hausdorff distance evaluated on: all generators, 32 points on every
/// generator pair segment (for bodies with at most 48 generators), and the
/// grid directions of the body's span that fall inside the body. Each sample
/// contributes its exact distance to the other body.
double hausdorff_distance(const ConvexBody& a, const ConvexBody& b,
                          int grid = kHausdorffGrid);

/// The closed n-hemisphere of the body's mean facet normal when it lies
/// within `tol` of the body in Hausdorff distance; nullopt otherwise.
std::optional<ConvexBody> hemisphere_within(const ConvexBody& body, double tol);

struct SequenceLimit {
  /// Last body, replaced by a hemisphere within `tol` when one exists.
  ConvexBody limit;
  bool snapped;
  bool cauchy;
  std::vector<double> consecutive_distances;
  bool all_same_dim;
  bool limit_dim_bounded;  // dim(limit) <= common input dim (when all_same_dim)
};

/// Geometric-limit diagnostics for a finite sequence (length >= 2).
SequenceLimit sequence_limit(std::span<const ConvexBody> bodies, double tol);

/// Random points of the body interior (relative to its span).
std::vector<SpherePoint> sample_interior(const ConvexBody& body, int count,
                                         std::mt19937_64& rng);

}  // namespace crescent
