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

// CSG domains in S^n with exact membership, structural closure and the
// ideal set clo(domain) - domain.

#pragma once

#include <memory>
#include <random>
#include <vector>

#include "crescent/sphere.hpp"

namespace crescent {

enum class Membership { kInterior, kIdeal, kOutside };

const char* to_string(Membership m);

/// Constant-speed great-circle arc t -> cos(t) start + sin(t) tangent,
/// t in [0, length]. Unlike Segment it may be as long as 2 pi.
struct Arc {
  Vec start;
  Vec tangent;
  double length;

  SpherePoint at(double t) const;
  static Arc from_segment(const Segment& seg);
  /// Arc from `a` to `b` passing through `via`.
  static Arc through(const SpherePoint& a, const SpherePoint& via, const SpherePoint& b);
};

class Domain {
 public:
  enum class Kind {
    kOpenHemisphere,
    kClosedHemisphere,
    kPoint,
    kSegment,
    kGreatSphere,
    kIntersection,
    kUnion,
    kDifference,
  };

  static Domain open_hemisphere(const SpherePoint& center);
  static Domain closed_hemisphere(const SpherePoint& center);
  static Domain point(const SpherePoint& p);
  /// Closed minor segment.
  static Domain segment(const SpherePoint& a, const SpherePoint& b);
  /// Great sphere spanned by the columns of `basis`.
  static Domain great_sphere(const Mat& basis);
  static Domain intersection(std::vector<Domain> parts);
  static Domain union_of(std::vector<Domain> parts);
  static Domain difference(Domain keep, Domain removed);

  Kind kind() const;
  int ambient_dim() const;
  /// Hemisphere center, point, or segment start.
  const Vec& vector() const;
  /// Segment end.
  const Vec& vector2() const;
  /// Orthonormal span of a great sphere.
  const Mat& basis() const;
  const std::vector<Domain>& children() const;

  bool contains(const SpherePoint& p) const;
  /// Structural closure: closures of primitives, removed sets reinstated.
  bool closure_contains(const SpherePoint& p) const;
  /// Structural interior (a subset of the true interior).
  bool interior_contains(const SpherePoint& p) const;
  Membership classify(const SpherePoint& p) const;

  /// Leaves of the tree in depth-first order.
  std::vector<Domain> leaves() const;

  /// Arc parameters where membership along `arc` can change, sorted and
  /// including both ends. Between two consecutive events membership is
  /// constant.
  std::vector<double> arc_events(const Arc& arc) const;

  /// Membership along the arc as alternating pieces: event points (t0 == t1)
  /// and the open intervals between them.
  struct ArcPiece {
    double t0;
    double t1;
    bool member;
  };
  std::vector<ArcPiece> arc_pieces(const Arc& arc) const;

  /// True iff every point of the arc lies in the domain, decided exactly from
  /// the events (and 256 uniform samples as a cross-check).
  bool arc_inside(const Arc& arc) const;

  /// Points of the ideal set: removed points, samples of removed segments and
  /// spheres, and samples of hemisphere boundaries, filtered to the ideal set.
  std::vector<SpherePoint> ideal_samples(int per_leaf, std::mt19937_64& rng) const;

 private:
  struct Node;
  explicit Domain(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Uniform random point of S^n.
SpherePoint random_point(int n, std::mt19937_64& rng);

/// Rejection sample of domain points; throws GeometryError when fewer than
/// `count` are found after `count * 2000` draws.
std::vector<SpherePoint> sample_domain(const Domain& d, int count, std::mt19937_64& rng);

}  // namespace crescent
