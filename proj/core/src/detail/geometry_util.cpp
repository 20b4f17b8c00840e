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

#include "detail/geometry_util.hpp"

namespace crescent::detail {

std::vector<Vec> rows(const Mat& m) {
  std::vector<Vec> out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.emplace_back(m.row(i).transpose());
  return out;
}

ConvexBody hyperplane(int n, const Vec& normal) {
  return ConvexBody::from_halfspaces(n, {}, {normal});
}

ConvexBody halfspace(int n, const Vec& normal) { return ConvexBody::from_halfspaces(n, {normal}); }

ConvexBody facet_of(const ConvexBody& body, const Vec& normal) {
  auto eq = rows(body.equality_rows());
  eq.push_back(normal);
  return ConvexBody::from_halfspaces(body.ambient_dim() - 1, body.facet_normals(), eq);
}

Vec span_normal(const ConvexBody& body) {
  const Mat eq = body.equality_rows();
  if (eq.rows() != 1) throw PreconditionError("span_normal: body is not of codimension one");
  return eq.row(0).transpose().normalized();
}

ConvexBody boundary_set(const Domain& leaf) {
  const int n = leaf.ambient_dim() - 1;
  switch (leaf.kind()) {
    case Domain::Kind::kOpenHemisphere:
    case Domain::Kind::kClosedHemisphere:
      return hyperplane(n, leaf.vector());
    case Domain::Kind::kPoint:
      return ConvexBody::hull({SpherePoint(leaf.vector())});
    case Domain::Kind::kSegment:
      return ConvexBody::hull({SpherePoint(leaf.vector()), SpherePoint(leaf.vector2())});
    case Domain::Kind::kGreatSphere: {
      std::vector<Vec> gens;
      for (Eigen::Index j = 0; j < leaf.basis().cols(); ++j) {
        gens.push_back(leaf.basis().col(j));
        gens.push_back(-leaf.basis().col(j));
      }
      std::vector<SpherePoint> pts;
      for (const auto& g : gens) pts.emplace_back(g);
      return ConvexBody::hull(pts);
    }
    default:
      break;
  }
  throw PreconditionError("boundary_set: not a leaf");
}

std::optional<SpherePoint> find_violation(const Domain& dom, const ConvexBody& region,
                                          const std::function<bool(const SpherePoint&)>& pred,
                                          int samples, std::mt19937_64& rng) {
  for (const auto& p : sample_interior(region, samples, rng)) {
    if (!pred(p)) return p;
  }
  for (const auto& leaf : dom.leaves()) {
    const auto cut = intersect(region, boundary_set(leaf));
    if (!cut) continue;
    std::vector<SpherePoint> probes = sample_interior(*cut, 16, rng);
    if (auto q = interior_point(*cut)) probes.push_back(*q);
    for (const auto& g : cut->generators()) probes.push_back(g);
    for (const auto& q : probes) {
      if (region.contains(q, Containment::kInterior) && !pred(q)) return q;
    }
  }
  return std::nullopt;
}

}  // namespace crescent::detail
