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

// Internal helpers shared by the crescent and probe modules.

#pragma once

#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "crescent/convex_body.hpp"
#include "crescent/domain.hpp"

namespace crescent::detail {

std::vector<Vec> rows(const Mat& m);

/// Great sphere {<normal, x> = 0} of S^n.
ConvexBody hyperplane(int n, const Vec& normal);
/// Closed hemisphere {<normal, x> >= 0}.
ConvexBody halfspace(int n, const Vec& normal);
/// The facet of `body` cut out by one of its facet normals.
ConvexBody facet_of(const ConvexBody& body, const Vec& normal);
/// Unit normal of a codimension-one great sphere containing `body`.
Vec span_normal(const ConvexBody& body);

/// Closed set associated with a leaf: the boundary sphere of a hemisphere,
/// or the point / segment / great sphere itself.
ConvexBody boundary_set(const Domain& leaf);

/// First point of the relative interior of `region` failing `pred`: checks
/// `samples` random interior points and, for every leaf set X, points of
/// relint(region and X) lying in relint(region).
std::optional<SpherePoint> find_violation(const Domain& dom, const ConvexBody& region,
                                          const std::function<bool(const SpherePoint&)>& pred,
                                          int samples, std::mt19937_64& rng);

}  // namespace crescent::detail
