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

// Polyhedral cone primitives in R^d: the double description method for
// converting between inequality and generator form, and nonnegative least
// squares for projecting onto a finitely generated cone.

#pragma once

#include <optional>
#include <vector>

#include "crescent/sphere.hpp"

namespace crescent {

/// Minimal generators of a polyhedral cone: an orthonormal lineality basis
/// (columns) and unit extreme rays of the pointed part.
struct ConeGenerators {
  Mat lineality;
  std::vector<Vec> rays;

  bool is_zero() const { return lineality.cols() == 0 && rays.empty(); }
};

/// Generators of {x in R^d : ineq * x >= 0, eq * x = 0}. Rows of `ineq` and
/// `eq` are constraints; either may have zero rows. `tol` is the incidence
/// tolerance on normalized rows and rays.
ConeGenerators cone_from_inequalities(const Mat& ineq, const Mat& eq,
                                      double tol = kEpsAngle);

/// Inequality form of cone(gens): orthonormal span basis, orthonormal
/// lineality basis and the unit facet normals (each in the span).
struct ConeFacets {
  Mat span;
  Mat lineality;
  std::vector<Vec> normals;
};

ConeFacets facets_of_generators(const std::vector<Vec>& gens,
                                double tol = kEpsAngle);

/// Euclidean projection of `x` onto cone(columns of `gens`) by the
/// Lawson-Hanson active set method.
Vec project_onto_cone(const Mat& gens, const Vec& x);

/// A point in the relative interior of the cone, or nullopt for {0}.
std::optional<Vec> relative_interior_point(const ConeGenerators& cone);

}  // namespace crescent
