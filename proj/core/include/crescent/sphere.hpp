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

// Points, metric and projective action on the sphere S^n, viewed as the
// space of rays of R^{n+1}.

#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "crescent/tolerance.hpp"

namespace crescent {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// A point of S^n stored as a unit vector of R^{n+1}.
class SpherePoint {
 public:
  /// Normalizes `coords`. Throws GeometryError on a (numerically) zero vector.
  explicit SpherePoint(const Vec& coords);
  SpherePoint(std::initializer_list<double> coords);

  /// Standard basis vector e_i of R^{n+1}.
  static SpherePoint basis(int n, int i);

  const Vec& coords() const { return coords_; }
  double operator[](int i) const { return coords_[i]; }
  /// Dimension n of the sphere (ambient dimension minus one).
  int dim() const { return static_cast<int>(coords_.size()) - 1; }
  int ambient_dim() const { return static_cast<int>(coords_.size()); }

  /// Antipodal point, exact (no renormalization).
  SpherePoint operator-() const {
    SpherePoint r = *this;
    r.coords_ = -coords_;
    return r;
  }

 private:
  Vec coords_;
};

/// Element of SL_pm(n+1, R) acting on S^n. The matrix is rescaled so that
/// |det| = 1; the action does not see positive scalars.
class Automorphism {
 public:
  explicit Automorphism(const Mat& matrix);

  static Automorphism identity(int n);
  static Automorphism diagonal(const Vec& entries);

  const Mat& matrix() const { return matrix_; }
  int dim() const { return static_cast<int>(matrix_.rows()) - 1; }

  Automorphism inverse() const;
  Automorphism pow(int k) const;

  friend Automorphism operator*(const Automorphism& a, const Automorphism& b);

 private:
  Mat matrix_;
};

/// Convex segment of S^n (length in [0, pi]) given by its endpoints.
struct Segment {
  SpherePoint start;
  SpherePoint end;
  double length;

  /// Point at arc length `s` from `start`, s in [0, length].
  SpherePoint at(double s) const;
  SpherePoint midpoint() const { return at(0.5 * length); }
};

/// Closed or open hemisphere {x : <x, center> >= 0} inside the great sphere
/// spanned by `span_basis` (columns). An empty basis means the whole S^n.
struct Hemisphere {
  SpherePoint center;
  Mat span_basis;
  bool closed = true;

  bool contains(const SpherePoint& p) const;
};

double dist(const SpherePoint& p, const SpherePoint& q);
SpherePoint antipode(const SpherePoint& p);
bool same_point(const SpherePoint& p, const SpherePoint& q);

/// Projective action p -> normalize(g p).
SpherePoint act(const Automorphism& g, const SpherePoint& p);

/// Minor segment between a proper (non-antipodal) pair.
Segment minor_segment(const SpherePoint& p, const SpherePoint& q);

/// [o, s; q, p] = (sin d(o,q) / sin d(s,q)) * (sin d(s,p) / sin d(o,p)) for
/// four points on one arc shorter than pi.
double cross_ratio(const SpherePoint& o, const SpherePoint& s,
                   const SpherePoint& q, const SpherePoint& p);

/// Orthonormal basis (columns) of the tangent hyperplane at `center`. The
/// frame is the Householder image of e_1..e_n, so the patch at e_0 uses the
/// standard coordinates.
Mat tangent_frame(const SpherePoint& center);

/// Central projection of `p` to the tangent hyperplane of the patch center.
/// Throws PreconditionError if `p` is not in the open patch.
Vec affine_patch_coords(const SpherePoint& p, const Hemisphere& patch);
SpherePoint from_affine_patch_coords(const Vec& coords,
                                     const Hemisphere& patch);

/// Numerical rank of the matrix with the given points as rows; singular values
/// below `tol * max(1, sigma_max)` count as zero.
int point_rank(std::span<const SpherePoint> points, double tol = kEpsNorm);

/// True iff the points lie on one great circle (rank <= 2).
bool collinear(std::span<const SpherePoint> points, double tol = kEpsNorm);

/// Orthonormal basis (columns) of the column space of `m`, using the relative
/// cutoff kRankRelTol.
Mat orthonormal_range(const Mat& m, double rel_tol = kRankRelTol);

}  // namespace crescent
