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

#include "crescent/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace crescent {

SpherePoint::SpherePoint(const Vec& coords) : coords_(coords) {
  const double norm = coords_.norm();
  if (!(norm > kEpsNorm) || !std::isfinite(norm)) {
    throw GeometryError("SpherePoint: zero or non-finite vector");
  }
  coords_ /= norm;
}

SpherePoint::SpherePoint(std::initializer_list<double> coords)
    : SpherePoint(Eigen::Map<const Vec>(coords.begin(),
                                        static_cast<Eigen::Index>(coords.size()))) {}

SpherePoint SpherePoint::basis(int n, int i) {
  Vec v = Vec::Zero(n + 1);
  v[i] = 1.0;
  return SpherePoint(v);
}

Automorphism::Automorphism(const Mat& matrix) : matrix_(matrix) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 2) {
    throw GeometryError("Automorphism: matrix must be square of size >= 2");
  }
  const double det = matrix_.determinant();
  if (!std::isfinite(det) || std::abs(det) < 1e-300) {
    throw GeometryError("Automorphism: singular matrix");
  }
  const double scale =
      std::pow(std::abs(det), 1.0 / static_cast<double>(matrix_.rows()));
  matrix_ /= scale;
}

Automorphism Automorphism::identity(int n) {
  return Automorphism(Mat::Identity(n + 1, n + 1));
}

Automorphism Automorphism::diagonal(const Vec& entries) {
  return Automorphism(Mat(entries.asDiagonal()));
}

Automorphism Automorphism::inverse() const {
  return Automorphism(matrix_.inverse());
}

Automorphism Automorphism::pow(int k) const {
  Mat base = k >= 0 ? matrix_ : matrix_.inverse();
  Mat result = Mat::Identity(matrix_.rows(), matrix_.cols());
  for (int e = std::abs(k); e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    base = base * base;
  }
  return Automorphism(result);
}

Automorphism operator*(const Automorphism& a, const Automorphism& b) {
  return Automorphism(a.matrix_ * b.matrix_);
}

SpherePoint Segment::at(double s) const {
  if (length < kEpsNorm) return start;
  // Unit tangent at `start` pointing to `end`.
  Vec t = end.coords() - start.coords().dot(end.coords()) * start.coords();
  const double tn = t.norm();
  if (tn < kEpsNorm) return start;
  t /= tn;
  return SpherePoint(std::cos(s) * start.coords() + std::sin(s) * t);
}

bool Hemisphere::contains(const SpherePoint& p) const {
  if (span_basis.cols() > 0) {
    const Vec r = p.coords() - span_basis * (span_basis.transpose() * p.coords());
    if (r.norm() > kEpsAngle) return false;
  }
  const double h = p.coords().dot(center.coords());
  return closed ? h >= -kEpsAngle : h > kEpsAngle;
}

double dist(const SpherePoint& p, const SpherePoint& q) {
  // half-chord form: symmetric and accurate near 0 and pi
  const double a = (p.coords() - q.coords()).norm();
  const double b = (p.coords() + q.coords()).norm();
  return std::clamp(2.0 * std::atan2(a, b), 0.0, std::numbers::pi);
}

SpherePoint antipode(const SpherePoint& p) { return -p; }

bool same_point(const SpherePoint& p, const SpherePoint& q) {
  return dist(p, q) < kEpsAngle;
}

SpherePoint act(const Automorphism& g, const SpherePoint& p) {
  const Vec image = g.matrix() * p.coords();
  if (image.norm() < kEpsNorm) {
    throw GeometryError("act: image vector is numerically zero");
  }
  return SpherePoint(image);
}

Segment minor_segment(const SpherePoint& p, const SpherePoint& q) {
  const double d = dist(p, q);
  if (d >= std::numbers::pi - kEpsAngle) {
    throw PreconditionError("minor_segment: antipodal pair has no minor segment");
  }
  return Segment{p, q, d};
}

double cross_ratio(const SpherePoint& o, const SpherePoint& s,
                   const SpherePoint& q, const SpherePoint& p) {
  const SpherePoint pts[] = {o, s, q, p};
  if (!collinear(pts, kEpsAngle)) {
    throw GeometryError("cross_ratio: points are not on one great circle");
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (dist(pts[i], pts[j]) >= std::numbers::pi - kEpsAngle) {
        throw GeometryError("cross_ratio: points do not lie in an arc shorter than pi");
      }
    }
  }
  const double den_sq = std::sin(dist(s, q));
  const double den_op = std::sin(dist(o, p));
  if (den_sq < kEpsAngle || den_op < kEpsAngle) {
    throw GeometryError("cross_ratio: coincident points give a zero denominator");
  }
  return std::sin(dist(o, q)) / den_sq * (std::sin(dist(s, p)) / den_op);
}

Mat tangent_frame(const SpherePoint& center) {
  const int m = center.ambient_dim();
  Vec v = center.coords();
  v[0] -= 1.0;
  Mat h = Mat::Identity(m, m);
  const double vn = v.squaredNorm();
  if (vn > kEpsNorm * kEpsNorm) h -= 2.0 * v * v.transpose() / vn;
  return h.rightCols(m - 1);
}

Vec affine_patch_coords(const SpherePoint& p, const Hemisphere& patch) {
  const double h = p.coords().dot(patch.center.coords());
  if (h <= kEpsAngle) {
    throw PreconditionError("affine_patch_coords: point is not in the open patch");
  }
  return tangent_frame(patch.center).transpose() * (p.coords() / h);
}

SpherePoint from_affine_patch_coords(const Vec& coords, const Hemisphere& patch) {
  return SpherePoint(patch.center.coords() + tangent_frame(patch.center) * coords);
}

int point_rank(std::span<const SpherePoint> points, double tol) {
  if (points.empty()) return 0;
  Mat m(points.size(), points.front().ambient_dim());
  for (std::size_t i = 0; i < points.size(); ++i) {
    m.row(static_cast<Eigen::Index>(i)) = points[i].coords().transpose();
  }
  Eigen::JacobiSVD<Mat> svd(m);
  const Vec& sv = svd.singularValues();
  const double cut = tol * std::max(1.0, sv.size() > 0 ? sv[0] : 0.0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > cut) ++rank;
  }
  return rank;
}

bool collinear(std::span<const SpherePoint> points, double tol) {
  return point_rank(points, tol) <= 2;
}

Mat orthonormal_range(const Mat& m, double rel_tol) {
  if (m.cols() == 0) return Mat(m.rows(), 0);
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinU);
  const Vec& sv = svd.singularValues();
  if (sv.size() == 0 || sv[0] <= kEpsNorm) return Mat(m.rows(), 0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > rel_tol * sv[0]) ++rank;
  }
  return svd.matrixU().leftCols(rank);
}

}  // namespace crescent
