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

#include "crescent/convex_body.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace crescent {
namespace {

bool lex_greater(const Vec& a, const Vec& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

Mat complement_rows(const Mat& span) {
  const int d = static_cast<int>(span.rows());
  const Mat proj = Mat::Identity(d, d) - span * span.transpose();
  const Mat comp = orthonormal_range(proj, 1e-6);
  return comp.transpose();
}

Mat stack_rows(const std::vector<Vec>& rows, int d) {
  Mat m(static_cast<Eigen::Index>(rows.size()), d);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  }
  return m;
}

Mat vstack(const Mat& a, const Mat& b) {
  const Eigen::Index cols = std::max(a.cols(), b.cols());
  Mat m(a.rows() + b.rows(), cols);
  if (a.rows() > 0) m.topRows(a.rows()) = a;
  if (b.rows() > 0) m.bottomRows(b.rows()) = b;
  return m;
}

}  // namespace

std::string to_string(BodyKind kind) {
  switch (kind) {
    case BodyKind::kGreatSphere: return "GREAT_SPHERE";
    case BodyKind::kHemisphere: return "HEMISPHERE";
    case BodyKind::kBihedron: return "BIHEDRON";
    case BodyKind::kProperConvex: return "PROPER_CONVEX";
  }
  return "UNKNOWN";
}

ConvexBody ConvexBody::from_vectors(const std::vector<Vec>& vectors) {
  const ConeFacets facets = facets_of_generators(vectors);
  if (facets.span.cols() == 0) {
    throw GeometryError("ConvexBody: generators span only the zero vector");
  }
  const int d = static_cast<int>(facets.span.rows());
  const ConeGenerators cone = cone_from_inequalities(
      stack_rows(facets.normals, d), complement_rows(facets.span));

  ConvexBody body;
  body.span_ = facets.span;
  body.lineality_ = cone.lineality;
  body.rays_ = cone.rays;
  body.normals_ = facets.normals;
  std::sort(body.rays_.begin(), body.rays_.end(), lex_greater);
  std::sort(body.normals_.begin(), body.normals_.end(), lex_greater);
  return body;
}

ConvexBody ConvexBody::hull(std::span<const SpherePoint> points) {
  if (points.empty()) throw PreconditionError("hull: empty point list");
  std::vector<Vec> vectors;
  vectors.reserve(points.size());
  for (const auto& p : points) vectors.push_back(p.coords());
  ConvexBody body = from_vectors(vectors);
  if (body.span_.cols() == 1 && body.lineality_.cols() == 1) {
    throw PreconditionError(
        "hull: input reduces to a pair of antipodal points, which is not convex");
  }
  return body;
}

ConvexBody ConvexBody::from_halfspaces(int n, const std::vector<Vec>& normals,
                                       const std::vector<Vec>& equalities) {
  const ConeGenerators cone = cone_from_inequalities(stack_rows(normals, n + 1),
                                                     stack_rows(equalities, n + 1));
  return from_cone(cone);
}

ConvexBody ConvexBody::from_cone(const ConeGenerators& cone) {
  if (cone.is_zero()) throw GeometryError("ConvexBody: empty cone");
  std::vector<Vec> vectors = cone.rays;
  for (Eigen::Index j = 0; j < cone.lineality.cols(); ++j) {
    vectors.push_back(cone.lineality.col(j));
    vectors.push_back(-cone.lineality.col(j));
  }
  return from_vectors(vectors);
}

std::vector<SpherePoint> ConvexBody::generators() const {
  std::vector<SpherePoint> out;
  out.reserve(rays_.size() + 2 * static_cast<std::size_t>(lineality_.cols()));
  for (const auto& r : rays_) out.emplace_back(r);
  for (Eigen::Index j = 0; j < lineality_.cols(); ++j) {
    out.emplace_back(Vec(lineality_.col(j)));
    out.emplace_back(Vec(-lineality_.col(j)));
  }
  return out;
}

Mat ConvexBody::generator_matrix() const {
  const auto gens = generators();
  Mat m(ambient_dim(), static_cast<Eigen::Index>(gens.size()));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    m.col(static_cast<Eigen::Index>(i)) = gens[i].coords();
  }
  return m;
}

bool ConvexBody::in_span(const Vec& v, double tol) const {
  return (v - span_ * (span_.transpose() * v)).norm() <= tol * std::max(1.0, v.norm());
}

bool ConvexBody::contains(const SpherePoint& p, Containment mode) const {
  if (!in_span(p.coords())) return false;
  for (const auto& nrm : normals_) {
    const double h = nrm.dot(p.coords());
    if (mode == Containment::kClosed ? h < -kEpsAngle : h < kEpsAngle) return false;
  }
  return true;
}

ConvexBody ConvexBody::transformed(const Automorphism& g) const {
  // Rays map by g and functionals by g^{-T}; the face lattice is unchanged,
  // so no hull is recomputed (that would lose thin bodies to rounding).
  const Mat& m = g.matrix();
  const Mat inv_t = m.inverse().transpose();
  ConvexBody out;
  // g is invertible, so ranks are preserved exactly.
  auto frame = [&](const Mat& basis) -> Mat {
    if (basis.cols() == 0) return Mat(basis.rows(), 0);
    Eigen::JacobiSVD<Mat> svd(m * basis, Eigen::ComputeThinU);
    return svd.matrixU().leftCols(basis.cols());
  };
  out.span_ = frame(span_);
  out.lineality_ = frame(lineality_);
  for (const auto& r : rays_) {
    Vec v = m * r;
    if (out.lineality_.cols() > 0) v -= out.lineality_ * (out.lineality_.transpose() * v);
    out.rays_.push_back(v.normalized());
  }
  for (const auto& nrm : normals_) {
    const Vec w = inv_t * nrm;
    out.normals_.push_back((out.span_ * (out.span_.transpose() * w)).normalized());
  }
  std::sort(out.rays_.begin(), out.rays_.end(), lex_greater);
  std::sort(out.normals_.begin(), out.normals_.end(), lex_greater);
  return out;
}

Mat ConvexBody::inequality_rows() const { return stack_rows(normals_, ambient_dim()); }

Mat ConvexBody::equality_rows() const { return complement_rows(span_); }

double separation_margin(const ConvexBody& body) {
  if (body.lineality().cols() > 0 || body.rays().empty()) return -1.0;
  std::vector<Vec> candidates;
  Vec sum_normals = Vec::Zero(body.ambient_dim());
  for (const auto& nrm : body.facet_normals()) sum_normals += nrm;
  Vec sum_rays = Vec::Zero(body.ambient_dim());
  for (const auto& r : body.rays()) sum_rays += r;
  if (sum_normals.norm() > kEpsNorm) candidates.push_back(sum_normals.normalized());
  if (sum_rays.norm() > kEpsNorm) candidates.push_back(sum_rays.normalized());
  double best = -1.0;
  for (const auto& c : candidates) {
    double worst = 1.0;
    for (const auto& r : body.rays()) worst = std::min(worst, c.dot(r));
    best = std::max(best, worst);
  }
  return best;
}

Classification classify(const ConvexBody& body) {
  const int k = static_cast<int>(body.span().cols());
  const int l = static_cast<int>(body.lineality().cols());
  const std::size_t f = body.facet_normals().size();
  Classification c{BodyKind::kProperConvex, k - 1, false, l - 1};
  if (f == 0) {
    c.kind = BodyKind::kGreatSphere;
  } else if (f == 1) {
    c.kind = BodyKind::kHemisphere;
  } else if (f == 2 && l == k - 2) {
    c.kind = BodyKind::kBihedron;
  }
  c.simply_convex = l == 0 && separation_margin(body) >= kEpsMargin;
  return c;
}

std::optional<ConvexBody> intersect(const ConvexBody& a, const ConvexBody& b) {
  const ConeGenerators cone =
      cone_from_inequalities(vstack(a.inequality_rows(), b.inequality_rows()),
                             vstack(a.equality_rows(), b.equality_rows()));
  if (cone.is_zero()) return std::nullopt;
  return ConvexBody::from_cone(cone);
}

std::optional<SpherePoint> interior_point(const ConvexBody& body) {
  ConeGenerators cone{body.lineality(), body.rays()};
  const auto y = relative_interior_point(cone);
  if (!y) return std::nullopt;
  for (const auto& nrm : body.facet_normals()) {
    if (nrm.dot(*y) <= 0.5 * kEpsAngle) return std::nullopt;
  }
  return SpherePoint(*y);
}

bool interiors_overlap(const ConvexBody& a, const ConvexBody& b, double margin) {
  if (a.dim() != b.dim()) return false;
  for (Eigen::Index j = 0; j < a.span().cols(); ++j) {
    if (!b.in_span(a.span().col(j), 1e-9)) return false;
  }
  const ConeGenerators cone =
      cone_from_inequalities(vstack(a.inequality_rows(), b.inequality_rows()),
                             vstack(a.equality_rows(), b.equality_rows()));
  const auto y = relative_interior_point(cone);
  if (!y) return false;
  for (const auto* body : {&a, &b}) {
    for (const auto& nrm : body->facet_normals()) {
      if (nrm.dot(*y) < margin) return false;
    }
  }
  return true;
}

bool body_subset(const ConvexBody& a, const ConvexBody& b, double tol) {
  for (const auto& g : a.generators()) {
    if (!b.in_span(g.coords(), tol)) return false;
    for (const auto& nrm : b.facet_normals()) {
      if (nrm.dot(g.coords()) < -tol) return false;
    }
  }
  return true;
}

bool bodies_equal(const ConvexBody& a, const ConvexBody& b, double tol) {
  return body_subset(a, b, tol) && body_subset(b, a, tol);
}

Hemisphere supporting_hypersphere(const ConvexBody& body, const SpherePoint& x) {
  if (body.facet_normals().empty() && body.dim() == body.ambient_dim() - 1) {
    throw PreconditionError("supporting_hypersphere: body is the whole sphere");
  }
  if (!body.contains(x, Containment::kClosed)) {
    throw PreconditionError("supporting_hypersphere: point is not in the body");
  }
  for (const auto& nrm : body.facet_normals()) {
    if (std::abs(nrm.dot(x.coords())) <= kEpsAngle) {
      return Hemisphere{SpherePoint(nrm), Mat(), true};
    }
  }
  throw PreconditionError("supporting_hypersphere: point is interior to the body");
}

double distance_to_body(const SpherePoint& p, const ConvexBody& body) {
  if (body.contains(p, Containment::kClosed)) return 0.0;
  const Mat gens = body.generator_matrix();
  const Vec proj = project_onto_cone(gens, p.coords());
  const double pn = proj.norm();
  if (pn > 1e-12) {
    return std::atan2((p.coords() - proj).norm(), pn);
  }
  // p lies in the polar cone: the nearest point is a generator.
  const double best = (gens.transpose() * p.coords()).maxCoeff();
  return std::acos(std::clamp(best, -1.0, 1.0));
}

std::vector<Vec> direction_grid(int k, int count) {
  std::vector<Vec> out;
  if (k <= 0) return out;
  if (k == 1) {
    out.push_back(Vec::Constant(1, 1.0));
    out.push_back(Vec::Constant(1, -1.0));
    return out;
  }
  out.reserve(static_cast<std::size_t>(count));
  if (k == 2) {
    for (int i = 0; i < count; ++i) {
      const double t = 2.0 * std::numbers::pi * i / count;
      Vec v(2);
      v << std::cos(t), std::sin(t);
      out.push_back(v);
    }
  } else if (k == 3) {
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
      const double z = 1.0 - (2.0 * i + 1.0) / count;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = golden * i;
      Vec v(3);
      v << r * std::cos(phi), r * std::sin(phi), z;
      out.push_back(v);
    }
  } else {
    std::mt19937_64 rng(0x5eedULL + static_cast<unsigned>(k));
    std::normal_distribution<double> gauss;
    for (int i = 0; i < count; ++i) {
      Vec v(k);
      for (int j = 0; j < k; ++j) v[j] = gauss(rng);
      out.push_back(v.normalized());
    }
  }
  return out;
}

namespace {

std::vector<SpherePoint> hausdorff_samples(const ConvexBody& body, int grid) {
  std::vector<SpherePoint> samples = body.generators();
  const std::size_t gen_count = samples.size();
  if (gen_count <= 48) {
    for (std::size_t i = 0; i < gen_count; ++i) {
      for (std::size_t j = i + 1; j < gen_count; ++j) {
        if (dist(samples[i], samples[j]) >= std::numbers::pi - kEpsAngle) continue;
        const Segment seg = minor_segment(samples[i], samples[j]);
        for (int t = 1; t < 32; ++t) samples.push_back(seg.at(seg.length * t / 32.0));
      }
    }
  }
  for (const auto& dir : direction_grid(static_cast<int>(body.span().cols()), grid)) {
    const SpherePoint p(body.span() * dir);
    if (body.contains(p)) samples.push_back(p);
  }
  return samples;
}

double directed_hausdorff(const ConvexBody& a, const ConvexBody& b, int grid) {
  double worst = 0.0;
  for (const auto& p : hausdorff_samples(a, grid)) {
    worst = std::max(worst, distance_to_body(p, b));
  }
  return worst;
}

}  // namespace

double hausdorff_distance(const ConvexBody& a, const ConvexBody& b, int grid) {
  return std::max(directed_hausdorff(a, b, grid), directed_hausdorff(b, a, grid));
}

std::optional<ConvexBody> hemisphere_within(const ConvexBody& body, double tol) {
  if (body.dim() != body.ambient_dim() - 1 || body.facet_normals().empty()) {
    return std::nullopt;
  }
  Vec mean = Vec::Zero(body.ambient_dim());
  for (const auto& nrm : body.facet_normals()) mean += nrm;
  if (mean.norm() < kEpsNorm) return std::nullopt;
  ConvexBody hemi = ConvexBody::from_halfspaces(body.ambient_dim() - 1, {mean.normalized()});
  if (hausdorff_distance(body, hemi) <= tol) return hemi;
  return std::nullopt;
}

SequenceLimit sequence_limit(std::span<const ConvexBody> bodies, double tol) {
  if (bodies.size() < 2) {
    throw PreconditionError("sequence_limit: need at least two bodies");
  }
  SequenceLimit out{bodies.back(), false, true, {}, true, true};
  if (auto hemi = hemisphere_within(bodies.back(), tol)) {
    out.limit = *hemi;
    out.snapped = true;
  }
  for (std::size_t i = 0; i + 1 < bodies.size(); ++i) {
    out.consecutive_distances.push_back(hausdorff_distance(bodies[i], bodies[i + 1]));
  }
  const auto& d = out.consecutive_distances;
  const std::size_t start = std::min(d.size() - 1, (3 * d.size()) / 4);
  for (std::size_t i = start; i < d.size(); ++i) {
    if (!(d[i] < tol)) out.cauchy = false;
    if (i > start && d[i] > d[i - 1] + kEpsAngle) out.cauchy = false;
  }
  const int first_dim = bodies.front().dim();
  for (const auto& b : bodies) {
    if (b.dim() != first_dim) out.all_same_dim = false;
  }
  out.limit_dim_bounded = !out.all_same_dim || out.limit.dim() <= first_dim;
  return out;
}

std::vector<SpherePoint> sample_interior(const ConvexBody& body, int count,
                                         std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::normal_distribution<double> gauss;
  std::vector<SpherePoint> out;
  out.reserve(static_cast<std::size_t>(count));
  const int max_attempts = 20 * count + 100;
  for (int attempt = 0; attempt < max_attempts && static_cast<int>(out.size()) < count;
       ++attempt) {
    Vec v = Vec::Zero(body.ambient_dim());
    for (const auto& r : body.rays()) v += expo(rng) * r;
    for (Eigen::Index j = 0; j < body.lineality().cols(); ++j) {
      v += gauss(rng) * body.lineality().col(j);
    }
    if (v.norm() < kEpsNorm) continue;
    SpherePoint p(v);
    if (body.contains(p, Containment::kInterior)) out.push_back(p);
  }
  return out;
}

}  // namespace crescent
