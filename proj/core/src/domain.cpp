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

#include "crescent/domain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace crescent {

struct Domain::Node {
  Kind kind;
  int ambient = 0;
  Vec v;
  Vec w;
  Mat basis;
  std::vector<Domain> kids;
};

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap(double t) {
  t = std::fmod(t, kTwoPi);
  return t < 0 ? t + kTwoPi : t;
}

// Parameters t in [0, 2pi) with A cos t + B sin t = 0.
std::vector<double> zeros(double a, double b) {
  if (std::hypot(a, b) < kEpsNorm) return {};
  const double t0 = wrap(std::atan2(-a, b));
  return {t0, wrap(t0 + std::numbers::pi)};
}

}  // namespace

const char* to_string(Membership m) {
  switch (m) {
    case Membership::kInterior:
      return "INTERIOR";
    case Membership::kIdeal:
      return "IDEAL";
    case Membership::kOutside:
      return "OUTSIDE";
  }
  return "?";
}

SpherePoint Arc::at(double t) const {
  return SpherePoint(std::cos(t) * start + std::sin(t) * tangent);
}

Arc Arc::from_segment(const Segment& seg) {
  Vec t = seg.end.coords() - seg.start.coords().dot(seg.end.coords()) * seg.start.coords();
  const double tn = t.norm();
  if (tn < kEpsNorm) {
    // Degenerate segment; any tangent will do.
    Vec e = Vec::Zero(seg.start.ambient_dim());
    Eigen::Index i = 0;
    seg.start.coords().cwiseAbs().minCoeff(&i);
    e[i] = 1.0;
    t = e - e.dot(seg.start.coords()) * seg.start.coords();
    return Arc{seg.start.coords(), t.normalized(), seg.length};
  }
  return Arc{seg.start.coords(), t / tn, seg.length};
}

Arc Arc::through(const SpherePoint& a, const SpherePoint& via, const SpherePoint& b) {
  Vec t = via.coords() - a.coords().dot(via.coords()) * a.coords();
  if (t.norm() < kEpsNorm) {
    throw PreconditionError("Arc::through: middle point coincides with an end");
  }
  t.normalize();
  const double tv = wrap(std::atan2(via.coords().dot(t), via.coords().dot(a.coords())));
  const double tb = wrap(std::atan2(b.coords().dot(t), b.coords().dot(a.coords())));
  const Vec off = b.coords() - std::cos(tb) * a.coords() - std::sin(tb) * t;
  if (off.norm() > 1e-7) {
    throw PreconditionError("Arc::through: points are not on one great circle");
  }
  // tb == 0 means b coincides with a: the full circle.
  const double len = tb < kEpsAngle ? kTwoPi : tb;
  if (tv > len) {
    throw PreconditionError("Arc::through: middle point is not between the ends");
  }
  return Arc{a.coords(), t, len};
}

namespace {

Mat column_basis(const Vec& a, const Vec& b) {
  Mat m(a.size(), 2);
  m.col(0) = a;
  m.col(1) = b;
  return orthonormal_range(m);
}

bool in_subspace(const Vec& p, const Mat& q, double tol) {
  return (p - q * (q.transpose() * p)).norm() < tol;
}

bool segment_member(const Vec& p, const Vec& a, const Vec& b) {
  if (!in_subspace(p, column_basis(a, b), kEpsAngle)) return false;
  const SpherePoint sp(p), sa(a), sb(b);
  return dist(sa, sp) + dist(sp, sb) <= dist(sa, sb) + 1e-7;
}

// Circle parameters t in [0, 2pi) with gamma(t) in the subspace of q.
std::vector<double> circle_in_subspace(const Arc& arc, const Mat& q) {
  const Vec rs = arc.start - q * (q.transpose() * arc.start);
  const Vec ru = arc.tangent - q * (q.transpose() * arc.tangent);
  if (rs.norm() < kEpsNorm && ru.norm() < kEpsNorm) return {};
  const Vec w = (rs.norm() >= ru.norm() ? rs : ru).normalized();
  std::vector<double> out;
  for (double t : zeros(rs.dot(w), ru.dot(w))) {
    if ((std::cos(t) * rs + std::sin(t) * ru).norm() < 1e-8) out.push_back(t);
  }
  return out;
}

}  // namespace

Domain Domain::open_hemisphere(const SpherePoint& center) {
  return Domain(std::make_shared<const Node>(
      Node{Kind::kOpenHemisphere, center.ambient_dim(), center.coords(), {}, {}, {}}));
}

Domain Domain::closed_hemisphere(const SpherePoint& center) {
  return Domain(std::make_shared<const Node>(
      Node{Kind::kClosedHemisphere, center.ambient_dim(), center.coords(), {}, {}, {}}));
}

Domain Domain::point(const SpherePoint& p) {
  return Domain(std::make_shared<const Node>(
      Node{Kind::kPoint, p.ambient_dim(), p.coords(), {}, {}, {}}));
}

Domain Domain::segment(const SpherePoint& a, const SpherePoint& b) {
  (void)minor_segment(a, b);
  return Domain(std::make_shared<const Node>(
      Node{Kind::kSegment, a.ambient_dim(), a.coords(), b.coords(), {}, {}}));
}

Domain Domain::great_sphere(const Mat& basis) {
  const Mat q = orthonormal_range(basis);
  if (q.cols() == 0) throw PreconditionError("great_sphere: empty span");
  return Domain(std::make_shared<const Node>(
      Node{Kind::kGreatSphere, static_cast<int>(basis.rows()), {}, {}, q, {}}));
}

namespace {

int common_dim(const std::vector<Domain>& parts, const char* what) {
  if (parts.empty()) throw PreconditionError(std::string(what) + ": no operands");
  const int d = parts.front().ambient_dim();
  for (const auto& p : parts) {
    if (p.ambient_dim() != d) {
      throw PreconditionError(std::string(what) + ": operands in different spheres");
    }
  }
  return d;
}

}  // namespace

Domain Domain::intersection(std::vector<Domain> parts) {
  const int d = common_dim(parts, "intersection");
  return Domain(std::make_shared<const Node>(
      Node{Kind::kIntersection, d, {}, {}, {}, std::move(parts)}));
}

Domain Domain::union_of(std::vector<Domain> parts) {
  const int d = common_dim(parts, "union");
  return Domain(std::make_shared<const Node>(Node{Kind::kUnion, d, {}, {}, {}, std::move(parts)}));
}

Domain Domain::difference(Domain keep, Domain removed) {
  std::vector<Domain> parts{std::move(keep), std::move(removed)};
  const int d = common_dim(parts, "difference");
  return Domain(
      std::make_shared<const Node>(Node{Kind::kDifference, d, {}, {}, {}, std::move(parts)}));
}

Domain::Kind Domain::kind() const { return node_->kind; }
int Domain::ambient_dim() const { return node_->ambient; }
const Vec& Domain::vector() const { return node_->v; }
const Vec& Domain::vector2() const { return node_->w; }
const Mat& Domain::basis() const { return node_->basis; }
const std::vector<Domain>& Domain::children() const { return node_->kids; }

bool Domain::contains(const SpherePoint& p) const {
  const Node& n = *node_;
  const Vec& x = p.coords();
  switch (n.kind) {
    case Kind::kOpenHemisphere:
      return n.v.dot(x) > kEpsAngle;
    case Kind::kClosedHemisphere:
      return n.v.dot(x) >= -kEpsAngle;
    case Kind::kPoint:
      return (x - n.v).norm() < kEpsAngle;
    case Kind::kSegment:
      return segment_member(x, n.v, n.w);
    case Kind::kGreatSphere:
      return in_subspace(x, n.basis, kEpsAngle);
    case Kind::kIntersection:
      return std::all_of(n.kids.begin(), n.kids.end(),
                         [&](const Domain& d) { return d.contains(p); });
    case Kind::kUnion:
      return std::any_of(n.kids.begin(), n.kids.end(),
                         [&](const Domain& d) { return d.contains(p); });
    case Kind::kDifference:
      return n.kids[0].contains(p) && !n.kids[1].contains(p);
  }
  return false;
}

bool Domain::closure_contains(const SpherePoint& p) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::kOpenHemisphere:
    case Kind::kClosedHemisphere:
      return n.v.dot(p.coords()) >= -kEpsAngle;
    case Kind::kPoint:
    case Kind::kSegment:
    case Kind::kGreatSphere:
      return contains(p);
    case Kind::kIntersection:
      return std::all_of(n.kids.begin(), n.kids.end(),
                         [&](const Domain& d) { return d.closure_contains(p); });
    case Kind::kUnion:
      return std::any_of(n.kids.begin(), n.kids.end(),
                         [&](const Domain& d) { return d.closure_contains(p); });
    case Kind::kDifference:
      return n.kids[0].closure_contains(p) && !n.kids[1].interior_contains(p);
  }
  return false;
}

bool Domain::interior_contains(const SpherePoint& p) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::kOpenHemisphere:
    case Kind::kClosedHemisphere:
      return n.v.dot(p.coords()) > kEpsAngle;
    case Kind::kPoint:
    case Kind::kSegment:
    case Kind::kGreatSphere:
      return false;
    case Kind::kIntersection:
      return std::all_of(n.kids.begin(), n.kids.end(),
                         [&](const Domain& d) { return d.interior_contains(p); });
    case Kind::kUnion:
      return std::any_of(n.kids.begin(), n.kids.end(),
                         [&](const Domain& d) { return d.interior_contains(p); });
    case Kind::kDifference:
      return n.kids[0].interior_contains(p) && !n.kids[1].closure_contains(p);
  }
  return false;
}

Membership Domain::classify(const SpherePoint& p) const {
  if (contains(p)) return Membership::kInterior;
  if (closure_contains(p)) return Membership::kIdeal;
  return Membership::kOutside;
}

std::vector<Domain> Domain::leaves() const {
  if (node_->kids.empty()) return {*this};
  std::vector<Domain> out;
  for (const auto& k : node_->kids) {
    auto sub = k.leaves();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

std::vector<double> Domain::arc_events(const Arc& arc) const {
  std::vector<double> ts{0.0, arc.length};
  auto add = [&](double t) {
    if (t > 0 && t < arc.length) ts.push_back(t);
  };
  for (const auto& leaf : leaves()) {
    const Node& n = *leaf.node_;
    switch (n.kind) {
      case Kind::kOpenHemisphere:
      case Kind::kClosedHemisphere:
        for (double t : zeros(n.v.dot(arc.start), n.v.dot(arc.tangent))) add(t);
        break;
      case Kind::kPoint: {
        const double c = n.v.dot(arc.start), s = n.v.dot(arc.tangent);
        if ((n.v - c * arc.start - s * arc.tangent).norm() < kEpsAngle) add(wrap(std::atan2(s, c)));
        break;
      }
      case Kind::kGreatSphere:
        for (double t : circle_in_subspace(arc, n.basis)) add(t);
        break;
      case Kind::kSegment: {
        const Mat q = column_basis(n.v, n.w);
        if (in_subspace(arc.start, q, kEpsAngle) && in_subspace(arc.tangent, q, kEpsAngle)) {
          for (const Vec* e : {&n.v, &n.w}) {
            add(wrap(std::atan2(e->dot(arc.tangent), e->dot(arc.start))));
          }
        } else {
          for (double t : circle_in_subspace(arc, q)) {
            if (segment_member(arc.at(t).coords(), n.v, n.w)) add(t);
          }
        }
        break;
      }
      default:
        break;
    }
  }
  std::sort(ts.begin(), ts.end());
  std::vector<double> out;
  for (double t : ts) {
    if (out.empty() || t - out.back() > 1e-12) out.push_back(t);
  }
  return out;
}

std::vector<Domain::ArcPiece> Domain::arc_pieces(const Arc& arc) const {
  const auto ts = arc_events(arc);
  std::vector<ArcPiece> out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    out.push_back(ArcPiece{ts[i], ts[i], contains(arc.at(ts[i]))});
    if (i + 1 < ts.size()) {
      const double mid = 0.5 * (ts[i] + ts[i + 1]);
      out.push_back(ArcPiece{ts[i], ts[i + 1], contains(arc.at(mid))});
    }
  }
  return out;
}

bool Domain::arc_inside(const Arc& arc) const {
  for (const auto& piece : arc_pieces(arc)) {
    if (!piece.member) return false;
  }
  for (int i = 0; i <= 256; ++i) {
    if (!contains(arc.at(arc.length * i / 256.0))) return false;
  }
  return true;
}

SpherePoint random_point(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Vec v(n + 1);
  do {
    for (int i = 0; i <= n; ++i) v[i] = gauss(rng);
  } while (v.norm() < 1e-6);
  return SpherePoint(v);
}

std::vector<SpherePoint> Domain::ideal_samples(int per_leaf, std::mt19937_64& rng) const {
  std::vector<SpherePoint> raw;
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int d = ambient_dim();
  for (const auto& leaf : leaves()) {
    const Node& n = *leaf.node_;
    switch (n.kind) {
      case Kind::kPoint:
        raw.emplace_back(n.v);
        break;
      case Kind::kSegment: {
        const Segment seg = minor_segment(SpherePoint(n.v), SpherePoint(n.w));
        for (int i = 0; i < per_leaf; ++i) raw.push_back(seg.at(seg.length * unit(rng)));
        break;
      }
      case Kind::kGreatSphere:
        for (int i = 0; i < per_leaf; ++i) {
          Vec c(n.basis.cols());
          for (Eigen::Index j = 0; j < c.size(); ++j) c[j] = gauss(rng);
          if (c.norm() > 1e-6) raw.emplace_back(n.basis * c);
        }
        break;
      case Kind::kOpenHemisphere:
      case Kind::kClosedHemisphere:
        for (int i = 0; i < per_leaf; ++i) {
          Vec v = random_point(d - 1, rng).coords();
          v -= v.dot(n.v) / n.v.squaredNorm() * n.v;
          if (v.norm() > 1e-6) raw.emplace_back(v);
        }
        break;
      default:
        break;
    }
  }
  std::vector<SpherePoint> out;
  for (const auto& p : raw) {
    if (classify(p) == Membership::kIdeal) out.push_back(p);
  }
  return out;
}

std::vector<SpherePoint> sample_domain(const Domain& d, int count, std::mt19937_64& rng) {
  std::vector<SpherePoint> out;
  out.reserve(static_cast<std::size_t>(count));
  const long long limit = static_cast<long long>(count) * 2000;
  for (long long i = 0; i < limit && static_cast<int>(out.size()) < count; ++i) {
    SpherePoint p = random_point(d.ambient_dim() - 1, rng);
    if (d.contains(p)) out.push_back(std::move(p));
  }
  if (static_cast<int>(out.size()) < count) {
    throw GeometryError("sample_domain: domain has (numerically) no volume");
  }
  return out;
}

}  // namespace crescent
