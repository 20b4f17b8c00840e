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

#include "crescent/probe.hpp"

#include <cmath>

#include "detail/geometry_util.hpp"

namespace crescent {
namespace {

constexpr int kFaceSamples = 1000;
constexpr double kScales[] = {1.0, 0.5, 0.25, 0.1};

ConvexBody face_body(const std::vector<SpherePoint>& v, unsigned mask) {
  std::vector<SpherePoint> pts;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (mask & (1u << i)) pts.push_back(v[i]);
  }
  return ConvexBody::hull(pts);
}

// Random and leaf-cut probes of relint(region); counts the ones outside the domain.
void probe_region(const Domain& dom, const ConvexBody& region, int samples, std::mt19937_64& rng,
                  ClauseStats& stats) {
  auto test = [&](const SpherePoint& p) {
    ++stats.samples;
    if (dom.contains(p)) return;
    ++stats.failures;
    if (!stats.first_failure) stats.first_failure = p;
  };
  if (region.dim() == 0) {
    test(region.generators().front());
    return;
  }
  for (const auto& p : sample_interior(region, samples, rng)) test(p);
  for (const auto& leaf : dom.leaves()) {
    const auto cut = intersect(region, detail::boundary_set(leaf));
    if (!cut) continue;
    std::vector<SpherePoint> probes = sample_interior(*cut, 16, rng);
    if (auto q = interior_point(*cut)) probes.push_back(*q);
    for (const auto& g : cut->generators()) probes.push_back(g);
    for (const auto& q : probes) {
      if (region.contains(q, Containment::kInterior)) test(q);
    }
  }
}

// Orthonormal tangent vectors at x: the standard axes projected off x.
Mat axis_frame(const SpherePoint& x, int count) {
  const int d = static_cast<int>(x.coords().size());
  Mat f(d, count);
  int k = 0;
  for (int i = 0; i < d && k < count; ++i) {
    Vec v = Vec::Unit(d, i) - x.coords()[i] * x.coords();
    for (int j = 0; j < k; ++j) v -= f.col(j).dot(v) * f.col(j);
    if (v.norm() < 1e-6) continue;
    f.col(k++) = v.normalized();
  }
  return f;
}

Mat random_frame(const SpherePoint& x, int count, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  const int d = static_cast<int>(x.coords().size());
  Mat f(d, count);
  int k = 0;
  while (k < count) {
    Vec v(d);
    for (int i = 0; i < d; ++i) v[i] = gauss(rng);
    v -= v.dot(x.coords()) * x.coords();
    for (int j = 0; j < k; ++j) v -= f.col(j).dot(v) * f.col(j);
    if (v.norm() < 1e-6) continue;
    f.col(k++) = v.normalized();
  }
  return f;
}

// Cheap screening before the full verification.
bool plausible(const Scenario& s, const SimplexWitness& w, std::mt19937_64& rng) {
  if (s.domain.classify(w.ideal_hits.front()) != Membership::kIdeal) return false;
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    if (!s.domain.contains(w.vertices[i])) return false;
  }
  const ConvexBody t = ConvexBody::hull(w.vertices);
  ClauseStats st{"screen", true, 0, 0, std::nullopt};
  probe_region(s.domain, t, 64, rng, st);
  return st.failures == 0;
}

}  // namespace

double simplex_volume(const std::vector<SpherePoint>& vertices) {
  Vec c = Vec::Zero(vertices.front().coords().size());
  for (const auto& v : vertices) c += v.coords();
  if (c.norm() < 1e-12) throw PreconditionError("simplex: vertices are not in a common patch");
  c.normalize();
  std::vector<Vec> z;
  for (const auto& v : vertices) {
    const double h = c.dot(v.coords());
    if (h <= kEpsAngle) throw PreconditionError("simplex: vertices are not in a common patch");
    z.push_back(v.coords() / h - c);
  }
  const int k = static_cast<int>(z.size()) - 1;
  Mat edges(z.front().size(), k);
  for (int i = 0; i < k; ++i) edges.col(i) = z[static_cast<std::size_t>(i + 1)] - z.front();
  const double gram = (edges.transpose() * edges).determinant();
  return std::sqrt(std::max(gram, 0.0)) / std::tgamma(k + 1.0);
}

SimplexWitness corner_simplex(const SpherePoint& anchor, const Mat& frame, double scale) {
  const int k = static_cast<int>(frame.cols());  // m + 1
  SimplexWitness w;
  auto map = [&](const Vec& y) { return SpherePoint(anchor.coords() + scale * (frame * y)); };
  for (int i = 0; i < k; ++i) {
    Vec y = Vec::Ones(k);
    y[i] = 1.0 - k;
    w.vertices.push_back(map(y));
  }
  w.vertices.push_back(map(Vec::Ones(k)));
  w.distinguished_face = static_cast<std::size_t>(k);
  w.ideal_hits.push_back(anchor);
  return w;
}

WitnessReport verify_witness(const Scenario& s, const SimplexWitness& w, std::uint64_t seed) {
  const std::size_t k = w.vertices.size();
  if (k < 3 || static_cast<int>(k) > s.dim + 1 || w.distinguished_face >= k) {
    throw PreconditionError("verify_witness: need m + 2 vertices with 1 <= m <= n - 1");
  }
  if (simplex_volume(w.vertices) < 1e-12) {
    throw PreconditionError("verify_witness: degenerate simplex");
  }
  std::mt19937_64 rng(seed);
  const unsigned all = (1u << k) - 1;
  const unsigned f1 = all & ~(1u << w.distinguished_face);

  ClauseStats interior{"interior", true, 0, 0, std::nullopt};
  probe_region(s.domain, ConvexBody::hull(w.vertices), kWitnessSamples, rng, interior);
  interior.holds = interior.failures == 0;

  ClauseStats faces{"other_faces", true, 0, 0, std::nullopt};
  for (unsigned mask = 1; mask < all; ++mask) {
    if (mask == f1) continue;
    probe_region(s.domain, face_body(w.vertices, mask), kFaceSamples, rng, faces);
  }
  faces.holds = faces.failures == 0;

  ClauseStats hits{"ideal_hits", !w.ideal_hits.empty(), 0, 0, std::nullopt};
  const ConvexBody face1 = face_body(w.vertices, f1);
  for (const auto& p : w.ideal_hits) {
    ++hits.samples;
    if (s.domain.classify(p) == Membership::kIdeal && face1.contains(p, Containment::kInterior)) {
      continue;
    }
    ++hits.failures;
    hits.holds = false;
    if (!hits.first_failure) hits.first_failure = p;
  }

  const bool valid = interior.holds && faces.holds && hits.holds;
  return WitnessReport{valid, {interior, faces, hits}};
}

ProbeResult probe_m_convexity(const Scenario& s, int m, int budget, std::uint64_t seed) {
  if (m < 1 || m > s.dim - 1) throw PreconditionError("probe: m must lie in [1, n - 1]");
  ProbeResult out{std::nullopt, budget, 0, "consistent-with-m-convex"};
  std::mt19937_64 rng(seed);
  std::vector<SpherePoint> anchors;
  for (const auto& leaf : s.domain.leaves()) {
    if (leaf.kind() == Domain::Kind::kPoint) anchors.emplace_back(leaf.vector());
  }
  const auto sampled = s.domain.ideal_samples(8, rng);
  anchors.insert(anchors.end(), sampled.begin(), sampled.end());
  if (anchors.empty()) return out;

  auto attempt = [&](const SimplexWitness& w) {
    ++out.tried;
    if (simplex_volume(w.vertices) < 1e-12 || !plausible(s, w, rng)) return false;
    if (!verify_witness(s, w, seed).valid) return false;
    out.witness = w;
    out.verdict = "witness-found";
    return true;
  };

  const int seeded = budget / 2;
  std::size_t a = 0;
  int variant = 0;
  while (out.tried < seeded) {
    const SpherePoint& x = anchors[a];
    const double sign = variant % 2 == 0 ? 1.0 : -1.0;
    const double scale = kScales[(variant / 2) % std::size(kScales)];
    if (attempt(corner_simplex(x, sign * axis_frame(x, m + 1), scale))) return out;
    if (++a == anchors.size()) {
      a = 0;
      if (++variant == 2 * static_cast<int>(std::size(kScales))) break;
    }
  }
  std::uniform_int_distribution<std::size_t> pick(0, anchors.size() - 1);
  std::uniform_real_distribution<double> log_scale(std::log(0.01), 0.0);
  while (out.tried < budget) {
    const SpherePoint& x = anchors[pick(rng)];
    if (attempt(corner_simplex(x, random_frame(x, m + 1, rng), std::exp(log_scale(rng))))) {
      return out;
    }
  }
  return out;
}

ConvexCheck check_convex(const Scenario& s, int budget, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ConvexCheck out{true, std::nullopt, 0};
  const auto ideal = s.domain.ideal_samples(8, rng);
  std::uniform_int_distribution<std::size_t> pick(0, ideal.empty() ? 0 : ideal.size() - 1);
  auto test = [&](const SpherePoint& p, const SpherePoint& q) {
    ++out.pairs_tested;
    if (dist(p, antipode(q)) < kEpsAngle) return false;
    if (s.domain.arc_inside(Arc::from_segment(minor_segment(p, q)))) return false;
    out.convex_consistent = false;
    out.witness_pair = std::make_pair(p, q);
    return true;
  };
  if (budget < 2) return out;
  const auto pts = sample_domain(s.domain, budget, rng);
  for (int i = 0; i < budget; ++i) {
    const SpherePoint& p = pts[static_cast<std::size_t>(i)];
    std::optional<SpherePoint> q;
    if (i % 2 == 0 && !ideal.empty()) {
      const Vec& x = ideal[pick(rng)].coords();
      const SpherePoint r(2.0 * x.dot(p.coords()) * x - p.coords());
      if (s.domain.contains(r)) q = r;
    }
    if (!q) q = pts[static_cast<std::size_t>((i + 1) % budget)];
    if (test(p, *q)) return out;
  }
  return out;
}

}  // namespace crescent
