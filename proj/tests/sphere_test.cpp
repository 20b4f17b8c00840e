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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "crescent/domain.hpp"
#include "crescent/sphere.hpp"
#include "oracles.hpp"

namespace crescent {
namespace {

constexpr double kPi = oracle::kPi;

SpherePoint rand_point(int n, std::mt19937_64& rng) { return SpherePoint(oracle::random_unit(n + 1, rng)); }

Automorphism rand_auto(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat m(n + 1, n + 1);
  do {
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) m(i, j) = u(rng);
  } while (std::abs(m.determinant()) < 1e-2);
  return Automorphism(m);
}

TEST(Dist, Examples) {
  const auto e0 = SpherePoint::basis(2, 0), e1 = SpherePoint::basis(2, 1);
  EXPECT_EQ(dist(e0, e0), 0.0);
  EXPECT_NEAR(dist(e0, antipode(e0)), kPi, 1e-15);
  EXPECT_NEAR(dist(e0, e1), kPi / 2, 1e-15);
}

TEST(Dist, MetricAxioms) {
  std::mt19937_64 rng(0);
  for (int k = 0; k < 1000; ++k) {
    const int n = 1 + k % 4;
    const auto p = rand_point(n, rng), q = rand_point(n, rng), r = rand_point(n, rng);
    EXPECT_EQ(dist(p, q), dist(q, p));
    EXPECT_LE(dist(p, r), dist(p, q) + dist(q, r) + 1e-12);
    EXPECT_NEAR(dist(p, q) + dist(p, antipode(q)), kPi, 1e-9);
  }
}

TEST(Antipode, Involution) {
  std::mt19937_64 rng(1);
  const auto e0 = SpherePoint::basis(3, 0);
  EXPECT_EQ(antipode(e0).coords(), -e0.coords());
  for (int k = 0; k < 100; ++k) {
    const auto p = rand_point(3, rng);
    EXPECT_EQ(antipode(antipode(p)).coords(), p.coords());
    EXPECT_NEAR(dist(p, antipode(p)), kPi, 1e-12);
  }
}

TEST(Act, Examples) {
  const auto g = Automorphism::diagonal((Vec(3) << 2, 1, 0.5).finished());
  EXPECT_LT(dist(act(g, SpherePoint{0, 0, 1}), SpherePoint{0, 0, 1}), 1e-15);
  const auto img = act(g, SpherePoint{1, 0, 1});
  const Vec want = Vec((Vec(3) << 2, 0, 0.5).finished()).normalized();
  EXPECT_LT((img.coords() - want).norm(), 1e-15);
  std::mt19937_64 rng(2);
  const auto p = rand_point(2, rng);
  EXPECT_LT(dist(act(Automorphism::identity(2), p), p), 1e-15);
}

TEST(Act, NormalizedDeterminant) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    const auto g = rand_auto(1 + k % 5, rng);
    EXPECT_NEAR(std::abs(g.matrix().determinant()), 1.0, 1e-9);
  }
}

TEST(Act, MapsGreatCirclesToGreatCircles) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  for (int k = 0; k < 200; ++k) {
    const int n = 2 + k % 3;
    const auto seg = minor_segment(rand_point(n, rng), rand_point(n, rng));
    const auto g = rand_auto(n, rng);
    std::vector<SpherePoint> pts{act(g, seg.start), act(g, seg.at(0.5 * seg.length)), act(g, seg.end)};
    Mat m(3, n + 1);
    for (int i = 0; i < 3; ++i) m.row(i) = pts[static_cast<std::size_t>(i)].coords().transpose();
    Eigen::JacobiSVD<Mat> svd(m);
    EXPECT_LT(svd.singularValues()[2], 1e-9);
  }
}

TEST(MinorSegment, Examples) {
  const auto e0 = SpherePoint::basis(3, 0), e1 = SpherePoint::basis(3, 1);
  const auto s = minor_segment(e0, e1);
  EXPECT_NEAR(s.length, kPi / 2, 1e-15);
  const Vec mid = Vec((Vec(4) << 1, 1, 0, 0).finished()).normalized();
  EXPECT_LT((s.midpoint().coords() - mid).norm(), 1e-15);
  EXPECT_THROW(minor_segment(e0, antipode(e0)), PreconditionError);
}

// Points at arc positions t on one great circle.
std::vector<SpherePoint> on_arc(std::initializer_list<double> ts) {
  const Arc arc{Vec::Unit(3, 0), Vec::Unit(3, 1), 2 * kPi};
  std::vector<SpherePoint> out;
  for (double t : ts) out.push_back(arc.at(t));
  return out;
}

TEST(CrossRatio, QuotedConfiguration) {
  const auto p = on_arc({0, kPi / 2, kPi / 3, kPi / 6});
  EXPECT_NEAR(cross_ratio(p[0], p[1], p[2], p[3]), 3.0, 1e-12);
}

TEST(CrossRatio, CoincidentPointsGiveZero) {
  const auto p = on_arc({0.1, 0.9, 0.1, 0.5});
  EXPECT_EQ(cross_ratio(p[0], p[1], p[2], p[3]), 0.0);
}

TEST(CrossRatio, InvariantUnderAutomorphisms) {
  const auto p = on_arc({0, kPi / 2, kPi / 3, kPi / 6});
  const auto g = Automorphism::diagonal((Vec(3) << 2, 1, 0.5).finished());
  EXPECT_NEAR(cross_ratio(act(g, p[0]), act(g, p[1]), act(g, p[2]), act(g, p[3])), 3.0, 1e-9);
  std::mt19937_64 rng(5);
  int checked = 0;
  while (checked < 100) {
    const auto h = rand_auto(2, rng);
    std::vector<SpherePoint> q;
    for (const auto& x : p) q.push_back(act(h, x));
    // the images must still lie on an arc shorter than pi
    if (dist(q[0], q[1]) + 1e-9 < dist(q[0], q[2]) + dist(q[2], q[1]) ||
        dist(q[0], q[1]) > kPi - 1e-3) {
      continue;
    }
    ++checked;
    EXPECT_NEAR(cross_ratio(q[0], q[1], q[2], q[3]), 3.0, 1e-9);
  }
}

TEST(CrossRatio, RandomCollinearQuadruples) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    const int n = 2 + k % 3;
    const auto seg = minor_segment(rand_point(n, rng), rand_point(n, rng));
    if (seg.length < 0.1 || seg.length > kPi - 0.1) continue;
    double t[4];
    for (double& x : t) x = seg.length * u(rng);
    const auto o = seg.at(t[0]), s = seg.at(t[1]), q = seg.at(t[2]), p = seg.at(t[3]);
    if (dist(s, q) < 1e-3 || dist(o, p) < 1e-3) continue;
    const double before = cross_ratio(o, s, q, p);
    const auto g = rand_auto(n, rng);
    const auto go = act(g, o), gs = act(g, s), gq = act(g, q), gp = act(g, p);
    // an automorphism may carry the arc across the antipode; skip those
    const double span = std::max({dist(go, gs), dist(go, gq), dist(go, gp), dist(gs, gq), dist(gs, gp), dist(gq, gp)});
    if (span > kPi - 1e-3) continue;
    EXPECT_NEAR(cross_ratio(go, gs, gq, gp), before, 1e-9 * std::max(1.0, std::abs(before)));
  }
}

TEST(AffinePatch, Examples) {
  const Hemisphere patch{SpherePoint::basis(2, 0), Mat(), false};
  EXPECT_LT(affine_patch_coords(SpherePoint::basis(2, 0), patch).norm(), 1e-15);
  const Vec x = affine_patch_coords(SpherePoint{1, 1, 0}, patch);
  EXPECT_NEAR(x[0], 1.0, 1e-15);
  EXPECT_NEAR(x[1], 0.0, 1e-15);
  EXPECT_THROW(affine_patch_coords(SpherePoint::basis(2, 1), patch), PreconditionError);
}

}  // namespace
}  // namespace crescent
