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

#include "crescent/crescent.hpp"
#include "oracles.hpp"

namespace crescent {
namespace {

SpherePoint e(int n, int i) { return SpherePoint::basis(n, i); }

Crescent accept(const Scenario& s, const ConvexBody& b) {
  const auto c = validate_crescent(s, b);
  if (!c.crescent) throw std::runtime_error("candidate rejected: " + c.detail);
  return *c.crescent;
}

// Axis-aligned box lo <= x <= hi in the affine patch.
ConvexBody patch_box(const std::vector<double>& lo, const std::vector<double>& hi) {
  const int n = static_cast<int>(lo.size());
  std::vector<Vec> normals;
  for (int i = 0; i < n; ++i) {
    Vec a = Vec::Zero(n + 1), b = Vec::Zero(n + 1);
    a[0] = -lo[static_cast<std::size_t>(i)];
    a[i + 1] = 1.0;
    b[0] = hi[static_cast<std::size_t>(i)];
    b[i + 1] = -1.0;
    normals.push_back(a);
    normals.push_back(b);
  }
  return ConvexBody::from_halfspaces(n, normals);
}

// Small cube of angular half-width about r centered at c.
ConvexBody tiny_ball(const SpherePoint& c, double r) {
  const Mat frame = tangent_frame(c);
  const int n = c.dim();
  std::vector<SpherePoint> pts;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Vec v = c.coords();
    for (int i = 0; i < n; ++i) v += ((mask >> i) & 1 ? r : -r) / std::sqrt(double(n)) * frame.col(i);
    pts.emplace_back(v);
  }
  return ConvexBody::hull(pts);
}

Mat rotation12(int n, double a) {
  Mat m = Mat::Identity(n + 1, n + 1);
  m(1, 1) = std::cos(a);
  m(1, 2) = -std::sin(a);
  m(2, 1) = std::sin(a);
  m(2, 2) = std::cos(a);
  return m;
}

TEST(Validate, HopfHalfspaceIsBihedral) {
  const auto s = hopf(3);
  const auto c = validate_crescent(s, patch_halfspace({1, 1, 1}, 0));
  ASSERT_TRUE(c.crescent.has_value()) << c.detail;
  EXPECT_EQ(c.crescent->kind, CrescentKind::kBihedral);
  ASSERT_EQ(c.crescent->alpha.size(), 1u);
  EXPECT_TRUE(c.crescent->in_alpha(SpherePoint{0, 1, 1, 1}));
  EXPECT_TRUE(c.crescent->in_nu(patch_point({1, -1, 0})));
}

TEST(Validate, HalfspaceMinusLineRejected) {
  const auto s = halfspace_minus_line(3);
  const auto c = validate_crescent(s, patch_halfspace({1, 0, 0}, 0));
  EXPECT_FALSE(c.crescent.has_value());
  ASSERT_TRUE(c.rejection.has_value());
  EXPECT_EQ(*c.rejection, CrescentRejection::kInteriorNotInside);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_EQ(s.ideal_membership(*c.witness), Membership::kIdeal);
}

TEST(Validate, RejectionReasons) {
  const auto a = annulus_two_faced();
  const auto scan = crescent_scan(a, a.candidates);
  ASSERT_EQ(scan.size(), 4u);
  EXPECT_TRUE(scan[0].check->crescent.has_value());
  EXPECT_TRUE(scan[1].check->crescent.has_value());
  EXPECT_EQ(*scan[2].check->rejection, CrescentRejection::kNoIdealSide);
  EXPECT_EQ(*scan[3].check->rejection, CrescentRejection::kInteriorNotInside);

  const auto wedge = make_scenario(
      "wedge", 2, Domain::intersection({Domain::open_hemisphere(e(2, 1)), Domain::open_hemisphere(e(2, 2))}), {});
  const auto w = validate_crescent(wedge, ConvexBody::from_halfspaces(2, {e(2, 1).coords(), e(2, 2).coords()}));
  EXPECT_EQ(*w.rejection, CrescentRejection::kAllSidesIdeal);
}

TEST(Validate, BoundedBodiesAreNotCandidates) {
  const auto s = hopf(3);
  const auto box = patch_box({0.5, -1.5, -0.5}, {1.5, -0.5, 0.5});
  EXPECT_THROW(validate_crescent(s, box), PreconditionError);
  const auto scan = crescent_scan(s, {box});
  ASSERT_EQ(scan.size(), 1u);
  EXPECT_FALSE(scan[0].check.has_value());
}

TEST(Validate, HemisphericCrescent) {
  // closed hemisphere whose boundary is ideal on one half only
  Mat eq(3, 2);
  eq << 0, 0, 1, 0, 0, 1;
  const auto d = Domain::difference(
      Domain::closed_hemisphere(e(2, 0)),
      Domain::intersection({Domain::great_sphere(eq), Domain::closed_hemisphere(e(2, 1))}));
  const auto s = make_scenario("half-open", 2, d, {});
  const auto c = validate_crescent(s, ConvexBody::from_halfspaces(2, {e(2, 0).coords()}));
  ASSERT_TRUE(c.crescent.has_value()) << c.detail;
  EXPECT_EQ(c.crescent->kind, CrescentKind::kHemispheric);
  EXPECT_TRUE(c.crescent->in_alpha(SpherePoint{0, 1, 0.3}));
  EXPECT_TRUE(c.crescent->in_nu(SpherePoint{0, -1, 0.3}));
  EXPECT_THROW(lambda_classes(s, {*c.crescent}), UsageError);
}

std::vector<Crescent> fixture_crescents(const Scenario& s) {
  std::vector<Crescent> out;
  for (const auto& e : crescent_scan(s, s.candidates))
    if (e.check && e.check->crescent) out.push_back(*e.check->crescent);
  return out;
}

TEST(Crescent, DefinitionHoldsOnFixtures) {
  std::mt19937_64 rng(50);
  for (const char* name : {"hopf(2)", "hopf(3)", "annulus-two-faced"}) {
    const auto s = fixture(name);
    const auto cs = fixture_crescents(s);
    ASSERT_FALSE(cs.empty()) << name;
    for (const auto& c : cs) {
      for (const auto& p : sample_interior(c.body, 10000, rng))
        ASSERT_EQ(s.ideal_membership(p), Membership::kInterior) << name;
      for (const auto& a : c.alpha)
        for (const auto& p : sample_interior(a, 2000, rng))
          ASSERT_EQ(s.ideal_membership(p), Membership::kIdeal) << name;
      bool nu_point = false;
      for (const auto& p : sample_interior(c.nu_hull, 2000, rng))
        nu_point |= s.ideal_membership(p) == Membership::kInterior;
      EXPECT_TRUE(nu_point) << name;
    }
  }
}

TEST(Dip, Examples) {
  const auto s = hopf(3);
  const auto R = accept(s, patch_halfspace({1, 1, 1}, 0));
  const auto box = patch_box({0.5, -1.5, -0.5}, {1.5, -0.5, 0.5});
  EXPECT_EQ(dips_into(box, R, CrescentSide::kNu).verdict, DipVerdict::kNicelyDipped);
  const auto S = patch_halfspace({1, 0, 0}, 0);
  EXPECT_EQ(dips_into(S, R, CrescentSide::kNu).verdict, DipVerdict::kDipped);
  const auto inside = patch_box({1, 1, 1}, {2, 2, 2});
  EXPECT_EQ(dips_into(inside, R, CrescentSide::kNu).verdict, DipVerdict::kNotDipped);
}

TEST(Dip, SlabsDoNotDip) {
  auto slab = [](int axis) {
    Vec a = Vec::Zero(4), b = Vec::Zero(4);
    a[axis] = 1.0;
    b[0] = 1.0;
    b[axis] = -1.0;
    return std::pair{a, b};
  };
  const auto [a1, b1] = slab(1);
  const auto [a2, b2] = slab(2);
  const auto f = ConvexBody::from_halfspaces(3, {a1, b1});
  const auto d = ConvexBody::from_halfspaces(3, {a2, b2});
  for (const Vec& side : {a2, b2}) {
    const auto alpha = ConvexBody::from_halfspaces(3, {a2, b2}, {side});
    const auto r = dips_into(f, d, alpha);
    EXPECT_EQ(r.verdict, DipVerdict::kNotDipped);
  }
  for (const Vec& side : {a1, b1}) {
    const auto alpha = ConvexBody::from_halfspaces(3, {a1, b1}, {side});
    EXPECT_EQ(dips_into(d, f, alpha).verdict, DipVerdict::kNotDipped);
  }
}

bool clause(const DipReport& r, const std::string& name) {
  for (const auto& c : r.clauses)
    if (c.name == name) return c.holds;
  ADD_FAILURE() << "missing clause " << name;
  return false;
}

TEST(Dip, GradingOnFixturePairs) {
  for (const char* name : {"hopf(2)", "hopf(3)", "annulus-two-faced"}) {
    const auto s = fixture(name);
    const auto cs = fixture_crescents(s);
    for (const auto& f : cs) {
      for (const auto& r : cs) {
        for (auto side : {CrescentSide::kAlpha, CrescentSide::kNu}) {
          const auto rep = dips_into(f.body, r, side);
          if (rep.verdict == DipVerdict::kNicelyDipped) {
            EXPECT_TRUE(clause(rep, "avoids_other_faces"));
            EXPECT_TRUE(clause(rep, "meets_face_inside_alpha"));
          }
          if (rep.verdict != DipVerdict::kNotDipped) {
            EXPECT_TRUE(clause(rep, "overlap"));
            EXPECT_TRUE(clause(rep, "beta_ball"));
            EXPECT_TRUE(clause(rep, "two_components"));
            EXPECT_TRUE(clause(rep, "closure_of_component"));
          }
        }
      }
    }
  }
}

TEST(Dip, TinyBallDichotomy) {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(-3.0, 3.0), t(-0.05, 0.05);
  const auto s = hopf(3);
  const auto R = accept(s, patch_halfspace({1, 1, 1}, 0));
  int tested = 0, nice = 0, inside = 0;
  while (tested < 200) {
    Vec y(3);
    y << u(rng), u(rng), u(rng);
    y.array() -= y.sum() / 3.0 - t(rng);
    const auto c = patch_point({y[0], y[1], y[2]});
    const double to_ideal = std::min(dist(c, e(3, 0)), std::asin(c[0]));
    const double r = std::min(0.02, 0.3 * to_ideal);
    const auto ball = tiny_ball(c, r);
    if (!interiors_overlap(ball, R.body)) continue;
    ++tested;
    const bool contained = body_subset(ball, R.body);
    const bool nicely = dips_into(ball, R, CrescentSide::kNu).verdict == DipVerdict::kNicelyDipped;
    EXPECT_NE(contained, nicely) << y.transpose();
    nice += nicely;
    inside += contained;
  }
  EXPECT_GT(nice, 10);
  EXPECT_GT(inside, 10);
}

TEST(Transversal, HopfPair) {
  for (int n : {2, 3, 4}) {
    const auto s = hopf(n);
    std::vector<double> ones(static_cast<std::size_t>(n), 1.0), first(static_cast<std::size_t>(n), 0.0);
    first[0] = 1.0;
    const auto R = accept(s, patch_halfspace(ones, 0));
    const auto S = accept(s, patch_halfspace(first, 0));
    const auto a = transversal_report(R, S);
    const auto b = transversal_report(S, R);
    EXPECT_EQ(a.kind, TransversalKind::kTransversal) << n;
    EXPECT_EQ(b.kind, TransversalKind::kTransversal) << n;
    ASSERT_EQ(a.conditions.size(), 12u);
    for (const auto& c : a.conditions) EXPECT_TRUE(c.holds) << c.name;
  }
}

TEST(Transversal, ContainedAndDisjoint) {
  const auto s = hopf(3);
  const auto R = accept(s, patch_halfspace({1, 1, 1}, 0));
  const auto S = accept(s, patch_halfspace({1, 0, 0}, 0));
  const auto T = accept(s, patch_halfspace({-1, 0, 0}, 0));
  const auto rr = transversal_report(R, R);
  EXPECT_EQ(rr.kind, TransversalKind::kContained);
  EXPECT_EQ(rr.containment, "equal");
  EXPECT_EQ(transversal_report(S, T).kind, TransversalKind::kDisjoint);
  EXPECT_EQ(transversal_report(T, S).kind, TransversalKind::kDisjoint);
}

TEST(Transversal, SymmetricOnFixtures) {
  for (const char* name : {"hopf(3)", "annulus-two-faced"}) {
    const auto s = fixture(name);
    const auto cs = fixture_crescents(s);
    for (const auto& a : cs)
      for (const auto& b : cs) {
        const auto ab = transversal_report(a, b), ba = transversal_report(b, a);
        EXPECT_EQ(ab.kind, ba.kind);
        if (ab.kind == TransversalKind::kTransversal) {
          for (std::size_t i = 0; i < ab.conditions.size(); ++i)
            EXPECT_EQ(ab.conditions[i].holds, ba.conditions[i ^ 1u].holds);
        }
      }
  }
}

TEST(Transversal, ScenarioMismatchIsUsageError) {
  const auto s1 = hopf(3), s2 = hopf(3);
  EXPECT_THROW(transversal_report(accept(s1, patch_halfspace({1, 1, 1}, 0)),
                                  accept(s2, patch_halfspace({1, 1, 1}, 0))),
               UsageError);
}

void expect_partition(const std::vector<LambdaClass>& classes, std::size_t count) {
  std::vector<int> seen(count, 0);
  for (const auto& c : classes)
    for (auto m : c.members) ++seen[m];
  for (int v : seen) EXPECT_EQ(v, 1);
}

TEST(Lambda, AnnulusHasTwoClasses) {
  const auto s = annulus_two_faced();
  const auto cs = fixture_crescents(s);
  ASSERT_EQ(cs.size(), 2u);
  const auto classes = lambda_classes(s, cs);
  ASSERT_EQ(classes.size(), 2u);
  expect_partition(classes, 2);
  for (const auto& c : classes) {
    EXPECT_EQ(c.members.size(), 1u);
    EXPECT_LT(c.boundary_residual, kEpsAngle);
  }
  const auto eq = equivariance_check(s, classes);
  EXPECT_TRUE(eq.holds);
  EXPECT_TRUE(eq.complete);
}

TEST(Lambda, SingleAndRotatedPair) {
  const auto s = hopf(3);
  const auto R = accept(s, patch_halfspace({1, 1, 1}, 0));
  const auto one = lambda_classes(s, {R});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(two_faced_components(s, {R}).empty());

  const auto R2 = accept(s, R.body.transformed(Automorphism(rotation12(3, 0.2))));
  const auto two = lambda_classes(s, {R, R2});
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].members.size(), 2u);
  EXPECT_LT(two[0].boundary_residual, kEpsAngle);
  // alpha spans lie in the fitted sphere
  for (const auto& c : two[0].crescents)
    for (const auto& g : c.alpha.front().generators())
      EXPECT_LT(std::abs(g.coords().dot(two[0].boundary_normal)), kEpsAngle);
  EXPECT_TRUE(two_faced_components(s, {R, R2}).empty());
}

TEST(Lambda, RandomFamiliesPartition) {
  std::mt19937_64 rng(52);
  const auto s = hopf(3);
  for (int t = 0; t < 10; ++t) {
    std::vector<Crescent> cs;
    for (int k = 0; k < 5; ++k) {
      const Vec c = oracle::random_unit(3, rng);
      cs.push_back(accept(s, patch_halfspace({c[0], c[1], c[2]}, 0)));
    }
    expect_partition(lambda_classes(s, cs), cs.size());
  }
}

TEST(TwoFaced, AnnulusSegment) {
  const auto s = annulus_two_faced();
  const auto cs = fixture_crescents(s);
  const auto comps = two_faced_components(s, cs);
  ASSERT_EQ(comps.size(), 1u);
  const auto& c = comps[0];
  ASSERT_TRUE(c.exact);
  const bool fwd = dist(*c.start, e(2, 0)) < 1e-9 && dist(*c.end, e(2, 2)) < 1e-9;
  const bool bwd = dist(*c.start, e(2, 2)) < 1e-9 && dist(*c.end, e(2, 0)) < 1e-9;
  EXPECT_TRUE(fwd || bwd);
  EXPECT_FALSE(c.start_included);
  EXPECT_FALSE(c.end_included);
  EXPECT_TRUE(c.disjoint_from_interiors);
  for (const auto& p : c.samples) {
    EXPECT_NEAR(p[1], 0.0, 1e-12);
    for (const auto& r : cs) EXPECT_FALSE(r.body.contains(p, Containment::kInterior));
  }
}

TEST(TwoFaced, OppositeHopfHalfspaces) {
  for (int n : {2, 3}) {
    const auto s = hopf(n);
    std::vector<double> c(static_cast<std::size_t>(n), 0.0);
    c[0] = 1.0;
    const auto S = accept(s, patch_halfspace(c, 0));
    c[0] = -1.0;
    const auto T = accept(s, patch_halfspace(c, 0));
    const auto comps = two_faced_components(s, {S, T});
    EXPECT_FALSE(comps.empty()) << n;
    for (const auto& k : comps) {
      EXPECT_TRUE(k.disjoint_from_interiors);
      for (const auto& p : k.samples) {
        EXPECT_EQ(s.ideal_membership(p), Membership::kInterior);
        EXPECT_FALSE(S.body.contains(p, Containment::kInterior));
        EXPECT_FALSE(T.body.contains(p, Containment::kInterior));
      }
    }
  }
}

TEST(Equivariance, IdentityAndHopf) {
  const auto s = hopf(3);
  const auto R = accept(s, patch_halfspace({1, 1, 1}, 0));
  const auto classes = lambda_classes(s, {R});
  const auto eq = equivariance_check(s, classes);
  EXPECT_TRUE(eq.holds);
  EXPECT_TRUE(eq.complete);

  const auto id = make_scenario("hopf-identity", 3, s.domain, {Automorphism::identity(3)});
  const auto Ri = accept(id, patch_halfspace({1, 1, 1}, 0));
  EXPECT_TRUE(equivariance_check(id, lambda_classes(id, {Ri})).holds);
}

TEST(Equivariance, MissingImagesAreReported) {
  const auto s = annulus_two_faced();
  Mat swap = Mat::Zero(3, 3);
  swap(0, 2) = swap(2, 0) = 1.0;
  swap(1, 1) = -1.0;
  const auto t = make_scenario("annulus-swap", 2, s.domain, {Automorphism(swap)});
  const auto B1 = accept(t, s.candidates[0]);
  const auto eq = equivariance_check(t, lambda_classes(t, {B1}));
  EXPECT_FALSE(eq.complete);
  ASSERT_EQ(eq.missing.size(), 1u);
}

}  // namespace
}  // namespace crescent
