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


// Standalone acceptance run: one PASS/FAIL line per criterion.
// Usage: crescent_acceptance [gtest binaries...]

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "crescent/cartan.hpp"
#include "crescent/crescent.hpp"
#include "crescent/probe.hpp"
#include "oracles.hpp"

using namespace crescent;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

SpherePoint e(int n, int i) { return SpherePoint::basis(n, i); }

Outcome criterion1() {
  const auto s = hopf(3);
  SimplexWitness w;
  for (int i = 0; i < 3; ++i) {
    Vec v = Vec::Ones(4);
    v[i + 1] = -2.0;
    w.vertices.emplace_back(v);
  }
  w.vertices.emplace_back(Vec::Ones(4));
  w.distinguished_face = 3;
  w.ideal_hits = {e(3, 0)};
  const bool seeded = verify_witness(s, w).valid;
  const auto r = probe_m_convexity(s, 2, 10000, 0);
  const bool found = r.witness && verify_witness(s, *r.witness).valid;
  return {seeded && found, "seeded simplex " + std::string(seeded ? "valid" : "invalid") +
                               ", probe " + r.verdict + " after " + std::to_string(r.tried)};
}

ConvexBody patch_box(const std::vector<double>& lo, const std::vector<double>& hi) {
  std::vector<Vec> normals;
  for (int i = 0; i < 3; ++i) {
    Vec a = Vec::Zero(4), b = Vec::Zero(4);
    a[0] = -lo[static_cast<std::size_t>(i)];
    a[i + 1] = 1.0;
    b[0] = hi[static_cast<std::size_t>(i)];
    b[i + 1] = -1.0;
    normals.push_back(a);
    normals.push_back(b);
  }
  return ConvexBody::from_halfspaces(3, normals);
}

Outcome criterion2() {
  const auto s = hopf(3);
  const auto c = validate_crescent(s, patch_halfspace({1, 1, 1}, 0));
  if (!c.crescent || c.crescent->kind != CrescentKind::kBihedral) return {false, "R rejected"};
  const auto& R = *c.crescent;
  const auto nice = dips_into(patch_box({0.5, -1.5, -0.5}, {1.5, -0.5, 0.5}), R, CrescentSide::kNu);
  const auto plain = dips_into(patch_halfspace({1, 0, 0}, 0), R, CrescentSide::kNu);
  Vec a1 = Vec::Zero(4), b1 = Vec::Zero(4), a2 = Vec::Zero(4), b2 = Vec::Zero(4);
  a1[1] = 1;
  b1[0] = 1;
  b1[1] = -1;
  a2[2] = 1;
  b2[0] = 1;
  b2[2] = -1;
  const auto f = ConvexBody::from_halfspaces(3, {a1, b1});
  const auto d = ConvexBody::from_halfspaces(3, {a2, b2});
  bool slabs = true;
  for (const Vec& side : {a2, b2})
    slabs &= dips_into(f, d, ConvexBody::from_halfspaces(3, {a2, b2}, {side})).verdict == DipVerdict::kNotDipped;
  for (const Vec& side : {a1, b1})
    slabs &= dips_into(d, f, ConvexBody::from_halfspaces(3, {a1, b1}, {side})).verdict == DipVerdict::kNotDipped;
  const bool ok = nice.verdict == DipVerdict::kNicelyDipped && plain.verdict == DipVerdict::kDipped && slabs;
  return {ok, std::string("box ") + to_string(nice.verdict) + ", half-space " + to_string(plain.verdict) +
                  ", slabs " + (slabs ? "NOT_DIPPED" : "dipped")};
}

Outcome criterion3() {
  const auto s = halfspace_minus_line(3);
  const auto c = validate_crescent(s, patch_halfspace({1, 0, 0}, 0));
  const bool rejected = !c.crescent && c.rejection == CrescentRejection::kInteriorNotInside &&
                        c.witness && s.ideal_membership(*c.witness) == Membership::kIdeal;
  const auto r = probe_m_convexity(s, 2, 100000, 0);
  return {rejected && !r.witness, std::string("clo(H1) ") + (rejected ? "rejected: " + c.detail : "accepted") +
                                      ", probe " + r.verdict + " (" + std::to_string(r.tried) + " simplices)"};
}

Outcome criterion4() {
  const auto s = annulus_two_faced();
  const auto scan = crescent_scan(s, s.candidates);
  std::vector<Crescent> cs;
  std::vector<std::size_t> idx;
  for (const auto& en : scan)
    if (en.check && en.check->crescent) {
      cs.push_back(*en.check->crescent);
      idx.push_back(en.index);
    }
  const bool scan_ok = idx == std::vector<std::size_t>{0, 1};
  const auto classes = lambda_classes(s, cs);
  bool classes_ok = classes.size() == 2;
  for (const auto& c : classes) classes_ok &= c.members.size() == 1;
  const auto comps = two_faced_components(s, cs);
  bool seg_ok = comps.size() == 1 && comps[0].exact && !comps[0].start_included && !comps[0].end_included;
  if (seg_ok) {
    const auto& a = *comps[0].start;
    const auto& b = *comps[0].end;
    seg_ok = (dist(a, e(2, 0)) <= 1e-9 && dist(b, e(2, 2)) <= 1e-9) ||
             (dist(a, e(2, 2)) <= 1e-9 && dist(b, e(2, 0)) <= 1e-9);
  }
  const auto eq = equivariance_check(s, classes);
  const bool ok = scan_ok && classes_ok && seg_ok && eq.holds && eq.complete;
  return {ok, "crescents " + std::to_string(cs.size()) + ", classes " + std::to_string(classes.size()) +
                  ", components " + std::to_string(comps.size()) + ", equivariance " +
                  (eq.holds ? "holds" : "fails")};
}

Outcome criterion5() {
  std::mt19937_64 rng(0);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int failures = 0;
  double worst_rec = 0, worst_orth = 0;
  for (int t = 0; t < 1000; ++t) {
    const int size = 2 + t % 6;
    Mat m(size, size);
    do {
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) m(i, j) = u(rng);
    } while (std::abs(m.determinant()) < 1e-6);
    const Automorphism g(m);
    const auto k = ktk_decompose(g);
    const Mat id = Mat::Identity(size, size);
    const double rec = (k.k1.matrix() * k.d.asDiagonal() * k.k2.matrix() - g.matrix()).norm();
    const double orth = std::max((k.k1.matrix().transpose() * k.k1.matrix() - id).norm(),
                                 (k.k2.matrix().transpose() * k.k2.matrix() - id).norm());
    bool sorted = true;
    for (int i = 0; i + 1 < size; ++i) sorted &= k.d[i] >= k.d[i + 1];
    worst_rec = std::max(worst_rec, rec);
    worst_orth = std::max(worst_orth, orth);
    if (rec > 1e-9 || orth > 1e-12 || !sorted) ++failures;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d failures, max reconstruction %.2e, max orthogonality %.2e", failures,
                worst_rec, worst_orth);
  return {failures == 0, buf};
}

// Hull of g^{-i}(boundary of L) against {x0 >= 0}, computed from the
// preimages directly: every preimage must satisfy x0 >= 0, and every point
// of the boundary circle must lie near an arc between azimuth neighbours.
double oracle_pullback_distance(int i, double radius, int count) {
  const double s = std::pow(4.0, -i);
  std::vector<Vec> pre;
  double worst = 0.0;
  for (int k = 0; k < count; ++k) {
    const double th = 2.0 * oracle::kPi * k / count;
    Vec p(3);
    p << std::cos(radius), std::sin(radius) * std::cos(th), std::sin(radius) * std::sin(th);
    Vec q(3);
    q << s * p[0], p[1], p[2] / s;
    q.normalize();
    if (q[0] < 0) return oracle::kPi;
    worst = std::max(worst, std::asin(std::min(1.0, q[0])));
    pre.push_back(q);
  }
  std::sort(pre.begin(), pre.end(), [](const Vec& a, const Vec& b) {
    return std::atan2(a[2], a[1]) < std::atan2(b[2], b[1]);
  });
  for (int k = 0; k < 3600; ++k) {
    const double ph = 2.0 * oracle::kPi * k / 3600 - oracle::kPi;
    Vec u(3);
    u << 0.0, std::cos(ph), std::sin(ph);
    double best = oracle::kPi;
    for (std::size_t j = 0; j < pre.size(); ++j) {
      const Vec& a = pre[j];
      const Vec& b = pre[(j + 1) % pre.size()];
      if (oracle::angle(a, b) < oracle::kPi - 1e-9) best = std::min(best, oracle::arc_distance(u, a, b));
    }
    worst = std::max(worst, best);
  }
  return worst;
}

Outcome criterion6() {
  const auto g = Automorphism::diagonal((Vec(3) << 4, 1, 0.25).finished());
  std::vector<Automorphism> phis;
  for (int i = 1; i <= 40; ++i) phis.push_back(g.pow(i));
  const std::vector<MetricBall> balls(40, MetricBall{SpherePoint{1, 1, 1}, 0.1});
  const MetricBall L{e(2, 0), 0.2};
  BlowupOptions opt;
  opt.cauchy_tol = 1e-6;
  const auto r = blowup_limit(phis, balls, L, opt);
  const double oracle_d = oracle_pullback_distance(40, 0.2, 512);
  const bool center_ok = r.limit_hemisphere && dist(r.limit_hemisphere->center, e(2, 0)) <= 1e-6;
  const bool ok = r.is_hemisphere && center_ok && !r.hausdorff_trace.empty() &&
                  r.hausdorff_trace.back() <= 1e-6 && oracle_d <= 1e-6;
  char buf[200];
  std::snprintf(buf, sizeof buf, "is_hemisphere %s, final trace %.2e, oracle distance %.2e",
                r.is_hemisphere ? "true" : "false",
                r.hausdorff_trace.empty() ? -1.0 : r.hausdorff_trace.back(), oracle_d);
  return {ok, buf};
}

std::vector<SpherePoint> random_generators(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 6), mode(0, 3), coin(0, 1);
  const int k = count(rng);
  const int m = mode(rng);
  Mat basis = Mat::Identity(n + 1, n + 1);
  if (m >= 2) {
    std::uniform_int_distribution<int> r(1, n);
    const int dim = r(rng);
    Mat raw(n + 1, dim);
    for (int j = 0; j < dim; ++j) raw.col(j) = oracle::random_unit(n + 1, rng);
    basis = Eigen::HouseholderQR<Mat>(raw).householderQ() * Mat::Identity(n + 1, dim);
  }
  std::vector<SpherePoint> out;
  while (static_cast<int>(out.size()) < k) {
    const Vec v = basis * oracle::random_unit(static_cast<int>(basis.cols()), rng);
    out.emplace_back(v);
    if ((m == 1 || m == 3) && coin(rng) && static_cast<int>(out.size()) < k) out.emplace_back(-v);
  }
  return out;
}

Outcome criterion7() {
  std::mt19937_64 rng(0);
  int checked = 0, bad = 0;
  for (int trial = 0; checked < 500; ++trial) {
    const int n = 2 + trial % 2;
    const auto gens = random_generators(n, rng);
    std::vector<Vec> g;
    for (const auto& p : gens) g.push_back(p.coords());
    const auto brute = oracle::brute_classify(g);
    if (brute.span_dim == 1 && brute.lineality == 1) continue;
    ++checked;
    const auto c = classify(ConvexBody::hull(gens));
    if (static_cast<int>(c.kind) != brute.kind || c.max_great_sphere_dim != brute.lineality - 1) ++bad;
  }
  return {bad == 0, std::to_string(bad) + " disagreements in " + std::to_string(checked) + " sets"};
}

Outcome criterion8() {
  auto at = [](double a) { return SpherePoint{std::cos(a), std::sin(a), 0.0}; };
  const double pi = oracle::kPi;
  const double base = cross_ratio(at(0), at(pi / 2), at(pi / 3), at(pi / 6));
  std::mt19937_64 rng(0);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  int used = 0;
  while (used < 100) {
    Mat m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = u(rng);
    if (std::abs(m.determinant()) < 1e-2) continue;
    const Automorphism g(m);
    const SpherePoint o = act(g, at(0)), s = act(g, at(pi / 2)), q = act(g, at(pi / 3)), p = act(g, at(pi / 6));
    // images must stay on an arc shorter than pi
    if (dist(o, s) + 1e-9 >= pi || dist(o, q) + dist(q, s) > dist(o, s) + 1e-9) continue;
    ++used;
    worst = std::max(worst, std::abs(cross_ratio(o, s, q, p) - base));
  }
  char buf[120];
  std::snprintf(buf, sizeof buf, "value %.15f, max deviation %.2e over %d maps", base, worst, used);
  return {std::abs(base - 3.0) <= 1e-12 && worst <= 1e-9, buf};
}

Outcome criterion9(const std::vector<std::string>& binaries) {
  if (binaries.empty()) return {false, "no test binaries given"};
  bool ok = true;
  for (const auto& b : binaries) {
    const std::string cmd = b + " --gtest_brief=1 > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    ok &= WIFEXITED(status) && WEXITSTATUS(status) == 0;
  }
  return {ok, std::to_string(binaries.size()) + " suites " + (ok ? "green" : "red")};
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> binaries(argv + 1, argv + argc);
  struct Row {
    int id;
    double limit_s;  // 0 when no runtime bound
    std::function<Outcome()> run;
  };
  const std::vector<Row> rows = {
      {1, 5, criterion1},  {2, 0, criterion2},  {3, 60, criterion3},
      {4, 10, criterion4}, {5, 0, criterion5},  {6, 5, criterion6},
      {7, 0, criterion7},  {8, 0, criterion8},  {9, 300, [&] { return criterion9(binaries); }},
  };
  int failed = 0;
  for (const auto& row : rows) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = row.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (row.limit_s > 0 && secs >= row.limit_s) {
      o.pass = false;
      o.detail += " (over time limit)";
    }
    std::printf("criterion %d: %s  %s  [%.2f s]\n", row.id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
