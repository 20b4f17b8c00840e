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

#include "crescent/scenario.hpp"

#include <atomic>
#include <regex>

namespace crescent {
namespace {

std::atomic<std::uint64_t> next_id{1};

SpherePoint e(int n, int i) { return SpherePoint::basis(n, i); }
SpherePoint neg_e(int n, int i) { return antipode(SpherePoint::basis(n, i)); }

}  // namespace

Scenario make_scenario(std::string name, int dim, Domain domain,
                       std::vector<Automorphism> generators,
                       std::optional<std::string> fixture_tag,
                       std::vector<ConvexBody> candidates) {
  if (dim < 2) throw PreconditionError("scenario: dimension must be at least 2");
  if (domain.ambient_dim() != dim + 1) {
    throw PreconditionError("scenario: domain does not live in S^" + std::to_string(dim));
  }
  for (const auto& g : generators) {
    if (g.dim() != dim) throw PreconditionError("scenario: generator of wrong size");
  }
  for (const auto& c : candidates) {
    if (c.ambient_dim() != dim + 1) throw PreconditionError("scenario: candidate of wrong size");
  }
  return Scenario{std::move(name),       dim,
                  std::move(domain),     std::move(generators),
                  std::move(fixture_tag), std::move(candidates),
                  next_id.fetch_add(1)};
}

InvarianceReport check_generator_invariance(const Scenario& s, int samples,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto pts = sample_domain(s.domain, samples, rng);
  InvarianceReport report{true, samples, {}};
  for (const auto& g : s.generators) {
    const Automorphism inv = g.inverse();
    std::optional<SpherePoint> bad;
    for (const auto& p : pts) {
      if (!s.domain.contains(act(g, p)) || !s.domain.contains(act(inv, p))) {
        bad = p;
        break;
      }
    }
    if (bad) report.holds = false;
    report.counterexamples.push_back(bad);
  }
  return report;
}

SpherePoint patch_point(const std::vector<double>& x) {
  Vec v(static_cast<Eigen::Index>(x.size() + 1));
  v[0] = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) v[static_cast<Eigen::Index>(i + 1)] = x[i];
  return SpherePoint(v);
}

ConvexBody patch_halfspace(const std::vector<double>& c, double offset) {
  const int n = static_cast<int>(c.size());
  Vec a(n + 1);
  a[0] = offset;
  for (int i = 0; i < n; ++i) a[i + 1] = c[static_cast<std::size_t>(i)];
  return ConvexBody::from_halfspaces(n, {SpherePoint::basis(n, 0).coords(), a});
}

Scenario hopf(int n) {
  if (n < 2) throw UsageError("hopf(n): n must be at least 2");
  Domain d = Domain::difference(Domain::open_hemisphere(e(n, 0)), Domain::point(e(n, 0)));
  Vec diag = Vec::Constant(n + 1, 2.0);
  diag[0] = 1.0;
  std::vector<double> ones(static_cast<std::size_t>(n), 1.0);
  std::vector<double> first(static_cast<std::size_t>(n), 0.0);
  first[0] = 1.0;
  return make_scenario("hopf(" + std::to_string(n) + ")", n, std::move(d),
                       {Automorphism::diagonal(diag)}, "Example 2.5 (first manifold)",
                       {patch_halfspace(ones, 0.0), patch_halfspace(first, 0.0)});
}

Scenario halfspace_minus_line(int n) {
  if (n < 2) throw UsageError("halfspace-minus-line(n): n must be at least 2");
  Mat line(n + 1, 2);
  line.setZero();
  line(0, 0) = 1.0;
  line(1, 1) = 1.0;
  Domain d = Domain::difference(
      Domain::intersection({Domain::open_hemisphere(e(n, 0)), Domain::open_hemisphere(e(n, 1))}),
      Domain::great_sphere(line));
  Vec g1 = Vec::Ones(n + 1);
  g1[1] = 2.0;
  Vec g2 = Vec::Constant(n + 1, 2.0);
  g2[0] = 1.0;
  g2[1] = 1.0;
  std::vector<double> first(static_cast<std::size_t>(n), 0.0);
  first[0] = 1.0;
  return make_scenario("halfspace-minus-line(" + std::to_string(n) + ")", n, std::move(d),
                       {Automorphism::diagonal(g1), Automorphism::diagonal(g2)},
                       "Example 2.5 (second manifold)", {patch_halfspace(first, 0.0)});
}

Scenario annulus_two_faced() {
  const int n = 2;
  auto open = [&](int i) { return Domain::open_hemisphere(e(n, i)); };
  auto open_neg = [&](int i) { return Domain::open_hemisphere(neg_e(n, i)); };
  auto plane_x1 = [&]() {
    return std::vector<Domain>{Domain::closed_hemisphere(e(n, 1)),
                               Domain::closed_hemisphere(neg_e(n, 1))};
  };
  auto l1 = plane_x1();
  l1.push_back(open(0));
  auto l4 = plane_x1();
  l4.push_back(open(2));
  Domain u = Domain::difference(
      Domain::union_of({Domain::intersection({open(0), open(1)}),
                        Domain::intersection({open_neg(1), open(2)}),
                        Domain::intersection(std::move(l1)), Domain::intersection(std::move(l4))}),
      Domain::union_of({Domain::point(e(n, 0)), Domain::point(e(n, 2))}));

  auto lune = [&](const SpherePoint& a, const SpherePoint& b) {
    return ConvexBody::from_halfspaces(n, {a.coords(), b.coords()});
  };
  std::vector<ConvexBody> lunes{lune(e(n, 0), e(n, 1)), lune(neg_e(n, 1), e(n, 2)),
                                lune(e(n, 0), e(n, 2)), lune(e(n, 1), e(n, 2))};
  return make_scenario("annulus-two-faced", n, std::move(u),
                       {Automorphism::diagonal((Vec(3) << 2.0, 1.0, 0.5).finished())},
                       "Example 6.9", std::move(lunes));
}

Scenario open_hemisphere_scenario(int n) {
  if (n < 2) throw UsageError("open-hemisphere(n): n must be at least 2");
  Vec diag = Vec::Constant(n + 1, 2.0);
  diag[0] = 1.0;
  return make_scenario("open-hemisphere(" + std::to_string(n) + ")", n,
                       Domain::open_hemisphere(e(n, 0)), {Automorphism::diagonal(diag)},
                       std::nullopt);
}

std::vector<FixtureInfo> list_fixtures() {
  return {
      {"hopf(n)", "Example 2.5: R^n minus the origin, modulo x -> 2x"},
      {"halfspace-minus-line(n)", "Example 2.5: open half-space x1 > 0 minus a line"},
      {"annulus-two-faced", "Example 6.9: annulus with a two-faced geodesic"},
      {"open-hemisphere(n)", "convex reference: an open affine patch"},
  };
}

Scenario fixture(const std::string& name) {
  static const std::regex with_dim(R"(([a-z-]+)\((\d+)\))");
  std::smatch m;
  if (name == "annulus-two-faced") return annulus_two_faced();
  if (std::regex_match(name, m, with_dim)) {
    const int n = std::stoi(m[2].str());
    const std::string base = m[1].str();
    if (base == "hopf") return hopf(n);
    if (base == "halfspace-minus-line") return halfspace_minus_line(n);
    if (base == "open-hemisphere") return open_hemisphere_scenario(n);
  }
  throw UsageError("unknown fixture '" + name + "'");
}

}  // namespace crescent
