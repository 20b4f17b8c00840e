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

#include "crescent/crescent.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "detail/geometry_util.hpp"

namespace crescent {

using detail::boundary_set;
using detail::facet_of;
using detail::find_violation;
using detail::halfspace;
using detail::hyperplane;

const char* to_string(CrescentKind kind) {
  return kind == CrescentKind::kBihedral ? "BIHEDRAL" : "HEMISPHERIC";
}

const char* to_string(CrescentRejection r) {
  switch (r) {
    case CrescentRejection::kInteriorNotInside:
      return "interior-not-inside";
    case CrescentRejection::kNoIdealSide:
      return "no-ideal-side";
    case CrescentRejection::kAllSidesIdeal:
      return "all-sides-ideal";
    case CrescentRejection::kIdealNotHemisphereUnion:
      return "ideal-boundary-not-hemisphere-union";
  }
  return "?";
}

bool Crescent::in_alpha(const SpherePoint& p) const {
  return std::any_of(alpha.begin(), alpha.end(), [&](const ConvexBody& a) {
    return a.contains(p, Containment::kInterior);
  });
}

bool Crescent::in_nu(const SpherePoint& p) const {
  if (!nu_hull.contains(p)) return false;
  return kind == CrescentKind::kBihedral || !in_alpha(p);
}

Crescent Crescent::transformed(const Automorphism& g) const {
  std::vector<ConvexBody> a;
  for (const auto& piece : alpha) a.push_back(piece.transformed(g));
  return Crescent{body.transformed(g), kind, std::move(a), nu_hull.transformed(g), scenario_id};
}

namespace {

CrescentCheck reject(CrescentRejection why, std::string detail,
                     std::optional<SpherePoint> witness, int samples) {
  CrescentCheck c;
  c.rejection = why;
  c.detail = std::move(detail);
  c.witness = std::move(witness);
  c.interior_samples = samples;
  return c;
}

}  // namespace

CrescentCheck validate_crescent(const Scenario& s, const ConvexBody& candidate,
                                const CrescentOptions& options) {
  const Classification cls = classify(candidate);
  const int n = s.dim;
  if (candidate.ambient_dim() != n + 1 || cls.dim != n ||
      (cls.kind != BodyKind::kBihedron && cls.kind != BodyKind::kHemisphere)) {
    throw PreconditionError("validate_crescent: candidate is not an n-bihedron or n-hemisphere");
  }
  std::mt19937_64 rng(options.seed);
  const Domain& dom = s.domain;
  auto inside = [&](const SpherePoint& p) { return dom.contains(p); };
  auto ideal = [&](const SpherePoint& p) { return dom.classify(p) == Membership::kIdeal; };

  if (auto bad = find_violation(dom, candidate, inside, options.interior_samples, rng)) {
    const bool is_ideal = dom.classify(*bad) == Membership::kIdeal;
    return reject(CrescentRejection::kInteriorNotInside,
                  is_ideal ? "interior meets the ideal set" : "interior leaves the closure",
                  bad, options.interior_samples);
  }

  if (cls.kind == BodyKind::kBihedron) {
    std::vector<ConvexBody> sides;
    std::vector<bool> side_ideal;
    std::vector<std::optional<SpherePoint>> domain_point;
    for (const auto& nrm : candidate.facet_normals()) {
      sides.push_back(facet_of(candidate, nrm));
      auto v = find_violation(dom, sides.back(), ideal, options.side_samples, rng);
      side_ideal.push_back(!v.has_value());
      domain_point.push_back(v);
    }
    const auto count = std::count(side_ideal.begin(), side_ideal.end(), true);
    if (count == 0) {
      return reject(CrescentRejection::kNoIdealSide, "neither side lies in the ideal set",
                    domain_point.front(), options.interior_samples);
    }
    if (count == 2) {
      return reject(CrescentRejection::kAllSidesIdeal,
                    "both sides are ideal: the domain would be the whole interior",
                    std::nullopt, options.interior_samples);
    }
    const std::size_t a = side_ideal[0] ? 0 : 1;
    CrescentCheck ok;
    ok.crescent = Crescent{candidate, CrescentKind::kBihedral, {sides[a]}, sides[1 - a], s.id};
    ok.detail = "accepted";
    ok.witness = domain_point[1 - a];
    ok.interior_samples = options.interior_samples;
    return ok;
  }

  // Hemisphere: the ideal part of the boundary sphere must be a finite union
  // of (n-1)-hemispheres cut out by the leaves of the domain.
  const Vec c = candidate.facet_normals().front();
  const ConvexBody sphere = hyperplane(n, c);
  std::vector<Vec> cuts;
  for (const auto& leaf : dom.leaves()) {
    if (leaf.kind() != Domain::Kind::kOpenHemisphere &&
        leaf.kind() != Domain::Kind::kClosedHemisphere) {
      continue;
    }
    for (double sign : {1.0, -1.0}) {
      Vec a = sign * leaf.vector();
      a -= a.dot(c) * c;
      if (a.norm() < 1e-9) continue;
      a.normalize();
      const bool seen = std::any_of(cuts.begin(), cuts.end(),
                                    [&](const Vec& b) { return a.dot(b) > 1.0 - 1e-12; });
      if (!seen) cuts.push_back(a);
    }
  }
  std::vector<ConvexBody> pieces;
  for (const auto& a : cuts) {
    ConvexBody piece = ConvexBody::from_halfspaces(n, {a}, {c});
    if (!find_violation(dom, piece, ideal, options.side_samples, rng)) {
      pieces.push_back(std::move(piece));
    }
  }
  const auto samples = sample_interior(sphere, options.side_samples, rng);
  bool any_ideal = false;
  std::optional<SpherePoint> nu_point;
  for (const auto& p : samples) {
    const bool covered = std::any_of(pieces.begin(), pieces.end(),
                                     [&](const ConvexBody& b) { return b.contains(p); });
    if (ideal(p)) {
      any_ideal = true;
      if (!covered) {
        return reject(CrescentRejection::kIdealNotHemisphereUnion,
                      "ideal part of the boundary is not a union of hemispheres", p,
                      options.interior_samples);
      }
    } else if (!nu_point && inside(p) &&
               std::none_of(pieces.begin(), pieces.end(), [&](const ConvexBody& b) {
                 return b.contains(p, Containment::kInterior);
               })) {
      nu_point = p;
    }
  }
  if (pieces.empty()) {
    return reject(any_ideal ? CrescentRejection::kIdealNotHemisphereUnion
                            : CrescentRejection::kNoIdealSide,
                  any_ideal ? "ideal part of the boundary is not a union of hemispheres"
                            : "no part of the boundary is ideal",
                  std::nullopt, options.interior_samples);
  }
  if (!nu_point) {
    return reject(CrescentRejection::kAllSidesIdeal,
                  "the whole boundary sphere is ideal: the domain would be the whole interior",
                  std::nullopt, options.interior_samples);
  }
  CrescentCheck ok;
  ok.crescent = Crescent{candidate, CrescentKind::kHemispheric, std::move(pieces), sphere, s.id};
  ok.detail = "accepted";
  ok.witness = nu_point;
  ok.interior_samples = options.interior_samples;
  return ok;
}

std::vector<ScanEntry> crescent_scan(const Scenario& s, const std::vector<ConvexBody>& candidates,
                                     const CrescentOptions& options) {
  std::vector<ScanEntry> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    ScanEntry e{i, classify(candidates[i]), std::nullopt};
    if (candidates[i].ambient_dim() == s.dim + 1 && e.classification.dim == s.dim &&
        (e.classification.kind == BodyKind::kBihedron ||
         e.classification.kind == BodyKind::kHemisphere)) {
      e.check = validate_crescent(s, candidates[i], options);
    }
    out.push_back(std::move(e));
  }
  return out;
}

// Dipping ---------------------------------------------------------------

const char* to_string(DipVerdict v) {
  switch (v) {
    case DipVerdict::kNotDipped:
      return "NOT_DIPPED";
    case DipVerdict::kDipped:
      return "DIPPED";
    case DipVerdict::kNicelyDipped:
      return "NICELY_DIPPED";
  }
  return "?";
}

namespace {

std::vector<SpherePoint> maybe(const std::optional<SpherePoint>& p) {
  if (p) return {*p};
  return {};
}

std::optional<SpherePoint> some_point(const std::optional<ConvexBody>& b) {
  if (!b) return std::nullopt;
  if (auto q = interior_point(*b)) return q;
  return b->generators().front();
}

}  // namespace

DipReport dips_into(const ConvexBody& f, const ConvexBody& d, const ConvexBody& alpha) {
  const int n = f.ambient_dim() - 1;
  if (f.dim() != n || d.dim() != n || d.ambient_dim() != n + 1) {
    throw PreconditionError("dips_into: F and D must be n-dimensional");
  }
  if (alpha.dim() != n - 1) throw PreconditionError("dips_into: alpha must be an (n-1)-ball");
  Vec a = detail::span_normal(alpha);
  bool pos = false, neg = false;
  for (const auto& g : d.generators()) {
    const double v = a.dot(g.coords());
    pos = pos || v > kEpsAngle;
    neg = neg || v < -kEpsAngle;
  }
  if ((pos && neg) || !body_subset(alpha, d)) {
    throw PreconditionError("dips_into: alpha does not lie in the boundary of D");
  }
  if (neg) a = -a;

  DipReport r{DipVerdict::kNotDipped, {}};
  if (!interiors_overlap(f, d)) return r;
  r.clauses.push_back({"overlap", true, maybe(some_point(intersect(f, d)))});

  // beta = F cap alpha is an (n-1)-ball whose boundary lies in the boundary of F
  // and whose interior lies in the interior of F.
  const auto beta = intersect(f, alpha);
  Clause c2{"beta_ball", false, {}};
  if (beta && beta->dim() == n - 1) {
    const auto q = interior_point(*beta);
    bool ok = q && f.contains(*q, Containment::kInterior);
    if (q) c2.witnesses.push_back(*q);
    for (const auto& m : beta->facet_normals()) {
      const ConvexBody face = facet_of(*beta, m);
      const auto fq = some_point(face);
      if (fq) {
        c2.witnesses.push_back(*fq);
        if (f.contains(*fq, Containment::kInterior)) ok = false;
      }
    }
    c2.holds = ok;
  }
  r.clauses.push_back(c2);

  const auto section = intersect(f, hyperplane(n, a));
  const auto upper = intersect(f, halfspace(n, a));
  const auto lower = intersect(f, halfspace(n, -a));
  Clause c3{"two_components", false, {}};
  c3.holds = beta && section && bodies_equal(*section, *beta) && upper && lower &&
             upper->dim() == n && lower->dim() == n;
  if (upper) c3.witnesses.push_back(*some_point(upper));
  if (lower) c3.witnesses.push_back(*some_point(lower));
  r.clauses.push_back(c3);

  const auto fd = intersect(f, d);
  Clause c4{"closure_of_component", false, maybe(some_point(fd))};
  c4.holds = fd && ((upper && bodies_equal(*fd, *upper)) || (lower && bodies_equal(*fd, *lower)));
  r.clauses.push_back(c4);

  const bool dipped = c2.holds && c3.holds && c4.holds;

  // Nice dipping: F meets the boundary of D only inside the interior of alpha.
  Clause c5{"avoids_other_faces", true, {}};
  Clause c6{"meets_face_inside_alpha", true, {}};
  for (const auto& m : d.facet_normals()) {
    const auto meet = intersect(f, facet_of(d, m));
    if (!meet) continue;
    if (m.dot(a) < 1.0 - 1e-9) {
      c5.holds = false;
      c5.witnesses.push_back(*some_point(meet));
      continue;
    }
    for (const auto& g : meet->generators()) {
      if (!alpha.contains(g, Containment::kInterior)) {
        c6.holds = false;
        c6.witnesses.push_back(g);
        break;
      }
    }
  }
  r.clauses.push_back(c5);
  r.clauses.push_back(c6);

  if (dipped) r.verdict = c5.holds && c6.holds ? DipVerdict::kNicelyDipped : DipVerdict::kDipped;
  return r;
}

DipReport dips_into(const ConvexBody& f, const Crescent& r, CrescentSide side) {
  if (r.kind != CrescentKind::kBihedral) {
    throw PreconditionError("dips_into: the crescent must be bihedral");
  }
  return dips_into(f, r.body, side == CrescentSide::kAlpha ? r.alpha.front() : r.nu_hull);
}

// Transversal intersection -------------------------------------------------

const char* to_string(TransversalKind k) {
  switch (k) {
    case TransversalKind::kTransversal:
      return "TRANSVERSAL";
    case TransversalKind::kContained:
      return "CONTAINED";
    case TransversalKind::kDisjoint:
      return "DISJOINT";
    case TransversalKind::kIrregular:
      return "IRREGULAR";
  }
  return "?";
}

namespace {

bool is_kind(const std::optional<ConvexBody>& b, int dim, BodyKind kind) {
  if (!b || b->dim() != dim) return false;
  return classify(*b).kind == kind;
}

// Two convex bodies sharing the relative interior point p: their union is
// star-shaped about p, hence an open ball, unless one of them reaches -p.
bool union_is_ball(const ConvexBody& a, const ConvexBody& b, const SpherePoint& p) {
  const SpherePoint q = antipode(p);
  return !a.contains(q) && !b.contains(q);
}

void transversal_conditions(const Crescent& ri, const Crescent& rj, const std::string& tag,
                            std::vector<Clause>& out) {
  const int n = ri.body.ambient_dim() - 1;
  const Vec ai = detail::span_normal(ri.nu_hull);
  const Vec aj = detail::span_normal(rj.nu_hull);
  const auto h = intersect(ri.nu_hull, rj.nu_hull);
  const auto hp = some_point(h);

  Clause c1{"nu_meet_is_hemisphere" + tag, is_kind(h, n - 2, BodyKind::kHemisphere), maybe(hp)};
  out.push_back(c1);

  Clause c2{"nu_meet_transversal" + tag, false, maybe(hp)};
  if (c1.holds) {
    const auto q = interior_point(*h);
    c2.holds = q && ri.nu_hull.contains(*q, Containment::kInterior) &&
               std::abs(ai.dot(aj)) < 1.0 - kEpsAngle;
  }
  out.push_back(c2);

  // nu_i cap R_j: an (n-1)-bihedron bounded by H and H', with H' in clo(alpha_j).
  const auto b = intersect(ri.nu_hull, rj.body);
  Clause c3{"nu_section_bihedron" + tag, false, maybe(some_point(b))};
  if (c1.holds && is_kind(b, n - 1, BodyKind::kBihedron)) {
    bool has_h = false, has_hp = false;
    for (const auto& m : b->facet_normals()) {
      const ConvexBody face = facet_of(*b, m);
      if (bodies_equal(face, *h)) {
        has_h = true;
        continue;
      }
      const auto q = interior_point(face);
      if (body_subset(face, rj.alpha.front()) && q && rj.in_alpha(*q)) {
        has_hp = true;
      } else if (q) {
        c3.witnesses.push_back(*q);
      }
    }
    c3.holds = has_h && has_hp;
  }
  out.push_back(c3);

  Clause c4{"nu_section_is_component" + tag, false, {}};
  if (b) {
    for (const Vec& s : {aj, Vec(-aj)}) {
      const auto side = intersect(ri.nu_hull, halfspace(n, s));
      if (side && bodies_equal(*side, *b)) c4.holds = true;
    }
    c4.witnesses = maybe(some_point(b));
  }
  out.push_back(c4);

  const auto both = intersect(ri.body, rj.body);
  Clause c5{"meet_is_component" + tag, false, maybe(some_point(both))};
  if (both) {
    for (const Vec& s : {ai, Vec(-ai)}) {
      const auto side = intersect(rj.body, halfspace(n, s));
      if (side && bodies_equal(*side, *both)) c5.holds = true;
    }
  }
  out.push_back(c5);

  const ConvexBody& al_i = ri.alpha.front();
  const ConvexBody& al_j = rj.alpha.front();
  Clause c6{"alpha_union_and_meet_balls" + tag, false, {}};
  const Vec ni = detail::span_normal(al_i);
  const Vec nj = detail::span_normal(al_j);
  if (std::abs(ni.dot(nj)) > 1.0 - kEpsAngle && interiors_overlap(al_i, al_j)) {
    const auto meet = intersect(al_i, al_j);
    const auto p = meet ? interior_point(*meet) : std::nullopt;
    if (p) {
      c6.holds = union_is_ball(al_i, al_j, *p);
      c6.witnesses.push_back(*p);
    }
  }
  out.push_back(c6);
}

}  // namespace

TransversalReport transversal_report(const Crescent& r1, const Crescent& r2) {
  if (r1.scenario_id != r2.scenario_id) {
    throw UsageError("transversal_report: crescents belong to different scenarios");
  }
  TransversalReport r{TransversalKind::kDisjoint, "", {}};
  if (!interiors_overlap(r1.body, r2.body)) return r;
  const bool in12 = body_subset(r1.body, r2.body);
  const bool in21 = body_subset(r2.body, r1.body);
  if (in12 || in21) {
    r.kind = TransversalKind::kContained;
    r.containment = in12 && in21 ? "equal" : in12 ? "first-in-second" : "second-in-first";
    return r;
  }
  r.kind = TransversalKind::kIrregular;
  if (r1.kind != CrescentKind::kBihedral || r2.kind != CrescentKind::kBihedral) return r;
  transversal_conditions(r1, r2, "(1,2)", r.conditions);
  transversal_conditions(r2, r1, "(2,1)", r.conditions);
  if (std::all_of(r.conditions.begin(), r.conditions.end(),
                  [](const Clause& c) { return c.holds; })) {
    r.kind = TransversalKind::kTransversal;
  }
  return r;
}

// Lambda-classes -------------------------------------------------------------

std::vector<LambdaClass> lambda_classes(const Scenario& s, const std::vector<Crescent>& crescents,
                                        std::uint64_t seed) {
  const std::size_t m = crescents.size();
  for (const auto& c : crescents) {
    if (c.kind != CrescentKind::kBihedral) {
      throw UsageError("lambda_classes: hemispheric crescents are not allowed here");
    }
    if (c.scenario_id != s.id) throw UsageError("lambda_classes: crescent of another scenario");
  }
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t i) {
    return parent[i] == i ? i : parent[i] = root(parent[i]);
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (interiors_overlap(crescents[i].body, crescents[j].body)) parent[root(j)] = root(i);
    }
  }

  std::mt19937_64 rng(seed);
  std::vector<LambdaClass> out;
  std::vector<long> slot(m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t r = root(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(out.size());
      out.push_back(LambdaClass{{}, {}, {}, Vec(), 0.0});
    }
    LambdaClass& c = out[static_cast<std::size_t>(slot[r])];
    c.members.push_back(i);
    c.crescents.push_back(crescents[i]);
    const auto pts = sample_interior(crescents[i].body, 32, rng);
    c.union_body_samples.insert(c.union_body_samples.end(), pts.begin(), pts.end());
  }

  for (auto& c : out) {
    Mat stacked(c.crescents.front().body.ambient_dim(), 0);
    for (const auto& r : c.crescents) {
      const Mat& sp = r.alpha.front().span();
      Mat next(stacked.rows(), stacked.cols() + sp.cols());
      next << stacked, sp;
      stacked = next;
    }
    Eigen::JacobiSVD<Mat> svd(stacked, Eigen::ComputeFullU);
    Vec v = svd.matrixU().col(svd.matrixU().cols() - 1);
    double residual = 0.0;
    for (const auto& r : c.crescents) {
      residual = std::max(residual, (r.alpha.front().span().transpose() * v).norm());
    }
    if (v.dot(c.union_body_samples.front().coords()) < 0) v = -v;
    c.boundary_normal = v;
    c.boundary_residual = residual;
    if (residual >= kEpsAngle) {
      throw GeometryError("lambda_classes: alphas of one class are not in a common great sphere");
    }
  }
  return out;
}

// Two-faced components -------------------------------------------------------

namespace {

constexpr double kPi = 3.14159265358979323846;

// One component of nu cap M.
struct NuComponent {
  bool exact = false;
  bool full = false;  // the whole circle
  Arc arc{};
  double t0 = 0, t1 = 0;
  bool in0 = false, in1 = false;
  std::vector<SpherePoint> samples;
};

bool near(const SpherePoint& a, const SpherePoint& b) { return dist(a, b) < kEpsAngle; }

Arc arc_of(const ConvexBody& nu) {
  const Mat& lin = nu.lineality();
  if (lin.cols() == 2) return Arc{lin.col(0), lin.col(1), 2 * kPi};
  if (lin.cols() == 1) {
    const SpherePoint a(lin.col(0));
    return Arc::through(a, SpherePoint(nu.rays().front()), antipode(a));
  }
  const SpherePoint a(nu.rays()[0]);
  const SpherePoint b(nu.rays()[1]);
  return Arc::through(a, SpherePoint(a.coords() + b.coords()), b);
}

std::vector<NuComponent> exact_components(const Domain& dom, const ConvexBody& nu) {
  const Arc arc = arc_of(nu);
  std::vector<NuComponent> out;
  std::optional<NuComponent> run;
  for (const auto& piece : dom.arc_pieces(arc)) {
    const bool point = piece.t0 == piece.t1;
    if (!piece.member) {
      if (run) out.push_back(*run);
      run.reset();
      continue;
    }
    if (!run) {
      run = NuComponent{};
      run->exact = true;
      run->arc = arc;
      run->t0 = piece.t0;
      run->in0 = point;
    }
    run->t1 = piece.t1;
    run->in1 = point;
  }
  if (run) out.push_back(*run);

  const bool circle = arc.length > 2 * kPi - 1e-12;
  if (circle && !out.empty() && out.front().t0 == 0.0 && out.back().t1 == arc.length) {
    if (out.size() == 1) {
      out.front().full = true;
    } else {
      out.back().t1 = arc.length + out.front().t1;
      out.back().in1 = out.front().in1;
      out.erase(out.begin());
    }
  }
  for (auto& c : out) {
    if (c.t0 == c.t1) {
      c.samples.push_back(arc.at(c.t0));
      continue;
    }
    for (int k = 1; k < 32; ++k) c.samples.push_back(arc.at(c.t0 + (c.t1 - c.t0) * k / 32.0));
  }
  return out;
}

std::vector<NuComponent> sampled_components(const Domain& dom, const ConvexBody& nu,
                                            std::mt19937_64& rng, double& radius) {
  constexpr int kSamples = 6000;
  const int k = nu.dim();
  const double half_sphere = std::pow(kPi, (k + 1) / 2.0) / std::tgamma((k + 1) / 2.0);
  const double ball = std::pow(kPi, k / 2.0) / std::tgamma(k / 2.0 + 1.0);
  radius = std::max(kComponentResolution,
                    std::pow(2.0 * half_sphere * std::log(kSamples) / (kSamples * ball), 1.0 / k));
  std::vector<SpherePoint> pts;
  for (const auto& p : sample_interior(nu, kSamples, rng)) {
    if (dom.contains(p)) pts.push_back(p);
  }
  const double cos_r = std::cos(radius);
  std::vector<int> comp(pts.size(), -1);
  std::vector<NuComponent> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (comp[i] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<std::size_t> stack{i};
    comp[i] = id;
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      out.back().samples.push_back(pts[a]);
      for (std::size_t b = 0; b < pts.size(); ++b) {
        if (comp[b] < 0 && pts[a].coords().dot(pts[b].coords()) > cos_r) {
          comp[b] = id;
          stack.push_back(b);
        }
      }
    }
  }
  return out;
}

bool same_exact(const NuComponent& a, const NuComponent& b) {
  if (a.full || b.full) return a.full && b.full;
  const SpherePoint a0 = a.arc.at(a.t0), a1 = a.arc.at(a.t1);
  const SpherePoint b0 = b.arc.at(b.t0), b1 = b.arc.at(b.t1);
  const bool fwd = near(a0, b0) && near(a1, b1) && a.in0 == b.in0 && a.in1 == b.in1;
  const bool rev = near(a0, b1) && near(a1, b0) && a.in0 == b.in1 && a.in1 == b.in0;
  if (!fwd && !rev) return false;
  const SpherePoint mid = a.arc.at(0.5 * (a.t0 + a.t1));
  const SpherePoint bm = b.arc.at(0.5 * (b.t0 + b.t1));
  return near(mid, bm);
}

bool same_sampled(const NuComponent& a, const ConvexBody& nu_a, const NuComponent& b,
                  const ConvexBody& nu_b, double radius) {
  for (const auto& p : a.samples) {
    if (!nu_b.contains(p)) return false;
  }
  for (const auto& p : b.samples) {
    if (!nu_a.contains(p)) return false;
  }
  const double cos_r = std::cos(radius);
  for (const auto& p : a.samples) {
    for (const auto& q : b.samples) {
      if (p.coords().dot(q.coords()) > cos_r) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<TwoFacedComponent> two_faced_components(const Scenario& s,
                                                    const std::vector<Crescent>& crescents,
                                                    std::uint64_t seed) {
  if (crescents.size() < 2) return {};
  const CrescentKind kind = crescents.front().kind;
  for (const auto& c : crescents) {
    if (c.kind != kind) throw UsageError("two_faced_components: mixed crescent kinds");
    if (c.scenario_id != s.id) throw UsageError("two_faced_components: crescent of another scenario");
  }
  const bool bihedral = kind == CrescentKind::kBihedral;
  std::vector<std::optional<std::size_t>> cls(crescents.size());
  if (bihedral) {
    const auto classes = lambda_classes(s, crescents, seed);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (std::size_t m : classes[c].members) cls[m] = c;
    }
  }

  std::mt19937_64 rng(seed);
  std::vector<std::vector<NuComponent>> comps;
  std::vector<double> radius(crescents.size(), 0.0);
  for (std::size_t i = 0; i < crescents.size(); ++i) {
    const ConvexBody& nu = crescents[i].nu_hull;
    comps.push_back(nu.dim() == 1 ? exact_components(s.domain, nu)
                                  : sampled_components(s.domain, nu, rng, radius[i]));
  }

  std::vector<TwoFacedComponent> out;
  std::vector<const NuComponent*> seen;
  for (std::size_t i = 0; i < crescents.size(); ++i) {
    for (std::size_t j = i + 1; j < crescents.size(); ++j) {
      if (bihedral && cls[i] == cls[j]) continue;
      for (const auto& a : comps[i]) {
        for (const auto& b : comps[j]) {
          const bool same = a.exact ? same_exact(a, b)
                                    : same_sampled(a, crescents[i].nu_hull, b,
                                                   crescents[j].nu_hull,
                                                   std::max(radius[i], radius[j]));
          if (!same) continue;
          const bool dup = std::any_of(seen.begin(), seen.end(), [&](const NuComponent* c) {
            return a.exact ? same_exact(*c, a)
                           : same_sampled(*c, crescents[i].nu_hull, a, crescents[i].nu_hull,
                                          radius[i]);
          });
          if (dup) continue;
          seen.push_back(&a);
          TwoFacedComponent t{i, j, cls[i], cls[j], a.exact, std::nullopt, std::nullopt,
                              false, false, a.samples, true};
          if (a.exact && !a.full) {
            t.start = a.arc.at(a.t0);
            t.end = a.arc.at(a.t1);
            t.start_included = a.in0;
            t.end_included = a.in1;
          }
          for (const auto& p : t.samples) {
            for (const auto& c : crescents) {
              if (c.body.contains(p, Containment::kInterior)) t.disjoint_from_interiors = false;
            }
          }
          out.push_back(std::move(t));
        }
      }
    }
  }
  return out;
}

// Equivariance ---------------------------------------------------------------

EquivarianceReport equivariance_check(const Scenario& s, const std::vector<LambdaClass>& classes) {
  EquivarianceReport r{true, true, {}, {}};
  auto find_class = [&](const ConvexBody& b) -> std::optional<std::size_t> {
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (const auto& m : classes[c].crescents) {
        if (bodies_equal(m.body, b)) return c;
      }
    }
    return std::nullopt;
  };
  for (std::size_t g = 0; g < s.generators.size(); ++g) {
    for (std::size_t c = 0; c < classes.size(); ++c) {
      std::vector<std::size_t> hit;
      for (std::size_t k = 0; k < classes[c].crescents.size(); ++k) {
        const auto image = classes[c].crescents[k].body.transformed(s.generators[g]);
        const auto where = find_class(image);
        if (!where) {
          r.complete = false;
          r.missing.push_back({g, classes[c].members[k]});
        } else if (std::find(hit.begin(), hit.end(), *where) == hit.end()) {
          hit.push_back(*where);
        }
      }
      bool ok = hit.size() <= 1;
      if (ok && hit.size() == 1 && r.complete) {
        for (const auto& m : classes[hit.front()].crescents) {
          const auto pre = m.body.transformed(s.generators[g].inverse());
          const bool from_c = std::any_of(
              classes[c].crescents.begin(), classes[c].crescents.end(),
              [&](const Crescent& x) { return bodies_equal(x.body, pre); });
          if (!from_c) ok = false;
        }
      }
      if (!ok) r.violations.emplace_back(g, c);
    }
  }
  r.holds = r.violations.empty();
  return r;
}

}  // namespace crescent
