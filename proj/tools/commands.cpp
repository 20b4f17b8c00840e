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

#include "commands.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "crescent/cartan.hpp"
#include "crescent/crescent.hpp"
#include "crescent/probe.hpp"

namespace crescent::io {
namespace {

constexpr int kMaxSamplePoints = 32;

template <typename T>
T arg(const json& args, const char* key, T fallback) {
  if (!args.contains(key)) return fallback;
  try {
    return args[key].get<T>();
  } catch (const json::exception&) {
    throw UsageError(std::string("argument '") + key + "' has the wrong type");
  }
}

json thin(const std::vector<SpherePoint>& pts) {
  if (static_cast<int>(pts.size()) <= kMaxSamplePoints) return points_json(pts);
  std::vector<SpherePoint> some;
  for (int i = 0; i < kMaxSamplePoints; ++i) {
    some.push_back(pts[pts.size() * static_cast<std::size_t>(i) / kMaxSamplePoints]);
  }
  return points_json(some);
}

json opt_point(const std::optional<SpherePoint>& p) { return p ? point_json(*p) : json(nullptr); }

json clauses_json(const std::vector<Clause>& cs) {
  json out = json::array();
  for (const auto& c : cs) {
    out.push_back({{"name", c.name}, {"holds", c.holds}, {"witnesses", points_json(c.witnesses)}});
  }
  return out;
}

json crescent_json(const Crescent& c) {
  json alpha = json::array();
  for (const auto& a : c.alpha) alpha.push_back(points_json(a.generators()));
  return {{"kind", to_string(c.kind)},
          {"alpha", alpha},
          {"nu_hull", points_json(c.nu_hull.generators())},
          {"body", points_json(c.body.generators())}};
}

// Crescents among the candidates, with their candidate indices.
struct Validated {
  std::vector<Crescent> crescents;
  std::vector<std::size_t> index;
};

Validated validated(const Scenario& s, const RunOptions& o) {
  Validated v;
  CrescentOptions opt;
  opt.seed = o.seed;
  for (const auto& e : crescent_scan(s, s.candidates, opt)) {
    if (e.check && e.check->crescent) {
      v.crescents.push_back(*e.check->crescent);
      v.index.push_back(e.index);
    }
  }
  return v;
}

json cmd_classify(const Scenario& s, const json&, const RunOptions&) {
  json out = json::array();
  for (std::size_t i = 0; i < s.candidates.size(); ++i) {
    const auto& b = s.candidates[i];
    const auto c = classify(b);
    json facets = json::array();
    for (const auto& f : b.facet_normals()) facets.push_back(vec_json(f));
    out.push_back({{"index", i},
                   {"kind", to_string(c.kind)},
                   {"dim", c.dim},
                   {"simply_convex", c.simply_convex},
                   {"max_great_sphere_dim", c.max_great_sphere_dim},
                   {"generators", points_json(b.generators())},
                   {"facet_normals", facets}});
  }
  return {{"candidates", out}};
}

json cmd_scan(const Scenario& s, const json&, const RunOptions& o) {
  CrescentOptions opt;
  opt.seed = o.seed;
  json out = json::array();
  for (const auto& e : crescent_scan(s, s.candidates, opt)) {
    json row = {{"index", e.index}, {"classification", to_string(e.classification.kind)}};
    if (!e.check) {
      row["status"] = "skipped";
    } else if (e.check->crescent) {
      row["status"] = "crescent";
      row["crescent"] = crescent_json(*e.check->crescent);
    } else {
      row["status"] = "rejected";
      row["reason"] = to_string(*e.check->rejection);
      row["detail"] = e.check->detail;
      row["witness"] = opt_point(e.check->witness);
    }
    if (e.check) row["interior_samples"] = e.check->interior_samples;
    out.push_back(row);
  }
  return {{"candidates", out}};
}

json dip_row(const ConvexBody& f, const Crescent& r, CrescentSide side) {
  json row = {{"side", side == CrescentSide::kAlpha ? "alpha" : "nu"}};
  try {
    const auto rep = dips_into(f, r, side);
    row["verdict"] = to_string(rep.verdict);
    row["clauses"] = clauses_json(rep.clauses);
  } catch (const PreconditionError& e) {
    row["verdict"] = nullptr;
    row["precondition"] = e.what();
  }
  return row;
}

json cmd_dip(const Scenario& s, const json& args, const RunOptions& o) {
  const auto v = validated(s, o);
  json out = json::array();
  auto emit = [&](std::size_t fi, std::size_t ci, CrescentSide side) {
    json row = dip_row(s.candidates[fi], v.crescents[ci], side);
    row["f"] = fi;
    row["crescent"] = v.index[ci];
    out.push_back(row);
  };
  if (args.contains("f")) {
    const auto fi = arg<std::size_t>(args, "f", 0);
    const auto ri = arg<std::size_t>(args, "crescent", 0);
    const std::string side = arg<std::string>(args, "side", "nu");
    if (fi >= s.candidates.size()) throw UsageError("dip: f is not a candidate index");
    if (side != "alpha" && side != "nu") throw UsageError("dip: side must be alpha or nu");
    std::size_t ci = v.index.size();
    for (std::size_t k = 0; k < v.index.size(); ++k) {
      if (v.index[k] == ri) ci = k;
    }
    if (ci == v.index.size()) throw PreconditionError("dip: candidate is not a crescent");
    emit(fi, ci, side == "alpha" ? CrescentSide::kAlpha : CrescentSide::kNu);
    return {{"pairs", out}};
  }
  for (std::size_t fi = 0; fi < s.candidates.size(); ++fi) {
    if (s.candidates[fi].dim() != s.dim) continue;
    for (std::size_t ci = 0; ci < v.crescents.size(); ++ci) {
      if (v.index[ci] == fi || v.crescents[ci].kind != CrescentKind::kBihedral) continue;
      emit(fi, ci, CrescentSide::kAlpha);
      emit(fi, ci, CrescentSide::kNu);
    }
  }
  return {{"pairs", out}};
}

json cmd_transversal(const Scenario& s, const json&, const RunOptions& o) {
  const auto v = validated(s, o);
  json out = json::array();
  for (std::size_t i = 0; i < v.crescents.size(); ++i) {
    for (std::size_t j = i + 1; j < v.crescents.size(); ++j) {
      const auto r = transversal_report(v.crescents[i], v.crescents[j]);
      out.push_back({{"first", v.index[i]},
                     {"second", v.index[j]},
                     {"kind", to_string(r.kind)},
                     {"containment", r.containment},
                     {"conditions", clauses_json(r.conditions)}});
    }
  }
  return {{"pairs", out}};
}

json classes_json(const std::vector<LambdaClass>& classes, const Validated& v) {
  json out = json::array();
  for (const auto& c : classes) {
    json members = json::array();
    for (auto m : c.members) members.push_back(v.index[m]);
    out.push_back({{"members", members},
                   {"boundary_normal", vec_json(c.boundary_normal)},
                   {"boundary_residual", c.boundary_residual},
                   {"union_samples", thin(c.union_body_samples)}});
  }
  return out;
}

json cmd_lambda(const Scenario& s, const json&, const RunOptions& o) {
  const auto v = validated(s, o);
  const auto classes = lambda_classes(s, v.crescents, o.seed);
  const auto eq = equivariance_check(s, classes);
  json missing = json::array();
  for (const auto& m : eq.missing) {
    missing.push_back({{"generator", m.generator}, {"crescent", v.index[m.crescent]}});
  }
  json violations = json::array();
  for (const auto& [g, c] : eq.violations) violations.push_back({{"generator", g}, {"class", c}});
  return {{"classes", classes_json(classes, v)},
          {"equivariance",
           {{"holds", eq.holds},
            {"complete", eq.complete},
            {"missing", missing},
            {"violations", violations}}}};
}

json cmd_two_faced(const Scenario& s, const json&, const RunOptions& o) {
  const auto v = validated(s, o);
  json out = json::array();
  for (const auto& c : two_faced_components(s, v.crescents, o.seed)) {
    out.push_back({{"first", v.index[c.first]},
                   {"second", v.index[c.second]},
                   {"first_class", c.first_class ? json(*c.first_class) : json(nullptr)},
                   {"second_class", c.second_class ? json(*c.second_class) : json(nullptr)},
                   {"exact", c.exact},
                   {"start", opt_point(c.start)},
                   {"end", opt_point(c.end)},
                   {"start_included", c.start_included},
                   {"end_included", c.end_included},
                   {"samples", thin(c.samples)},
                   {"disjoint_from_interiors", c.disjoint_from_interiors}});
  }
  return {{"components", out}};
}

json witness_json(const SimplexWitness& w) {
  return {{"vertices", points_json(w.vertices)},
          {"distinguished_face", w.distinguished_face},
          {"ideal_hits", points_json(w.ideal_hits)}};
}

json cmd_probe(const Scenario& s, const json& args, const RunOptions& o) {
  const int m = arg<int>(args, "m", s.dim - 1);
  const int budget = arg<int>(args, "budget", o.budget);
  const auto r = probe_m_convexity(s, m, budget, o.seed);
  json out = {{"m", m}, {"budget", r.budget}, {"tried", r.tried}, {"verdict", r.verdict},
              {"witness", nullptr}};
  if (r.witness) {
    out["witness"] = witness_json(*r.witness);
    const auto rep = verify_witness(s, *r.witness, o.seed);
    json clauses = json::array();
    for (const auto& c : rep.clauses) {
      clauses.push_back({{"name", c.name},
                         {"holds", c.holds},
                         {"samples", c.samples},
                         {"failures", c.failures},
                         {"first_failure", opt_point(c.first_failure)}});
    }
    out["verification"] = {{"valid", rep.valid}, {"clauses", clauses}};
  }
  return out;
}

json cmd_check_convex(const Scenario& s, const json& args, const RunOptions& o) {
  const int budget = arg<int>(args, "budget", o.budget);
  const auto r = check_convex(s, budget, o.seed);
  json pair = nullptr;
  if (r.witness_pair) pair = json::array({point_json(r.witness_pair->first), point_json(r.witness_pair->second)});
  return {{"budget", budget},
          {"pairs_tested", r.pairs_tested},
          {"convex_consistent", r.convex_consistent},
          {"witness_pair", pair}};
}

json cmd_cartan(const Scenario& s, const json& args, const RunOptions&) {
  std::vector<Automorphism> maps = s.generators;
  if (args.contains("matrix")) {
    const json& m = args["matrix"];
    Mat a(static_cast<Eigen::Index>(m.size()), static_cast<Eigen::Index>(m.size()));
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (m[r].size() != m.size()) throw UsageError("cartan: matrix must be square");
      for (std::size_t c = 0; c < m.size(); ++c) {
        a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m[r][c].get<double>();
      }
    }
    maps = {Automorphism(a)};
  }
  json out = json::array();
  for (const auto& g : maps) {
    const auto k = ktk_decompose(g);
    out.push_back({{"matrix", mat_json(g.matrix())},
                   {"k1", mat_json(k.k1.matrix())},
                   {"d", vec_json(k.d)},
                   {"k2", mat_json(k.k2.matrix())},
                   {"reconstruction_error", (k.reconstruct() - g.matrix()).norm()}});
  }
  return {{"decompositions", out}};
}

MetricBall ball_arg(const json& args, const char* key, const MetricBall& fallback) {
  if (!args.contains(key)) return fallback;
  const json& b = args[key];
  try {
    Vec c(static_cast<Eigen::Index>(b.at("center").size()));
    for (std::size_t i = 0; i < b["center"].size(); ++i) {
      c[static_cast<Eigen::Index>(i)] = b["center"][i].get<double>();
    }
    return MetricBall{SpherePoint(c), b.at("radius").get<double>()};
  } catch (const json::exception&) {
    throw UsageError(std::string("argument '") + key + "' must be {center, radius}");
  }
}

json cmd_blowup(const Scenario& s, const json& args, const RunOptions& o) {
  if (s.generators.empty()) throw PreconditionError("blowup: the scenario has no generators");
  const auto gi = arg<std::size_t>(args, "generator", 0);
  const int iterations = arg<int>(args, "iterations", 40);
  if (gi >= s.generators.size()) throw UsageError("blowup: no such generator");
  if (iterations < 2) throw UsageError("blowup: need at least two iterations");
  const Automorphism& g = s.generators[gi];
  Vec axis = ktk_decompose(g).k1.matrix().col(0);
  Eigen::Index top = 0;
  axis.cwiseAbs().maxCoeff(&top);
  if (axis[top] < 0) axis = -axis;
  const SpherePoint attractor(axis);
  const MetricBall L = ball_arg(args, "L", MetricBall{attractor, 0.2});
  const MetricBall ball = ball_arg(args, "ball", MetricBall{L.center, 0.1});
  std::vector<Automorphism> phis;
  std::vector<MetricBall> balls;
  for (int i = 1; i <= iterations; ++i) {
    phis.push_back(g.pow(i));
    balls.push_back(ball);
  }
  BlowupOptions opt;
  opt.cauchy_tol = o.tol;
  const auto r = blowup_limit(phis, balls, L, opt);
  std::vector<Vec> diag;
  for (const auto& p : phis) diag.push_back(ktk_decompose(p).d);
  const auto att = attractor_report(diag);
  return {{"generator", gi},
          {"iterations", iterations},
          {"is_hemisphere", r.is_hemisphere},
          {"cauchy", r.cauchy},
          {"limit_center", r.limit_hemisphere ? point_json(r.limit_hemisphere->center) : json(nullptr)},
          {"limit_generators", points_json(r.limit.generators())},
          {"hausdorff_trace", r.hausdorff_trace},
          {"consecutive_distances", r.consecutive_distances},
          {"image_diameters", r.image_diameters},
          {"ratio_sequence", att.ratio_sequence},
          {"diverges", att.diverges}};
}

using Handler = std::function<json(const Scenario&, const json&, const RunOptions&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"classify", cmd_classify},       {"crescent-scan", cmd_scan},
      {"dip", cmd_dip},                 {"transversal", cmd_transversal},
      {"lambda", cmd_lambda},           {"two-faced", cmd_two_faced},
      {"probe-convexity", cmd_probe},   {"check-convex", cmd_check_convex},
      {"cartan", cmd_cartan},           {"blowup", cmd_blowup},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"classify",        "crescent-scan", "dip",
                                              "transversal",     "lambda",        "two-faced",
                                              "probe-convexity", "check-convex",  "cartan",
                                              "blowup"};
  return names;
}

void check_finite(const json& j) {
  if (j.is_number_float() && !std::isfinite(j.get<double>())) {
    throw GeometryError("non-finite number in report");
  }
  if (j.is_structured()) {
    for (const auto& x : j) check_finite(x);
  }
}

json run_command(const Scenario& s, const std::string& command, const json& args,
                 const RunOptions& options) {
  const auto it = handlers().find(command);
  if (it == handlers().end()) throw UsageError("unknown command '" + command + "'");
  json echo = args.is_object() ? args : json::object();
  echo.erase("command");
  json report = {{"command", command},
                 {"args", echo},
                 {"seed", options.seed},
                 {"budget", options.budget},
                 {"tol", options.tol},
                 {"scenario", s.name},
                 {"result", it->second(s, echo, options)}};
  check_finite(report);
  return report;
}

json fixtures_report() {
  json out = json::array();
  for (const auto& f : list_fixtures()) out.push_back({{"name", f.name}, {"provenance", f.provenance}});
  return {{"fixtures", out}};
}

}  // namespace crescent::io
