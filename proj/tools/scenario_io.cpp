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

#include "scenario_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace crescent::io {
namespace {

void expect(bool ok, const std::string& what) {
  if (!ok) throw ParseError(what);
}

void check_vector(const json& j, int size, const std::string& where) {
  expect(j.is_array() && static_cast<int>(j.size()) == size,
         where + ": expected an array of " + std::to_string(size) + " numbers");
  for (const auto& x : j) expect(x.is_number(), where + ": expected numbers");
}

void check_vectors(const json& j, int size, const std::string& where, bool nonempty = true) {
  expect(j.is_array() && (!nonempty || !j.empty()), where + ": expected a list of vectors");
  for (const auto& v : j) check_vector(v, size, where);
}

Vec to_vec(const json& j) {
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  return v;
}

std::vector<Vec> to_vecs(const json& j) {
  std::vector<Vec> out;
  for (const auto& v : j) out.push_back(to_vec(v));
  return out;
}

// Validates a domain node in place.
void check_domain(const json& j, int n, const std::string& where) {
  expect(j.is_object() && j.size() == 1, where + ": a domain node has exactly one key");
  const auto& [key, val] = *j.items().begin();
  const std::string at = where + "." + key;
  if (key == "open_hemisphere" || key == "closed_hemisphere" || key == "point") {
    check_vector(val, n + 1, at);
  } else if (key == "segment") {
    check_vectors(val, n + 1, at);
    expect(val.size() == 2, at + ": expected two endpoints");
  } else if (key == "great_sphere") {
    check_vectors(val, n + 1, at);
  } else if (key == "intersection" || key == "union") {
    expect(val.is_array() && !val.empty(), at + ": expected a nonempty list");
    for (std::size_t i = 0; i < val.size(); ++i) {
      check_domain(val[i], n, at + "[" + std::to_string(i) + "]");
    }
  } else if (key == "difference") {
    expect(val.is_object() && val.size() == 2 && val.contains("keep") && val.contains("remove"),
           at + ": expected {keep, remove}");
    check_domain(val["keep"], n, at + ".keep");
    check_domain(val["remove"], n, at + ".remove");
  } else {
    throw ParseError(where + ": unknown domain node '" + key + "'");
  }
}

json normalize_body(const json& j, int n, const std::string& where) {
  expect(j.is_object(), where + ": a body is an object");
  json out = json::object();
  std::size_t seen = 0;
  if (j.contains("label")) {
    expect(j["label"].is_string(), where + ".label: expected a string");
    out["label"] = j["label"];
    ++seen;
  }
  if (j.contains("points")) {
    check_vectors(j["points"], n + 1, where + ".points");
    out["points"] = j["points"];
    ++seen;
  } else if (j.contains("halfspaces")) {
    check_vectors(j["halfspaces"], n + 1, where + ".halfspaces", false);
    out["halfspaces"] = j["halfspaces"];
    out["equalities"] = json::array();
    ++seen;
    if (j.contains("equalities")) {
      check_vectors(j["equalities"], n + 1, where + ".equalities", false);
      out["equalities"] = j["equalities"];
      ++seen;
    }
  } else if (j.contains("patch_halfspaces")) {
    const json& hs = j["patch_halfspaces"];
    expect(hs.is_array() && !hs.empty(), where + ".patch_halfspaces: expected a nonempty list");
    out["patch_halfspaces"] = json::array();
    for (const auto& h : hs) {
      expect(h.is_object() && h.contains("c"), where + ".patch_halfspaces: expected {c, offset}");
      check_vector(h["c"], n, where + ".patch_halfspaces.c");
      const json offset = h.value("offset", json(0.0));
      expect(offset.is_number(), where + ".patch_halfspaces.offset: expected a number");
      expect(h.size() <= 2, where + ".patch_halfspaces: unknown key");
      out["patch_halfspaces"].push_back({{"c", h["c"]}, {"offset", offset}});
    }
    ++seen;
  } else {
    throw ParseError(where + ": expected points, halfspaces or patch_halfspaces");
  }
  expect(seen == j.size(), where + ": unknown key");
  return out;
}

Mat to_matrix(const json& j, int n, const std::string& where) {
  expect(j.is_array() && static_cast<int>(j.size()) == n + 1, where + ": expected n+1 rows");
  Mat m(n + 1, n + 1);
  for (int r = 0; r <= n; ++r) {
    check_vector(j[static_cast<std::size_t>(r)], n + 1, where);
    m.row(r) = to_vec(j[static_cast<std::size_t>(r)]).transpose();
  }
  return m;
}

}  // namespace

json point_json(const SpherePoint& p) { return vec_json(p.coords()); }

json points_json(const std::vector<SpherePoint>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(point_json(p));
  return out;
}

json vec_json(const Vec& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

json mat_json(const Mat& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(vec_json(m.row(r).transpose()));
  return out;
}

Domain domain_from_json(const json& j, int n) {
  check_domain(j, n, "domain");
  const auto& [key, val] = *j.items().begin();
  if (key == "open_hemisphere") return Domain::open_hemisphere(SpherePoint(to_vec(val)));
  if (key == "closed_hemisphere") return Domain::closed_hemisphere(SpherePoint(to_vec(val)));
  if (key == "point") return Domain::point(SpherePoint(to_vec(val)));
  if (key == "segment") {
    return Domain::segment(SpherePoint(to_vec(val[0])), SpherePoint(to_vec(val[1])));
  }
  if (key == "great_sphere") {
    Mat b(n + 1, static_cast<Eigen::Index>(val.size()));
    for (std::size_t i = 0; i < val.size(); ++i) b.col(static_cast<Eigen::Index>(i)) = to_vec(val[i]);
    return Domain::great_sphere(b);
  }
  if (key == "difference") {
    return Domain::difference(domain_from_json(val["keep"], n), domain_from_json(val["remove"], n));
  }
  std::vector<Domain> parts;
  for (const auto& c : val) parts.push_back(domain_from_json(c, n));
  return key == "union" ? Domain::union_of(std::move(parts)) : Domain::intersection(std::move(parts));
}

json domain_to_json(const Domain& d) {
  using K = Domain::Kind;
  auto list = [&]() {
    json out = json::array();
    for (const auto& c : d.children()) out.push_back(domain_to_json(c));
    return out;
  };
  switch (d.kind()) {
    case K::kOpenHemisphere:
      return {{"open_hemisphere", vec_json(d.vector())}};
    case K::kClosedHemisphere:
      return {{"closed_hemisphere", vec_json(d.vector())}};
    case K::kPoint:
      return {{"point", vec_json(d.vector())}};
    case K::kSegment:
      return {{"segment", json::array({vec_json(d.vector()), vec_json(d.vector2())})}};
    case K::kGreatSphere: {
      json cols = json::array();
      for (Eigen::Index c = 0; c < d.basis().cols(); ++c) cols.push_back(vec_json(d.basis().col(c)));
      return {{"great_sphere", cols}};
    }
    case K::kIntersection:
      return {{"intersection", list()}};
    case K::kUnion:
      return {{"union", list()}};
    case K::kDifference:
      return {{"difference",
               {{"keep", domain_to_json(d.children()[0])},
                {"remove", domain_to_json(d.children()[1])}}}};
  }
  return nullptr;
}

ConvexBody body_from_json(const json& j, int n) {
  const json b = normalize_body(j, n, "body");
  if (b.contains("points")) {
    std::vector<SpherePoint> pts;
    for (const auto& v : to_vecs(b["points"])) pts.emplace_back(v);
    return ConvexBody::hull(pts);
  }
  if (b.contains("halfspaces")) {
    return ConvexBody::from_halfspaces(n, to_vecs(b["halfspaces"]), to_vecs(b["equalities"]));
  }
  std::vector<Vec> normals{SpherePoint::basis(n, 0).coords()};
  for (const auto& h : b["patch_halfspaces"]) {
    Vec a(n + 1);
    a[0] = h["offset"].get<double>();
    a.tail(n) = to_vec(h["c"]);
    normals.push_back(a);
  }
  return ConvexBody::from_halfspaces(n, normals);
}

json body_to_json(const ConvexBody& b) { return {{"points", points_json(b.generators())}}; }

ScenarioFile parse_scenario(const std::string& text) {
  json j;
  try {
    j = json::parse(text, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  expect(j.is_object(), "scenario file: expected an object");
  static const std::set<std::string> known{"schema_version", "name",       "fixture",
                                           "dim",            "domain",     "generators",
                                           "candidates",     "commands"};
  for (const auto& [key, _] : j.items()) {
    expect(known.count(key) > 0, "scenario file: unknown key '" + key + "'");
  }
  expect(j.contains("schema_version") && j["schema_version"].is_number_integer(),
         "scenario file: missing schema_version");
  const int version = j["schema_version"].get<int>();
  expect(version == kSchemaVersion, "unknown schema_version " + std::to_string(version));

  ScenarioFile f;
  if (j.contains("fixture")) {
    expect(j["fixture"].is_string(), "fixture: expected a string");
    f.fixture = j["fixture"].get<std::string>();
    try {
      f.dim = fixture(*f.fixture).dim;
    } catch (const UsageError& e) {
      throw ParseError(e.what());
    }
  }
  if (j.contains("dim")) {
    expect(j["dim"].is_number_integer() && j["dim"].get<int>() >= 2, "dim: expected an integer >= 2");
    const int dim = j["dim"].get<int>();
    expect(!f.fixture || dim == f.dim, "dim: does not match the fixture");
    f.dim = dim;
  }
  expect(f.dim >= 2, "scenario file: dim or fixture is required");
  f.name = j.value("name", f.fixture.value_or("scenario"));
  if (j.contains("domain")) {
    check_domain(j["domain"], f.dim, "domain");
    f.domain = j["domain"];
  }
  expect(f.fixture || !f.domain.is_null(), "scenario file: domain or fixture is required");
  if (j.contains("generators")) {
    expect(j["generators"].is_array(), "generators: expected a list of matrices");
    for (std::size_t i = 0; i < j["generators"].size(); ++i) {
      f.generators.push_back(
          to_matrix(j["generators"][i], f.dim, "generators[" + std::to_string(i) + "]"));
    }
  }
  if (j.contains("candidates")) {
    expect(j["candidates"].is_array(), "candidates: expected a list");
    for (std::size_t i = 0; i < j["candidates"].size(); ++i) {
      f.candidates.push_back(
          normalize_body(j["candidates"][i], f.dim, "candidates[" + std::to_string(i) + "]"));
    }
  }
  if (j.contains("commands")) {
    expect(j["commands"].is_array(), "commands: expected a list");
    for (const auto& c : j["commands"]) {
      expect(c.is_object() && c.contains("command") && c["command"].is_string(),
             "commands: each entry needs a command name");
      f.commands.push_back(c);
    }
  }
  return f;
}

ScenarioFile read_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

json to_json(const ScenarioFile& f) {
  json j = json::object();
  j["schema_version"] = f.schema_version;
  j["name"] = f.name;
  if (f.fixture) j["fixture"] = *f.fixture;
  j["dim"] = f.dim;
  if (!f.domain.is_null()) j["domain"] = f.domain;
  j["generators"] = json::array();
  for (const auto& g : f.generators) j["generators"].push_back(mat_json(g));
  j["candidates"] = f.candidates;
  j["commands"] = f.commands;
  return j;
}

std::string serialize(const ScenarioFile& f) { return to_json(f).dump(2) + "\n"; }

Scenario build(const ScenarioFile& f) {
  std::optional<Scenario> base;
  if (f.fixture) base = fixture(*f.fixture);
  Domain domain = f.domain.is_null() ? base->domain : domain_from_json(f.domain, f.dim);
  std::vector<Automorphism> gens;
  if (!f.generators.empty()) {
    for (const auto& m : f.generators) gens.emplace_back(m);
  } else if (base) {
    gens = base->generators;
  }
  std::vector<ConvexBody> cands;
  for (const auto& c : f.candidates) cands.push_back(body_from_json(c, f.dim));
  if (cands.empty() && base) cands = base->candidates;
  std::optional<std::string> tag = base ? base->fixture_tag : std::nullopt;
  return make_scenario(f.name, f.dim, std::move(domain), std::move(gens), tag, std::move(cands));
}

ScenarioFile describe(const Scenario& s) {
  ScenarioFile f;
  f.name = s.name;
  f.dim = s.dim;
  f.domain = domain_to_json(s.domain);
  for (const auto& g : s.generators) f.generators.push_back(g.matrix());
  for (const auto& c : s.candidates) f.candidates.push_back(body_to_json(c));
  return f;
}

}  // namespace crescent::io
