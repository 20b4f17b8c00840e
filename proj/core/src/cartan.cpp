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

#include "crescent/cartan.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace crescent {

Mat KTKDecomposition::reconstruct() const {
  return k1.matrix() * d.asDiagonal() * k2.matrix();
}

KTKDecomposition ktk_decompose(const Automorphism& g) {
  const Mat& m = g.matrix();
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat u = svd.matrixU();
  Mat v = svd.matrixV();
  Vec s = svd.singularValues();

  // Stable sort by value, ties keep the lower column first. JacobiSVD already
  // returns a nonincreasing order; this only pins the tie order.
  std::vector<int> order(static_cast<std::size_t>(s.size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return s[a] > s[b]; });
  Mat u2(u.rows(), u.cols()), v2(v.rows(), v.cols());
  Vec s2(s.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto j = static_cast<Eigen::Index>(order[i]);
    const auto o = static_cast<Eigen::Index>(i);
    u2.col(o) = u.col(j);
    v2.col(o) = v.col(j);
    s2[o] = s[j];
  }
  // Singular values are nonnegative; a negative artifact would be folded into
  // k2 by flipping the matching row.
  Mat k2 = v2.transpose();
  for (Eigen::Index i = 0; i < s2.size(); ++i) {
    if (s2[i] < 0) {
      s2[i] = -s2[i];
      k2.row(i) *= -1.0;
    }
  }
  return KTKDecomposition{Automorphism(u2), s2, Automorphism(k2)};
}

namespace {

AttractorReport analyze_ratios(std::vector<double> ratios, int n, int axis) {
  if (ratios.size() < 3) {
    throw PreconditionError("attractor_report: need at least three elements");
  }
  AttractorReport report;
  report.attractor_points = {SpherePoint::basis(n, axis),
                             antipode(SpherePoint::basis(n, axis))};
  report.ratio_sequence = std::move(ratios);
  const auto& r = report.ratio_sequence;
  const std::size_t start = (2 * r.size()) / 3;
  bool increasing = true;
  for (std::size_t i = start + 1; i < r.size(); ++i) {
    if (!(r[i] > r[i - 1])) increasing = false;
  }
  report.diverges = increasing && r.back() > kDivergenceThreshold;
  return report;
}

}  // namespace

AttractorReport attractor_report(std::span<const Vec> diagonals) {
  if (diagonals.empty()) {
    throw PreconditionError("attractor_report: need at least three elements");
  }
  std::vector<double> ratios;
  int axis = 0;
  for (const auto& d : diagonals) {
    if (d.size() < 2 || (d.array() <= 0).any()) {
      throw PreconditionError("attractor_report: diagonal entries must be positive");
    }
    Eigen::Index top = 0;
    d.maxCoeff(&top);
    double second = 0;
    for (Eigen::Index i = 0; i < d.size(); ++i) {
      if (i != top) second = std::max(second, d[i]);
    }
    ratios.push_back(d[top] / second);
    axis = static_cast<int>(top);
  }
  return analyze_ratios(std::move(ratios), static_cast<int>(diagonals.front().size()) - 1,
                        axis);
}

AttractorReport attractor_report(std::span<const Automorphism> maps) {
  if (maps.empty()) {
    throw PreconditionError("attractor_report: need at least three elements");
  }
  std::vector<double> ratios;
  std::optional<KTKDecomposition> last;
  for (const auto& g : maps) {
    last = ktk_decompose(g);
    ratios.push_back(last->d[0] / last->d[1]);
  }
  AttractorReport report = analyze_ratios(std::move(ratios), maps.front().dim(), 0);
  const SpherePoint top(Vec(last->k1.matrix().col(0)));
  report.ambient_attractors = std::vector<SpherePoint>{top, antipode(top)};
  return report;
}

std::vector<SpherePoint> MetricBall::boundary_sample(int count) const {
  const int n = center.dim();
  const Mat frame = tangent_frame(center);
  std::vector<SpherePoint> out;
  for (const auto& dir : direction_grid(n, count)) {
    out.emplace_back(std::cos(radius) * center.coords() +
                     std::sin(radius) * (frame * dir));
  }
  return out;
}

double image_diameter(const Automorphism& g, const MetricBall& ball, int samples) {
  std::vector<SpherePoint> image;
  for (const auto& p : ball.boundary_sample(samples)) image.push_back(act(g, p));
  double diam = 0;
  for (std::size_t i = 0; i < image.size(); ++i) {
    for (std::size_t j = i + 1; j < image.size(); ++j) {
      diam = std::max(diam, dist(image[i], image[j]));
    }
  }
  return diam;
}

BlowupResult blowup_limit(std::span<const Automorphism> phis,
                          std::span<const MetricBall> balls, const MetricBall& L,
                          const BlowupOptions& options) {
  if (phis.size() < 2 || phis.size() != balls.size()) {
    throw PreconditionError(
        "blowup_limit: need at least two maps and one ball per map");
  }
  std::vector<double> diameters;
  for (std::size_t i = 0; i < phis.size(); ++i) {
    diameters.push_back(image_diameter(phis[i], balls[i]));
    if (i > 0 && !(diameters[i] < diameters[i - 1])) {
      throw PreconditionError(
          "blowup_limit: image diameters of the balls do not shrink");
    }
  }

  const ConvexBody base = ConvexBody::hull(L.boundary_sample(options.boundary_samples));
  std::vector<ConvexBody> pullbacks;
  pullbacks.reserve(phis.size());
  for (const auto& phi : phis) pullbacks.push_back(base.transformed(phi.inverse()));

  const SequenceLimit seq = sequence_limit(pullbacks, options.cauchy_tol);
  const Classification c = classify(seq.limit);
  BlowupResult result{seq.limit, false, seq.cauchy, std::nullopt, {}, seq.consecutive_distances,
                      diameters};
  result.is_hemisphere =
      c.kind == BodyKind::kHemisphere && c.dim == L.center.dim();
  ConvexBody target = seq.limit;
  if (result.is_hemisphere) {
    Vec mean = Vec::Zero(seq.limit.ambient_dim());
    for (const auto& nrm : seq.limit.facet_normals()) mean += nrm;
    const SpherePoint center(mean);
    result.limit_hemisphere = Hemisphere{center, Mat(), true};
    target = ConvexBody::from_halfspaces(center.dim(), {center.coords()});
  }
  for (const auto& body : pullbacks) {
    result.hausdorff_trace.push_back(hausdorff_distance(body, target));
  }
  return result;
}

}  // namespace crescent
