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

#include "crescent/cone.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

namespace crescent {
namespace {

using Bits = std::vector<std::uint64_t>;

struct Ray {
  Vec v;
  Bits tight;  // constraints (processed so far) vanishing on v
};

void set_bit(Bits& b, int i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

int popcount(const Bits& b) {
  int c = 0;
  for (auto w : b) c += std::popcount(w);
  return c;
}

Bits intersect(const Bits& a, const Bits& b) {
  Bits r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
  return r;
}

bool subset(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

// Orthonormal basis of the null space of the rows of `eq` in R^d.
Mat null_space(const Mat& eq, int d) {
  if (eq.rows() == 0) return Mat::Identity(d, d);
  Eigen::JacobiSVD<Mat> svd(eq, Eigen::ComputeFullV);
  const Vec& sv = svd.singularValues();
  const double top = sv.size() > 0 ? sv[0] : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > kRankRelTol * std::max(top, 1.0)) ++rank;
  }
  return svd.matrixV().rightCols(d - rank);
}

Mat orthonormalize(const Mat& m) {
  if (m.cols() == 0) return m;
  return orthonormal_range(m);
}

// Double description on R^k for the normalized constraint rows `a`.
ConeGenerators double_description(const Mat& a, int k, double tol) {
  const int m = static_cast<int>(a.rows());
  const int words = std::max(1, (m + 63) / 64);
  Mat lin = Mat::Identity(k, k);
  std::vector<Ray> rays;

  for (int c = 0; c < m; ++c) {
    const Vec row = a.row(c).transpose();

    if (lin.cols() > 0) {
      const Vec on_lin = lin.transpose() * row;
      Eigen::Index best = 0;
      const double peak = on_lin.cwiseAbs().maxCoeff(&best);
      if (peak > tol) {
        const Vec pivot = lin.col(best);
        const double pa = on_lin[best];
        Mat rest(k, lin.cols() - 1);
        for (Eigen::Index j = 0, o = 0; j < lin.cols(); ++j) {
          if (j == best) continue;
          rest.col(o++) = lin.col(j) - (on_lin[j] / pa) * pivot;
        }
        for (auto& r : rays) {
          r.v -= (row.dot(r.v) / pa) * pivot;
          r.v.normalize();
          set_bit(r.tight, c);
        }
        Ray fresh{(pa > 0 ? 1.0 : -1.0) * pivot.normalized(), Bits(words, 0)};
        for (int p = 0; p < c; ++p) set_bit(fresh.tight, p);
        rays.push_back(std::move(fresh));
        lin = orthonormalize(rest);
        continue;
      }
    }

    std::vector<int> pos, zero, neg;
    std::vector<double> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = row.dot(rays[i].v);
      if (val[i] > tol) {
        pos.push_back(static_cast<int>(i));
      } else if (val[i] < -tol) {
        neg.push_back(static_cast<int>(i));
      } else {
        zero.push_back(static_cast<int>(i));
      }
    }
    if (neg.empty()) {
      for (int i : zero) set_bit(rays[i].tight, c);
      continue;
    }

    const int needed = k - static_cast<int>(lin.cols()) - 2;
    std::vector<Ray> next;
    next.reserve(pos.size() + zero.size() + pos.size() * 2);
    for (int i : pos) next.push_back(rays[i]);
    for (int i : zero) {
      next.push_back(rays[i]);
      set_bit(next.back().tight, c);
    }
    for (int p : pos) {
      for (int q : neg) {
        Bits common = intersect(rays[p].tight, rays[q].tight);
        if (popcount(common) < needed) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (static_cast<int>(r) == p || static_cast<int>(r) == q) continue;
          if (subset(common, rays[r].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        Vec v = val[p] * rays[q].v - val[q] * rays[p].v;
        const double vn = v.norm();
        if (vn < kEpsNorm) continue;
        set_bit(common, c);
        next.push_back(Ray{v / vn, std::move(common)});
      }
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  out.lineality = lin;
  for (auto& r : rays) {
    // Strip lineality components so rays live in the pointed part.
    Vec v = r.v;
    if (lin.cols() > 0) v -= lin * (lin.transpose() * v);
    const double vn = v.norm();
    if (vn < kEpsNorm) continue;
    v /= vn;
    bool duplicate = false;
    for (const auto& w : out.rays) {
      if ((w - v).norm() < 10 * tol) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) out.rays.push_back(v);
  }
  return out;
}

}  // namespace

ConeGenerators cone_from_inequalities(const Mat& ineq, const Mat& eq, double tol) {
  const int d = static_cast<int>(std::max(ineq.cols(), eq.cols()));
  const Mat basis = null_space(eq, d);
  const int k = static_cast<int>(basis.cols());
  ConeGenerators out;
  if (k == 0) {
    out.lineality = Mat(d, 0);
    return out;
  }
  Mat reduced(ineq.rows(), k);
  int rows = 0;
  for (Eigen::Index i = 0; i < ineq.rows(); ++i) {
    Vec r = basis.transpose() * ineq.row(i).transpose();
    const double rn = r.norm();
    if (rn < kEpsNorm) continue;
    reduced.row(rows++) = (r / rn).transpose();
  }
  reduced.conservativeResize(rows, k);
  const ConeGenerators local = double_description(reduced, k, tol);
  out.lineality = basis * local.lineality;
  for (const auto& r : local.rays) out.rays.push_back((basis * r).normalized());
  return out;
}

ConeFacets facets_of_generators(const std::vector<Vec>& gens, double tol) {
  ConeFacets out;
  const int d = gens.empty() ? 0 : static_cast<int>(gens.front().size());
  Mat g(d, static_cast<Eigen::Index>(gens.size()));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    g.col(static_cast<Eigen::Index>(i)) = gens[i].normalized();
  }
  out.span = orthonormal_range(g);
  const int k = static_cast<int>(out.span.cols());
  if (k == 0) {
    out.lineality = Mat(d, 0);
    return out;
  }
  // Dual cone in span coordinates: {y : <g_i, y> >= 0}.
  Mat dual_rows(g.cols(), k);
  for (Eigen::Index i = 0; i < g.cols(); ++i) {
    dual_rows.row(i) = (out.span.transpose() * g.col(i)).normalized().transpose();
  }
  const ConeGenerators dual = double_description(dual_rows, k, tol);
  Mat normals_local(static_cast<Eigen::Index>(dual.rays.size()), k);
  for (std::size_t i = 0; i < dual.rays.size(); ++i) {
    normals_local.row(static_cast<Eigen::Index>(i)) = dual.rays[i].transpose();
    out.normals.push_back((out.span * dual.rays[i]).normalized());
  }
  // Lineality of the primal cone: span vectors annihilated by every facet.
  if (dual.rays.empty()) {
    out.lineality = out.span;
  } else {
    out.lineality = out.span * null_space(normals_local, k);
  }
  return out;
}

Vec project_onto_cone(const Mat& gens, const Vec& x) {
  const Eigen::Index m = gens.cols();
  if (m == 0) return Vec::Zero(x.size());
  Vec lambda = Vec::Zero(m);
  std::vector<bool> active(static_cast<std::size_t>(m), false);
  const double tol = 1e-14 * std::max(1.0, x.norm());

  auto solve_active = [&](Vec& z) {
    std::vector<Eigen::Index> idx;
    for (Eigen::Index j = 0; j < m; ++j) {
      if (active[static_cast<std::size_t>(j)]) idx.push_back(j);
    }
    Mat sub(gens.rows(), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j) {
      sub.col(static_cast<Eigen::Index>(j)) = gens.col(idx[j]);
    }
    const Vec coef = sub.colPivHouseholderQr().solve(x);
    z = Vec::Zero(m);
    for (std::size_t j = 0; j < idx.size(); ++j) {
      z[idx[j]] = coef[static_cast<Eigen::Index>(j)];
    }
  };

  for (int outer = 0; outer < 4 * m + 10; ++outer) {
    const Vec w = gens.transpose() * (x - gens * lambda);
    Eigen::Index pick = -1;
    double best = tol;
    for (Eigen::Index j = 0; j < m; ++j) {
      if (!active[static_cast<std::size_t>(j)] && w[j] > best) {
        best = w[j];
        pick = j;
      }
    }
    if (pick < 0) break;
    active[static_cast<std::size_t>(pick)] = true;
    for (int inner = 0; inner < 4 * m + 10; ++inner) {
      Vec z;
      solve_active(z);
      bool feasible = true;
      for (Eigen::Index j = 0; j < m; ++j) {
        if (active[static_cast<std::size_t>(j)] && z[j] <= 0) feasible = false;
      }
      if (feasible) {
        lambda = z;
        break;
      }
      double alpha = 1.0;
      for (Eigen::Index j = 0; j < m; ++j) {
        if (active[static_cast<std::size_t>(j)] && z[j] <= 0) {
          const double denom = lambda[j] - z[j];
          if (denom > 0) alpha = std::min(alpha, lambda[j] / denom);
        }
      }
      lambda += alpha * (z - lambda);
      for (Eigen::Index j = 0; j < m; ++j) {
        if (active[static_cast<std::size_t>(j)] && lambda[j] <= tol) {
          active[static_cast<std::size_t>(j)] = false;
          lambda[j] = 0;
        }
      }
    }
  }
  return gens * lambda;
}

std::optional<Vec> relative_interior_point(const ConeGenerators& cone) {
  if (!cone.rays.empty()) {
    Vec sum = Vec::Zero(cone.rays.front().size());
    for (const auto& r : cone.rays) sum += r;
    if (sum.norm() > kEpsNorm) return sum.normalized();
  }
  if (cone.lineality.cols() > 0) return Vec(cone.lineality.col(0));
  return std::nullopt;
}

}  // namespace crescent
