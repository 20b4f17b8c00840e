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


#include <benchmark/benchmark.h>

#include <random>

#include "crescent/cartan.hpp"
#include "crescent/crescent.hpp"
#include "crescent/probe.hpp"

namespace crescent {
namespace {

std::vector<SpherePoint> random_points(int n, int count, std::mt19937_64& rng) {
  std::vector<SpherePoint> out;
  for (int i = 0; i < count; ++i) out.push_back(random_point(n, rng));
  return out;
}

void BM_Hull(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int n = static_cast<int>(state.range(0));
  // points clustered around e0 so the hull is proper
  std::vector<SpherePoint> pts;
  for (int i = 0; i < state.range(1); ++i) {
    Vec v = random_point(n, rng).coords();
    v[0] = std::abs(v[0]) + 1.0;
    pts.emplace_back(v);
  }
  for (auto _ : state) benchmark::DoNotOptimize(ConvexBody::hull(pts));
}
BENCHMARK(BM_Hull)->Args({2, 16})->Args({2, 64})->Args({3, 16})->Args({3, 64})->Args({4, 32});

void BM_Classify(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto body = ConvexBody::hull(random_points(static_cast<int>(state.range(0)), 6, rng));
  for (auto _ : state) benchmark::DoNotOptimize(classify(body));
}
BENCHMARK(BM_Classify)->Arg(2)->Arg(3)->Arg(5);

void BM_Ktk(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const int size = static_cast<int>(state.range(0));
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat m(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) m(i, j) = u(rng);
  const Automorphism g(m);
  for (auto _ : state) benchmark::DoNotOptimize(ktk_decompose(g));
}
BENCHMARK(BM_Ktk)->Arg(3)->Arg(5)->Arg(7);

void BM_Hausdorff(benchmark::State& state) {
  const auto a = ConvexBody::hull({SpherePoint{1, 0, 0}, SpherePoint{0, 1, 0}, SpherePoint{0, 0, 1}});
  const auto b = ConvexBody::hull({SpherePoint{1, 0.1, 0}, SpherePoint{0, 1, 0.1}, SpherePoint{0.1, 0, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(hausdorff_distance(a, b));
}
BENCHMARK(BM_Hausdorff);

void BM_ValidateCrescent(benchmark::State& state) {
  const auto s = hopf(3);
  const auto body = patch_halfspace({1, 1, 1}, 0);
  for (auto _ : state) benchmark::DoNotOptimize(validate_crescent(s, body));
}
BENCHMARK(BM_ValidateCrescent)->Unit(benchmark::kMillisecond);

void BM_VerifyWitness(benchmark::State& state) {
  const auto s = hopf(3);
  Mat frame = Mat::Zero(4, 3);
  for (int i = 0; i < 3; ++i) frame(i + 1, i) = 1.0;
  const auto w = corner_simplex(SpherePoint::basis(3, 0), frame, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(verify_witness(s, w));
}
BENCHMARK(BM_VerifyWitness)->Unit(benchmark::kMillisecond);

void BM_ProbeNegative(benchmark::State& state) {
  const auto s = halfspace_minus_line(3);
  for (auto _ : state) benchmark::DoNotOptimize(probe_m_convexity(s, 2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ProbeNegative)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_TwoFacedAnnulus(benchmark::State& state) {
  const auto s = annulus_two_faced();
  std::vector<Crescent> cs;
  for (const auto& e : crescent_scan(s, s.candidates))
    if (e.check && e.check->crescent) cs.push_back(*e.check->crescent);
  for (auto _ : state) benchmark::DoNotOptimize(two_faced_components(s, cs));
}
BENCHMARK(BM_TwoFacedAnnulus)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace crescent

BENCHMARK_MAIN();
