#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cgablend/circle_blend.hpp"
#include "cgablend/sphere_blend.hpp"

namespace {

using namespace cgablend;

Multivector random_multivector(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Multivector m;
  for (unsigned i = 0; i < kBladeCount; ++i) m.set(i, dist(rng));
  return m;
}

void BM_GeometricProduct(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const Multivector a = random_multivector(rng);
  const Multivector b = random_multivector(rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_GeometricProduct);

void BM_EmbedExtract(benchmark::State& state) {
  for (auto _ : state) {
    const ConformalPoint p = embed_point({0.3, -1.2, 2.5});
    benchmark::DoNotOptimize(extract_point(p));
  }
}
BENCHMARK(BM_EmbedExtract);

Segment demo_segment() {
  const ConformalPoint p0 = embed_point({-1.5, 0.4, 0.0});
  const ConformalPoint p1 = embed_point({-0.5, 0.0, 0.2});
  const ConformalPoint p2 = embed_point({0.5, 0.1, -0.1});
  const ConformalPoint p3 = embed_point({1.5, 0.6, 0.0});
  return make_segment(p1, p2, circle_through(p0, p1, p2), circle_through(p1, p2, p3));
}

void BM_EvaluateSegment(benchmark::State& state) {
  const Segment seg = demo_segment();
  const BlendProfile profile = BlendProfile::geometric(2);
  double lambda = 0.0;
  for (auto _ : state) {
    lambda += 0.001;
    if (lambda > 1.0) lambda -= 1.0;
    benchmark::DoNotOptimize(evaluate_segment(seg, profile, lambda));
  }
}
BENCHMARK(BM_EvaluateSegment);

void BM_BuildSpline(benchmark::State& state) {
  SplineSpec spec;
  spec.control_points = {{0, 0, 0}, {1, 0.8, 0.1}, {2, 0.2, 0.4},
                         {3, 1.0, 0.0}, {4, 0.3, -0.2}, {5, 0.9, 0.1}};
  spec.samples_per_segment = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_spline(spec));
}
BENCHMARK(BM_BuildSpline)->Arg(16)->Arg(64)->Arg(256);

void BM_SampleMesh(benchmark::State& state) {
  const TrianglePatch patch =
      make_patch(embed_point({0, 0, 0}), embed_point({2, 0, 0}), embed_point({1, 1.8, 0}),
                 embed_point({1, 0.6, 0.9}), embed_point({1, 0.6, 1.1}),
                 embed_point({1, 0.6, 0.7}));
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_mesh(patch, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SampleMesh)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
