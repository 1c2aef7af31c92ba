#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "vloci/vloci.hpp"

namespace {

using namespace vloci;

const Triangle kTriangle({0, 0}, {0, 3}, {4, 0});

void BM_SquaredSumForm(benchmark::State& state) {
  const auto lines = sides_of(ConvexPolygon(kTriangle));
  for (auto _ : state) benchmark::DoNotOptimize(squared_sum_form(lines));
}
BENCHMARK(BM_SquaredSumForm);

void BM_MinSquaredSum(benchmark::State& state) {
  const auto lines = sides_of(ConvexPolygon(kTriangle));
  for (auto _ : state) benchmark::DoNotOptimize(min_squared_sum(lines));
}
BENCHMARK(BM_MinSquaredSum);

void BM_EllipseGeometry(benchmark::State& state) {
  const auto lines = sides_of(ConvexPolygon(kTriangle));
  for (auto _ : state) benchmark::DoNotOptimize(ellipse_geometry(lines, 5.0));
}
BENCHMARK(BM_EllipseGeometry);

void BM_SumLocus(benchmark::State& state) {
  std::vector<Point> verts;
  const int n = static_cast<int>(state.range(0));
  for (int i = 0; i < n; ++i) {
    const double t = 2 * 3.141592653589793 * i / n;
    verts.push_back({2 * std::cos(t), std::sin(t)});
  }
  const ConvexPolygon poly(verts);
  for (auto _ : state) benchmark::DoNotOptimize(sum_locus(poly, 0.5 * (k_range(poly).k_min + k_range(poly).k_max)));
}
BENCHMARK(BM_SumLocus)->Arg(3)->Arg(16)->Arg(256);

void BM_GridMin(benchmark::State& state) {
  const std::vector<Point> tri{{0, 0}, {0, 3}, {4, 0}};
  const auto specs = oracle::edge_specs(tri);
  const oracle::GridSpec grid({{-1, -1}, {5, 4}}, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        oracle::grid_min([&](Point p) { return oracle::squared_distance_sum(specs, p); }, grid));
  }
}
BENCHMARK(BM_GridMin)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
