// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "templia/hausdorff.hpp"
#include "templia/boundary.hpp"
#include "templia/hybrid.hpp"
#include "templia/mandel_slice.hpp"
#include "templia/raster.hpp"

namespace {

using namespace templia;

const ParameterPair kPair{{0.0, 0.0}, {-0.62, -0.432}};
const SymbolicTemplate kTemplate = SymbolicTemplate::periodic({0, 1, 1});

GridSpec grid(int px) { return GridSpec::default_for_radius(escape_radius(kPair), px); }

void BM_JuliaSerial(benchmark::State& state) {
  const GridSpec g = grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(render_julia_serial(kPair, kTemplate, g, 200));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.pixel_count()));
}

void BM_JuliaParallel(benchmark::State& state) {
  const GridSpec g = grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(render_julia(kPair, kTemplate, g, 200));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.pixel_count()));
}

void BM_SliceSerial(benchmark::State& state) {
  const GridSpec g = default_slice_grid();
  for (auto _ : state) benchmark::DoNotOptimize(mandel_slice_serial(kTemplate, {-0.2, 0.6}, g, 200));
}

void BM_SliceParallel(benchmark::State& state) {
  const GridSpec g = default_slice_grid();
  for (auto _ : state) benchmark::DoNotOptimize(mandel_slice(kTemplate, {-0.2, 0.6}, g, 200));
}

void BM_HybridCountBrute(benchmark::State& state) {
  const auto length = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hybrid_count_brute({0.0, 0.0}, {-0.5, 0.3}, length));
}

void BM_HybridCountTree(benchmark::State& state) {
  const auto length = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hybrid_count_exact({0.0, 0.0}, {-0.5, 0.3}, length));
}

void BM_HausdorffBrute(benchmark::State& state) {
  const auto a = extract_boundary(render_julia(kPair, kTemplate, grid(256), 200).cells);
  const auto b = extract_boundary(render_julia(kPair, kTemplate, grid(256), 20).cells);
  for (auto _ : state) benchmark::DoNotOptimize(hausdorff_distance_brute(a.points, b.points));
}

void BM_HausdorffBuckets(benchmark::State& state) {
  const auto a = extract_boundary(render_julia(kPair, kTemplate, grid(256), 200).cells);
  const auto b = extract_boundary(render_julia(kPair, kTemplate, grid(256), 20).cells);
  for (auto _ : state) benchmark::DoNotOptimize(hausdorff_distance(a, b));
}

}  // namespace

BENCHMARK(BM_JuliaSerial)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JuliaParallel)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SliceSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SliceParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HybridCountBrute)->Arg(10)->Arg(14);
BENCHMARK(BM_HybridCountTree)->Arg(10)->Arg(14);
BENCHMARK(BM_HausdorffBrute)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HausdorffBuckets)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
