#include <benchmark/benchmark.h>

#include "ballinterp/absorption.hpp"
#include "ballinterp/geometry.hpp"
#include "ballinterp/projector_norm.hpp"
#include "ballinterp/regular_simplex.hpp"
#include "ballinterp/rng.hpp"

using namespace ballinterp;

namespace {

// Fixed-seed simplex with vertices on the unit sphere, reused across runs so
// every benchmark measures the same instance.
Simplex inscribed_instance(int n) {
  DetRng rng(2024, static_cast<std::uint64_t>(n));
  std::vector<Point> vertices;
  vertices.reserve(n + 1);
  for (int j = 0; j <= n; ++j) vertices.push_back(rng.sphere_direction(n));
  return Simplex(std::move(vertices));
}

void BM_RegularNorm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(regular_norm(n));
}
BENCHMARK(BM_RegularNorm)->Arg(10)->Arg(100)->Arg(1000)->Arg(10000);

void BM_LagrangeBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Simplex s = regular_simplex(n);
  for (auto _ : state) benchmark::DoNotOptimize(lagrange_basis(s));
}
BENCHMARK(BM_LagrangeBasis)->RangeMultiplier(2)->Range(2, 64);

// Cost is dominated by the 2^n sign sweep; doubling n squares the work.
void BM_ProjectorNorm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Simplex s = inscribed_instance(n);
  const Ball ball(Point::Zero(n), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(projector_norm_value(s, ball));
}
BENCHMARK(BM_ProjectorNorm)->DenseRange(4, 20, 4);

void BM_AbsorptionIndex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Simplex s = inscribed_instance(n);
  const Ball ball(Point::Zero(n), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(absorption_index_ball(s, ball));
}
BENCHMARK(BM_AbsorptionIndex)->RangeMultiplier(2)->Range(2, 64);

void BM_McLowerBound(benchmark::State& state) {
  const int n = 8;
  const std::int64_t samples = state.range(0);
  const Simplex s = inscribed_instance(n);
  const Ball ball(Point::Zero(n), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(norm_lower_bound_mc(s, ball, samples, 7));
  state.SetItemsProcessed(state.iterations() * samples);
}
BENCHMARK(BM_McLowerBound)->Arg(1000)->Arg(10000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
