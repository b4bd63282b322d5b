// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include <span>
#include <vector>

#include "boxmin/analysis.hpp"
#include "boxmin/kernels.hpp"
#include "boxmin/lowdim.hpp"

namespace {

using namespace boxmin;

void lattice_sum_parallel(benchmark::State& state) {
  const auto F = functions::explicit_construction(3);
  const int R = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::lattice_sum<double>(3, R, [&](std::span<const int> n) {
      const std::vector<double> x(n.begin(), n.end());
      return F(x);
    }));
  }
}

void lattice_sum_reference(benchmark::State& state) {
  const auto F = functions::explicit_construction(3);
  const int R = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::lattice_sum_serial<double>(3, R, [&](std::span<const int> n) {
      const std::vector<double> x(n.begin(), n.end());
      return F(x);
    }));
  }
}

void poisson_parallel(benchmark::State& state) {
  const auto F = functions::explicit_construction(2);
  const std::vector<double> t = {0.3, 0.7};
  for (auto _ : state) benchmark::DoNotOptimize(analysis::poisson_sum(F, t, static_cast<int>(state.range(0))).sum);
}

void poisson_reference(benchmark::State& state) {
  const auto F = functions::explicit_construction(2);
  const std::vector<double> t = {0.3, 0.7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(analysis::poisson_sum_serial(F, t, static_cast<int>(state.range(0))).sum);
  }
}

GridSpec sweep_grid() {
  GridSpec g;
  g.points_per_axis = 41;
  g.exterior_samples = 200'000;
  return g;
}

void verify_parallel(benchmark::State& state) {
  const auto p = lowdim::explicit_polynomial(3);
  const auto g = sweep_grid();
  for (auto _ : state) benchmark::DoNotOptimize(lowdim::verify_admissibility(p, g).exterior_max);
}

void verify_reference(benchmark::State& state) {
  const auto p = lowdim::explicit_polynomial(3);
  const auto g = sweep_grid();
  for (auto _ : state) benchmark::DoNotOptimize(lowdim::verify_admissibility_serial(p, g).exterior_max);
}

}  // namespace

BENCHMARK(lattice_sum_parallel)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(lattice_sum_reference)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(poisson_parallel)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(poisson_reference)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(verify_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(verify_reference)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
