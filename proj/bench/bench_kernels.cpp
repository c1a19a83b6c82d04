// Serial reference vs OpenMP kernels. Cap threads with SCATTER1D_THREADS.

#include <benchmark/benchmark.h>

#include "scatter1d/invisibility.hpp"
#include "scatter1d/singularity.hpp"
#include "scatter1d/validation.hpp"

using namespace scatter1d;

namespace {

Execution mode(const benchmark::State& st) { return st.range(0) ? Execution::parallel : Execution::serial; }

void label(benchmark::State& st) { st.SetLabel(st.range(0) ? "parallel" : "serial"); }

void BM_SlabSweep(benchmark::State& st) {
  const auto cfg = left_invisible_slab(2.0062, 243, 260.0, 1050.0, 1080.0, 2000);
  for (auto _ : st) benchmark::DoNotOptimize(wavelength_sweep(cfg, mode(st)));
  label(st);
  st.SetItemsProcessed(st.iterations() * 2001);
}

void BM_SingularityScan(benchmark::State& st) {
  ScanGrid grid;
  grid.m = 100;
  grid.gamma_min = 0.95;
  grid.gamma_max = 1.05;
  grid.gamma_count = 3;
  grid.re_min = grid.im_min = 0.05;
  grid.re_max = grid.im_max = 0.6;
  grid.re_count = grid.im_count = 5;
  for (auto _ : st) benchmark::DoNotOptimize(scan_singularities(grid, mode(st)));
  label(st);
}

void BM_TransferSuite(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(validate_transfer(kDefaultSeed, mode(st)));
  label(st);
}

}  // namespace

BENCHMARK(BM_SlabSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SingularityScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TransferSuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
