// Serial vs OpenMP timings of the parallel kernels. The second argument of
// each benchmark selects the path: 0 serial, 1 parallel.

#include "mpgeom/beams.hpp"
#include "mpgeom/optimize.hpp"
#include "mpgeom/run.hpp"
#include "mpgeom/scenario.hpp"
#include "mpgeom/vsh.hpp"

#include <benchmark/benchmark.h>

#include <string>

namespace {

mpg::Exec exec_of(const benchmark::State &st) {
  return st.range(0) ? mpg::Exec::Parallel : mpg::Exec::Serial;
}

void BM_VshGrid(benchmark::State &st) {
  for (auto _ : st) benchmark::DoNotOptimize(mpg::vsh_grid(3, 1, 1, 181, 360, exec_of(st)));
}
BENCHMARK(BM_VshGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BeamIntegral(benchmark::State &st) {
  mpg::BeamSpec b;
  b.mode = mpg::LaguerreGauss{1, 2};
  b.w0 = 1e-6;
  b.k_mag = 100.0 / b.w0;
  b.k_dir = mpg::SphDirection(0.7, 0.2);
  b.jones = mpg::JonesVector::lcp();
  b.offset = {2e-7, -1e-7};
  mpg::BeamIntegralOptions o;
  o.exec = exec_of(st);
  o.rel_tol = 1e-11;
  for (auto _ : st) benchmark::DoNotOptimize(mpg::beam_coupling_integral(b, 2, 1, o));
}
BENCHMARK(BM_BeamIntegral)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Optimize(benchmark::State &st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(mpg::optimize_geometry(2, 1, mpg::Objective::MaxCoupling, exec_of(st)));
}
BENCHMARK(BM_Optimize)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ScenarioScan(benchmark::State &st) {
  const auto s = mpg::load_scenario_file(std::string(MPGEOM_SCENARIOS) + "/e1_offset_scan.yaml");
  mpg::RunOptions o;
  o.exec = exec_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(mpg::run_scenario(s, mpg::Verb::Scan, o));
}
BENCHMARK(BM_ScenarioScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
