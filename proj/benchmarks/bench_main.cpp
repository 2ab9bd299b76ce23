#include <benchmark/benchmark.h>

#include "ptdirac/blas_runtime.hpp"
#include "ptdirac/evolution.hpp"
#include "ptdirac/existence.hpp"
#include "ptdirac/ptquad.hpp"
#include "ptdirac/solitons.hpp"
#include "ptdirac/stability.hpp"

using namespace ptdirac;

static void BM_PtSoliton(benchmark::State& state) {
  const UniformGrid g = UniformGrid::with_spacing(30.0, 0.01);
  for (auto _ : state) benchmark::DoNotOptimize(new_model_pt_soliton(0.8, 0.2, g));
}
BENCHMARK(BM_PtSoliton)->Unit(benchmark::kMillisecond);

static void BM_OmegaCritical(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(omega_c(0.5));
}
BENCHMARK(BM_OmegaCritical)->Unit(benchmark::kMicrosecond);

static void BM_CollocationMesh(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(collocation_mesh(N, 40.0));
}
BENCHMARK(BM_CollocationMesh)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

static void BM_Spectrum(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const SolitonProfile p = stability_profile(0.8, 0.2, 40.0);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(p, 0.2, 0.8, N, 40.0));
}
BENCHMARK(BM_Spectrum)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

// One unit of time on a 6001-node grid.
static void BM_EvolveThirring(benchmark::State& state) {
  const SolitonProfile p = thirring_soliton(0.3, 0.6, UniformGrid::with_spacing(30.0, 0.01));
  const FieldState s = p.state();
  for (auto _ : state) benchmark::DoNotOptimize(evolve(ModelParams::thirring(0.3), s, 1.0, 0.01));
}
BENCHMARK(BM_EvolveThirring)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  configure_blas_runtime(argc, argv);
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
