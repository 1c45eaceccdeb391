#include <benchmark/benchmark.h>

#include <pulsefront/eigensolve.hpp>
#include <pulsefront/homog.hpp>
#include <pulsefront/patch.hpp>
#include <pulsefront/simulate.hpp>
#include <pulsefront/speed.hpp>

namespace {

using namespace pulsefront;

ProfilePair sinusoid_pair() {
  return ProfilePair(PeriodicProfile::reciprocal_sinusoid(0.3),
                     PeriodicProfile::sinusoid(1.0, 0.5, 1));
}

void BM_PrincipalEigenvalue(benchmark::State& state) {
  ProfilePair pair = sinusoid_pair();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    EigenResult res = principal_eigenvalue({pair, 1.0, 0.5, n});
    benchmark::DoNotOptimize(res.k);
  }
}
BENCHMARK(BM_PrincipalEigenvalue)->Arg(256)->Arg(1024);

void BM_MinimalSpeed(benchmark::State& state) {
  ProfilePair pair = sinusoid_pair();
  for (auto _ : state) {
    SpeedResult res = minimal_speed(pair, 0.05, 256);
    benchmark::DoNotOptimize(res.c_star);
  }
}
BENCHMARK(BM_MinimalSpeed);

void BM_PatchDispersionRoot(benchmark::State& state) {
  PatchConfig cfg{1.0, 0.8, 0.1, 1.0};
  for (auto _ : state) {
    PatchDispersion pd = k_patch(cfg, 1.0);
    benchmark::DoNotOptimize(pd.k);
  }
}
BENCHMARK(BM_PatchDispersionRoot);

void BM_GammaQuadrature(benchmark::State& state) {
  ProfilePair pair = sinusoid_pair();
  for (auto _ : state) {
    HomogReport rep = homogenize(pair);
    benchmark::DoNotOptimize(rep.gamma);
  }
}
BENCHMARK(BM_GammaQuadrature);

void BM_FrontSimulationStep(benchmark::State& state) {
  // short run, dominated by the interior update loop
  ProfilePair pair = sinusoid_pair();
  SimConfig cfg = make_sim_config(pair, 0.25, 60.0, 0.25 / 16.0, 2.0);
  for (auto _ : state) {
    SimOutput out = run_front(cfg);
    benchmark::DoNotOptimize(out.result.measured_speed);
  }
}
BENCHMARK(BM_FrontSimulationStep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
