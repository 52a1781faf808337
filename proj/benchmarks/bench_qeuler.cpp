// Copyright 2026 The qeuler Authors
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

#include "qeuler/correlations.hpp"
#include "qeuler/dissipation.hpp"
#include "qeuler/linalg.hpp"
#include "qeuler/random.hpp"
#include "qeuler/sweep.hpp"

namespace {

using namespace qeuler;

void BM_HermitianSpectrum(benchmark::State& state) {
  Rng rng(7);
  const auto d = static_cast<Eigen::Index>(state.range(0));
  const ComplexMatrix m = random_density_matrix(d, rng).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_spectrum(m));
}
BENCHMARK(BM_HermitianSpectrum)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_OptimizeChiA(benchmark::State& state) {
  Rng rng(11);
  const DensityMatrix rho = random_bipartite_state(kTwoQubits, rng);
  GridSpec grid;
  grid.theta_points = static_cast<int>(state.range(0));
  grid.phi_points = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(optimize_chi_a(rho, grid));
}
BENCHMARK(BM_OptimizeChiA)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_SweepPoint(benchmark::State& state) {
  const RunConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(sweep_point(0.6, config));
}
BENCHMARK(BM_SweepPoint)->Unit(benchmark::kMillisecond);

void BM_Evolve(benchmark::State& state) {
  const ModelParams params = ModelParams::collective(1.0, 10.0);
  EvolveOptions options;
  options.t_max = static_cast<double>(state.range(0));
  options.stride = 100;
  options.stationary_tolerance = 0.0;
  const DensityMatrix rho0(projector(two_qubit::gg()), kTwoQubits);
  for (auto _ : state) benchmark::DoNotOptimize(evolve(rho0, params, options));
}
BENCHMARK(BM_Evolve)->Arg(5)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
