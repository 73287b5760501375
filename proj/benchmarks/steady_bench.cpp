// Copyright 2026 The pbgqed Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "pbgqed/bistability.hpp"
#include "pbgqed/lindblad.hpp"
#include "pbgqed/observables.hpp"
#include "pbgqed/steady.hpp"

namespace {

using namespace pbgqed;

void BM_Liouvillian(benchmark::State& state) {
  const SystemParams p = SystemParams::pbg_cavity(10, 10, 2.0);
  const HilbertDims d(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(liouvillian(p, d));
  state.SetLabel("dim " + std::to_string(d.total_dim() * d.total_dim()));
}
BENCHMARK(BM_Liouvillian)->Arg(16)->Arg(64)->Arg(138)->Unit(benchmark::kMillisecond);

void BM_SteadyState(benchmark::State& state) {
  const SystemParams p = SystemParams::pbg_cavity(10, 0, 2.0);
  const HilbertDims d(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(steady_state(p, d));
}
BENCHMARK(BM_SteadyState)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_SolveAuto(benchmark::State& state) {
  const SystemParams p = SystemParams::pbg_cavity(10, 10, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_auto(p));
}
BENCHMARK(BM_SolveAuto)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_Husimi(benchmark::State& state) {
  const AutoSteadyState s = solve_auto(SystemParams::pbg_cavity(10, 0, 10.0));
  const FieldDensityMatrix f = partial_trace_atom(s.state.rho);
  const QGridSpec spec = QGridSpec::default_for(s.dims.n_max());
  for (auto _ : state) benchmark::DoNotOptimize(husimi_q(f, spec));
}
BENCHMARK(BM_Husimi)->Unit(benchmark::kMillisecond);

void BM_ObRoots(benchmark::State& state) {
  const SystemParams p = SystemParams::pbg_cavity(10, 10, 1.0);
  const StateEquation eq = StateEquation::from_params(p);
  const double m0 = saturation_photons(p);
  const double x = std::sqrt(0.4 / m0);
  for (auto _ : state) benchmark::DoNotOptimize(ob_roots(x, eq, m0));
}
BENCHMARK(BM_ObRoots);

}  // namespace

BENCHMARK_MAIN();
