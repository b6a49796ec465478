// Copyright 2026 The zeno-screen Authors
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

// Serial reference loop vs the OpenMP kernel on the sweeps the CLI runs.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "zeno/commands.hpp"

namespace {

using zeno::cli::Execution;

Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::OpenMP;
}

void label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0
                     ? "serial"
                     : "openmp x" + std::to_string(zeno::parallel::max_threads()));
}

void BM_Validate(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeno::cli::cmd_validate({}, exec_of(state)));
  }
  label(state);
}
BENCHMARK(BM_Validate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ScreenAtomSimulated(benchmark::State& state) {
  zeno::cli::ScreenAtomSpec spec;
  spec.variant = zeno::cli::ScreenAtomSpec::Variant::Simulated;
  spec.samples = 33;
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeno::cli::cmd_screen_atom(spec, exec_of(state)));
  }
  label(state);
}
BENCHMARK(BM_ScreenAtomSimulated)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ScreenField(benchmark::State& state) {
  zeno::cli::ScreenFieldSpec spec;
  spec.samples = 9;
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeno::cli::cmd_screen_field(spec, exec_of(state)));
  }
  label(state);
}
BENCHMARK(BM_ScreenField)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SweepN(benchmark::State& state) {
  zeno::cli::SweepNSpec spec;
  spec.omega_over_gamma = {0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeno::cli::cmd_sweep_n(spec, exec_of(state)));
  }
  label(state);
}
BENCHMARK(BM_SweepN)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
