/**
 * Copyright 2026 The qtheta Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Serial reference sweep against the OpenMP sweep on the default grid.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "qtheta/catalog.hpp"
#include "qtheta/sweep.hpp"

namespace {

const qtheta::IdentityDescriptor& target() { return qtheta::find_identity("thm-2.2"); }

void BM_SweepSerial(benchmark::State& state) {
  const qtheta::GridSpec grid;
  for (auto _ : state) benchmark::DoNotOptimize(qtheta::sweep_serial(target(), grid));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.q_values.size() * grid.z_count));
}

void BM_SweepOpenMP(benchmark::State& state) {
  const qtheta::GridSpec grid;
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qtheta::sweep(target(), grid));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.q_values.size() * grid.z_count));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepOpenMP)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
