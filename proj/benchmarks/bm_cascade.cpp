// Copyright 2026 The HealSim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "healsim/cascade.hpp"

namespace {

using healsim::cascade::Params;

Params params(double z) {
  Params p;
  p.voltage = 50.0;
  p.gap = 200e-6;
  p.z_in = z;
  p.z_out = z;
  p.z_bridge = 1000.0;
  p.threshold_field = p.nominal_field() / 5.0;
  p.lambda = 1e10;
  return p;
}

// Bridge count grows as Z_b/Z, so the iterative cost does too.
void BM_SimulateCascade(benchmark::State& state) {
  const auto p = params(1000.0 / static_cast<double>(state.range(0)));
  for (auto _ : state) {
    auto r = healsim::cascade::simulate_cascade(p);
    benchmark::DoNotOptimize(r);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SimulateCascade)->RangeMultiplier(8)->Range(1, 4096)->Complexity();

void BM_ClosedForm(benchmark::State& state) {
  const auto p = params(1000.0 / static_cast<double>(state.range(0)));
  for (auto _ : state) {
    const auto m = healsim::cascade::healed_metrics(p);
    auto t = healsim::cascade::total_heal_time(p, m.bridges);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_ClosedForm)->Arg(1)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
