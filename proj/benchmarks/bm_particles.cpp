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

#include "healsim/particles.hpp"

namespace {

using namespace healsim;

sim::SimConfig config(double width_um, double cutoff) {
  sim::SimConfig c;
  c.dispersion = {{0.05, 2.5}, {{ParticleSpec::sphere(5e-6, kCopperDensity), 100.0}}};
  c.gap = {200e-6, width_um * 1e-6, 30.0};
  c.layer_depth = 200e-6;
  c.force_cutoff_radii = cutoff;
  return c;
}

// Arg: electrode width in um (about 0.85 particles per um).
void BM_Advance(benchmark::State& state) {
  const sim::Simulation s(config(static_cast<double>(state.range(0)), 0.0));
  auto st = s.initialize();
  for (auto _ : state) {
    auto dt = s.advance(st);
    benchmark::DoNotOptimize(dt);
  }
  state.counters["particles"] = static_cast<double>(s.particle_count());
}
BENCHMARK(BM_Advance)->Arg(60)->Arg(235)->Arg(940)->Unit(benchmark::kMillisecond);

void BM_AdvanceCutoff(benchmark::State& state) {
  const sim::Simulation s(config(940.0, 20.0));
  auto st = s.initialize();
  for (auto _ : state) {
    auto dt = s.advance(st);
    benchmark::DoNotOptimize(dt);
  }
}
BENCHMARK(BM_AdvanceCutoff)->Unit(benchmark::kMillisecond);

void BM_DetectBridges(benchmark::State& state) {
  const sim::Simulation s(config(940.0, 0.0));
  auto st = s.initialize();
  for (auto _ : state) {
    auto n = s.detect_bridges(st);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_DetectBridges)->Unit(benchmark::kMicrosecond);

void BM_FirstBridge(benchmark::State& state) {
  auto c = config(235.0, 0.0);
  c.stop_after_bridges = 1;
  c.max_time = 1e4;
  for (auto _ : state) {
    auto r = sim::run_heal(c);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_FirstBridge)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
