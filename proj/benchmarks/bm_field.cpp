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

#include "healsim/field.hpp"

namespace {

using namespace healsim::field;

FieldGrid plates(int n) {
  FieldGrid g(n, n, 1e-5);
  for (int j = 0; j < n; ++j) {
    g.set_conductor(0, j, 30.0);
    g.set_conductor(n - 1, j, 0.0);
  }
  for (int j = n / 4; j < 3 * n / 4; ++j) g.set_wall(n / 2, j);
  return g;
}

void BM_SolveCold(benchmark::State& state) {
  const auto grid = plates(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto g = grid;
    auto stats = solve_in_place(g);
    benchmark::DoNotOptimize(stats);
  }
  state.counters["cells"] = static_cast<double>(grid.size());
}
BENCHMARK(BM_SolveCold)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

// One extra conductor cell on a converged grid, as in maze growth.
void BM_SolveWarm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto solved = plates(n);
  solve_in_place(solved);
  for (auto _ : state) {
    auto g = solved;
    g.set_conductor(1, n / 2, 30.0);
    auto stats = solve_in_place(g);
    benchmark::DoNotOptimize(stats);
  }
}
BENCHMARK(BM_SolveWarm)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_FieldFromPotential(benchmark::State& state) {
  const auto g = solve_potential(plates(128));
  for (auto _ : state) {
    auto e = field_from_potential(g);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_FieldFromPotential);

}  // namespace

BENCHMARK_MAIN();
