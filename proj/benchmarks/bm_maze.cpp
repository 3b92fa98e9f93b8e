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

#include "healsim/maze.hpp"

namespace {

using namespace healsim::maze;

// Arg: rooms per side; the grid is (2n+1) x (2n+1).
void BM_SolveDeterministic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto m = generate_maze(n, n, 7);
  for (auto _ : state) {
    auto sol = solve_maze(m);
    benchmark::DoNotOptimize(sol);
  }
}
BENCHMARK(BM_SolveDeterministic)->Arg(5)->Arg(10)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_SolveStochastic(benchmark::State& state) {
  const auto m = generate_maze(15, 15, 7, 15);
  GrowthOptions o;
  o.mode = GrowthMode::kStochastic;
  o.eta = 2.0;
  for (auto _ : state) {
    auto sol = solve_maze(m, o);
    benchmark::DoNotOptimize(sol);
  }
}
BENCHMARK(BM_SolveStochastic)->Unit(benchmark::kMillisecond);

void BM_Bfs(benchmark::State& state) {
  const auto m = generate_maze(15, 15, 7, 15);
  for (auto _ : state) {
    auto p = bfs_shortest_path(m);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_Bfs);

}  // namespace

BENCHMARK_MAIN();
