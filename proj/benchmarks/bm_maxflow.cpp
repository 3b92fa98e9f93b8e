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


#include <random>

#include <benchmark/benchmark.h>

#include "healsim/contact_graph.hpp"

namespace {

using healsim::sim::ContactGraph;

// Lattice-like contact network: each body touches a few nearby bodies,
// the first and last columns touch the electrodes.
ContactGraph chains(std::uint32_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> hop(1, 12);
  ContactGraph g(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (int k = 0; k < 3; ++k) {
      const std::uint32_t b = a + hop(rng);
      if (b < n) g.add_contact(a, b);
    }
    if (a < n / 20) g.touch_left(a);
    if (a >= n - n / 20) g.touch_right(a);
  }
  return g;
}

void BM_MaxDisjointPaths(benchmark::State& state) {
  const auto g = chains(static_cast<std::uint32_t>(state.range(0)), 42);
  for (auto _ : state) {
    auto r = healsim::sim::max_disjoint_paths(g);
    benchmark::DoNotOptimize(r);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxDisjointPaths)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

}  // namespace

BENCHMARK_MAIN();
