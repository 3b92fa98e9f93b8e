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
#include <vector>

#include "healsim/error.hpp"
#include "healsim/maze.hpp"

namespace healsim::maze {
namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return std::min(n - 1, static_cast<std::size_t>(u * static_cast<double>(n)));
}

}  // namespace

MazeGrid generate_maze(int cells_w, int cells_h, std::uint64_t seed,
                       std::size_t extra_openings) {
  if (cells_w < 1 || cells_h < 1) {
    throw Error(ErrorCode::kInvalidArgument, "maze needs at least one room");
  }
  MazeGrid maze(2 * cells_h + 1, 2 * cells_w + 1);
  std::mt19937_64 rng(seed);
  auto room = [](int r, int c) { return Coord{2 * r + 1, 2 * c + 1}; };

  std::vector<bool> seen(static_cast<std::size_t>(cells_w * cells_h), false);
  std::vector<std::pair<int, int>> stack{{0, 0}};
  seen[0] = true;
  maze.set(room(0, 0), Cell::kFluid);
  constexpr int kDr[4] = {-1, 0, 0, 1};
  constexpr int kDc[4] = {0, -1, 1, 0};
  while (!stack.empty()) {
    const auto [r, c] = stack.back();
    int open[4];
    std::size_t n = 0;
    for (int k = 0; k < 4; ++k) {
      const int nr = r + kDr[k];
      const int nc = c + kDc[k];
      if (nr < 0 || nc < 0 || nr >= cells_h || nc >= cells_w) continue;
      if (!seen[static_cast<std::size_t>(nr * cells_w + nc)]) open[n++] = k;
    }
    if (n == 0) {
      stack.pop_back();
      continue;
    }
    const int k = open[pick(rng, n)];
    const int nr = r + kDr[k];
    const int nc = c + kDc[k];
    seen[static_cast<std::size_t>(nr * cells_w + nc)] = true;
    maze.set({2 * r + 1 + kDr[k], 2 * c + 1 + kDc[k]}, Cell::kFluid);
    maze.set(room(nr, nc), Cell::kFluid);
    stack.push_back({nr, nc});
  }

  if (extra_openings > 0) {
    std::vector<Coord> walls;
    for (int r = 1; r < maze.rows() - 1; ++r) {
      for (int c = 1; c < maze.cols() - 1; ++c) {
        if ((r + c) % 2 == 1 && maze.at({r, c}) == Cell::kWall) walls.push_back({r, c});
      }
    }
    for (std::size_t k = 0; k < extra_openings && !walls.empty(); ++k) {
      const std::size_t i = pick(rng, walls.size());
      maze.set(walls[i], Cell::kFluid);
      walls[i] = walls.back();
      walls.pop_back();
    }
  }

  maze.set({1, 0}, Cell::kEntry);
  maze.set({2 * cells_h - 1, 2 * cells_w}, Cell::kExit);
  return maze;
}

}  // namespace healsim::maze
