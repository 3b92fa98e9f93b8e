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


#include "healsim/maze.hpp"

#include <deque>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "healsim/error.hpp"
#include "support/oracles.hpp"

namespace healsim::maze {
namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(HEALSIM_FIXTURE_DIR) + "/mazes/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool adjacent(Coord a, Coord b) {
  return std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1;
}

bool touches(const MazeGrid& m, Coord c, Cell kind) {
  for (const Coord d : {Coord{-1, 0}, Coord{1, 0}, Coord{0, -1}, Coord{0, 1}}) {
    const Coord n{c.row + d.row, c.col + d.col};
    if (m.in_bounds(n) && m.at(n) == kind) return true;
  }
  return false;
}

// Path cells are fluid, contiguous, start next to the entry, end next to the
// exit.
void expect_valid_path(const MazeGrid& m, const std::vector<Coord>& path) {
  ASSERT_FALSE(path.empty());
  EXPECT_TRUE(touches(m, path.front(), Cell::kEntry));
  EXPECT_TRUE(touches(m, path.back(), Cell::kExit));
  for (std::size_t k = 0; k < path.size(); ++k) {
    EXPECT_EQ(m.at(path[k]), Cell::kFluid);
    if (k > 0) {
      EXPECT_TRUE(adjacent(path[k - 1], path[k]));
    }
  }
}

// Every cluster cell is connected to the entry through other cluster cells.
void expect_connected_cluster(const MazeGrid& m, const std::vector<bool>& cluster) {
  std::vector<bool> seen(m.size(), false);
  std::deque<Coord> q;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (cluster[m.index({r, c})] && touches(m, {r, c}, Cell::kEntry)) {
        seen[m.index({r, c})] = true;
        q.push_back({r, c});
      }
    }
  }
  while (!q.empty()) {
    const Coord c = q.front();
    q.pop_front();
    for (const Coord d : {Coord{-1, 0}, Coord{1, 0}, Coord{0, -1}, Coord{0, 1}}) {
      const Coord n{c.row + d.row, c.col + d.col};
      if (m.in_bounds(n) && cluster[m.index(n)] && !seen[m.index(n)]) {
        seen[m.index(n)] = true;
        q.push_back(n);
      }
    }
  }
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (cluster[k]) {
      EXPECT_TRUE(seen[k]) << "detached cluster cell " << k;
    }
  }
}

int parse_error_column(std::string_view text, int* line = nullptr) {
  try {
    parse_maze(text);
  } catch (const ParseError& e) {
    if (line) *line = e.line();
    return e.column();
  }
  return -1;
}

TEST(Parse, SmallFixture) {
  const auto m = parse_maze(fixture("small.txt"), 2e-3, 500.0);
  EXPECT_EQ(m.rows(), 7);
  EXPECT_EQ(m.cols(), 7);
  EXPECT_EQ(m.at({1, 0}), Cell::kEntry);
  EXPECT_EQ(m.at({5, 6}), Cell::kExit);
  EXPECT_EQ(m.at({1, 1}), Cell::kFluid);
  EXPECT_EQ(m.at({0, 0}), Cell::kWall);
  EXPECT_EQ(m.cell_size(), 2e-3);
  EXPECT_EQ(m.voltage(), 500.0);
  EXPECT_EQ(m.to_ascii(), fixture("small.txt"));
}

TEST(Parse, CrlfAndTrailingBlankLines) {
  const auto m = parse_maze("###\r\nE.X\r\n###\r\n\n\n");
  EXPECT_EQ(m.rows(), 3);
  EXPECT_EQ(m.cols(), 3);
}

TEST(Parse, RaggedRowReportsPosition) {
  int line = 0;
  EXPECT_EQ(parse_error_column("####\nE..X\n###\n", &line), 4);
  EXPECT_EQ(line, 3);
  EXPECT_EQ(parse_error_column("###\nE.X\n#####\n", &line), 4);
}

TEST(Parse, UnknownCharacterReportsPosition) {
  int line = 0;
  EXPECT_EQ(parse_error_column("####\nE.oX\n####\n", &line), 3);
  EXPECT_EQ(line, 2);
}

TEST(Parse, FluidOnBorderRejected) {
  int line = 0;
  EXPECT_EQ(parse_error_column("#.##\nE..X\n####\n", &line), 2);
  EXPECT_EQ(line, 1);
}

TEST(Parse, MissingElectrodesRejected) {
  EXPECT_THROW(parse_maze("####\n#..X\n####\n"), ParseError);
  EXPECT_THROW(parse_maze("####\nE..#\n####\n"), ParseError);
  EXPECT_THROW(parse_maze(""), ParseError);
  EXPECT_THROW(parse_maze("\n\n"), ParseError);
}

TEST(Grid, FieldGridMapping) {
  const auto m = parse_maze(fixture("small.txt"), 1e-3, 100.0);
  const auto g = to_field_grid(m);
  EXPECT_EQ(g.nx(), 7);
  EXPECT_EQ(g.ny(), 7);
  EXPECT_EQ(g.kind(0, 1), field::CellKind::kConductor);
  EXPECT_EQ(g.potential(0, 1), 100.0);
  EXPECT_EQ(g.kind(6, 5), field::CellKind::kConductor);
  EXPECT_EQ(g.potential(6, 5), 0.0);
  EXPECT_EQ(g.kind(0, 0), field::CellKind::kWall);
  EXPECT_EQ(g.kind(1, 1), field::CellKind::kFluid);
}

TEST(Path, StraightCorridor) {
  const auto m = parse_maze("#######\nE.....X\n#######\n");
  const auto sol = solve_maze(m);
  ASSERT_EQ(sol.status, GrowthStatus::kConnected);
  EXPECT_EQ(sol.growth.iterations, 5u);
  EXPECT_EQ(sol.path.size(), 5u);
  expect_valid_path(m, sol.path);
  for (std::size_t k = 0; k < sol.path.size(); ++k) {
    EXPECT_EQ(sol.path[k], (Coord{1, static_cast<int>(k) + 1}));
  }
}

TEST(Path, AdjacentElectrodesNeedNoGrowth) {
  const auto m = parse_maze("####\n#EX#\n#..#\n####\n");
  const auto sol = solve_maze(m);
  EXPECT_EQ(sol.status, GrowthStatus::kConnected);
  EXPECT_EQ(sol.growth.iterations, 0u);
  EXPECT_TRUE(sol.path.empty());
  const auto bfs = bfs_shortest_path(m);
  EXPECT_TRUE(bfs.found);
  EXPECT_TRUE(bfs.cells.empty());
}

TEST(Path, BfsMatchesDijkstraOracle) {
  for (const char* name : {"small.txt", "unique_3.txt", "loops_5.txt", "loops_11.txt",
                           "debris.txt"}) {
    const auto m = parse_maze(fixture(name));
    const auto bfs = bfs_shortest_path(m);
    ASSERT_TRUE(bfs.found) << name;
    EXPECT_EQ(static_cast<int>(bfs.cells.size()), testing::dijkstra_path_cells(m)) << name;
    expect_valid_path(m, bfs.cells);
  }
}

TEST(Path, TieBreakPrefersLowerRowThenColumn) {
  // Two equal routes around a central wall; the upper one wins.
  const auto m = parse_maze("#####\n#...#\nE.#.X\n#...#\n#####\n");
  const auto bfs = bfs_shortest_path(m);
  ASSERT_TRUE(bfs.found);
  ASSERT_EQ(bfs.cells.size(), 5u);
  EXPECT_EQ(bfs.cells[1], (Coord{1, 1}));
  EXPECT_EQ(bfs.cells[2], (Coord{1, 2}));
}

class UniqueMaze : public ::testing::TestWithParam<const char*> {};

TEST_P(UniqueMaze, DeterministicGrowthFollowsTheOnlyPath) {
  const auto m = parse_maze(fixture(GetParam()));
  ASSERT_TRUE(testing::fluid_is_tree(m));
  const auto sol = solve_maze(m);
  ASSERT_EQ(sol.status, GrowthStatus::kConnected);
  const auto bfs = bfs_shortest_path(m);
  EXPECT_EQ(sol.path, bfs.cells);
  EXPECT_EQ(static_cast<int>(sol.path.size()), testing::dijkstra_path_cells(m));
  EXPECT_EQ(sol.growth.iterations, sol.path.size());
  expect_connected_cluster(m, sol.growth.cluster);
}

INSTANTIATE_TEST_SUITE_P(Fixtures, UniqueMaze,
                         ::testing::Values("unique_3.txt", "unique_7.txt", "unique_19.txt",
                                           "unique_42.txt", "unique_101.txt"));

TEST(Growth, LoopsMazeFindsShortestRoute) {
  for (const char* name : {"loops_5.txt", "loops_11.txt", "loops_23.txt"}) {
    const auto m = parse_maze(fixture(name));
    const auto sol = solve_maze(m);
    ASSERT_EQ(sol.status, GrowthStatus::kConnected) << name;
    expect_valid_path(m, sol.path);
    EXPECT_GE(sol.path.size(), bfs_shortest_path(m).cells.size());
    EXPECT_GE(sol.growth.iterations, sol.path.size());
    expect_connected_cluster(m, sol.growth.cluster);
  }
}

TEST(Growth, ClusterInvariants) {
  const auto m = parse_maze(fixture("loops_11.txt"));
  const auto sol = solve_maze(m);
  std::size_t in_cluster = 0;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (!sol.growth.cluster[k]) continue;
    ++in_cluster;
    EXPECT_EQ(m.at({static_cast<int>(k) / m.cols(), static_cast<int>(k) % m.cols()}),
              Cell::kFluid);
  }
  EXPECT_EQ(in_cluster, sol.growth.iterations);
  EXPECT_EQ(sol.growth.solves, sol.growth.iterations);
  ASSERT_EQ(sol.growth.history.size(), sol.growth.iterations);
  for (std::size_t k = 0; k < sol.growth.history.size(); ++k) {
    const auto& step = sol.growth.history[k];
    EXPECT_EQ(step.iteration, k + 1);
    EXPECT_EQ(step.cluster_size, k + 1);
    EXPECT_EQ(step.connected, k + 1 == sol.growth.history.size());
    EXPECT_GT(step.annexed_field, 0.0);
  }
  for (std::size_t n = 0; n < m.size(); ++n) {
    const auto& grid = sol.field;
    if (sol.growth.cluster[n]) {
      EXPECT_EQ(grid.potentials()[n], m.voltage());
    }
  }
}

TEST(Growth, HaltsWithoutPath) {
  // Exit sealed off by a wall; the cluster fills the reachable region.
  const auto m = parse_maze("#######\nE..#..X\n#..#..#\n#######\n");
  const auto sol = solve_maze(m);
  EXPECT_EQ(sol.status, GrowthStatus::kNoPath);
  EXPECT_FALSE(sol.growth.connected);
  EXPECT_EQ(sol.growth.iterations, 4u);
  EXPECT_TRUE(sol.path.empty());
  EXPECT_FALSE(bfs_shortest_path(m).found);
  EXPECT_EQ(testing::dijkstra_path_cells(m), -1);
}

TEST(Growth, CurrentJumpsAtConnection) {
  const auto m = parse_maze(fixture("unique_7.txt"));
  const auto sol = solve_maze(m);
  const auto trace = current_trace(sol.growth);
  ASSERT_EQ(trace.size(), sol.growth.iterations);
  const double last = trace.back().current;
  for (std::size_t k = 0; k + 1 < trace.size(); ++k) {
    EXPECT_EQ(trace[k].iteration, k + 1);
    EXPECT_LT(trace[k].current, 1e-3 * last);
  }
  EXPECT_GE(last, m.voltage());
}

TEST(Growth, StochasticRunsReproduceWithSeed) {
  const auto m = parse_maze(fixture("loops_5.txt"));
  GrowthOptions o;
  o.mode = GrowthMode::kStochastic;
  o.eta = 2.0;
  o.seed = 17;
  const auto a = solve_maze(m, o);
  const auto b = solve_maze(m, o);
  EXPECT_EQ(a.growth.cluster, b.growth.cluster);
  EXPECT_EQ(a.path, b.path);
  ASSERT_EQ(a.status, GrowthStatus::kConnected);
  expect_valid_path(m, a.path);
  expect_connected_cluster(m, a.growth.cluster);
  o.seed = 18;
  const auto c = solve_maze(m, o);
  EXPECT_NE(a.growth.cluster, c.growth.cluster);
}

TEST(Growth, StochasticRejectsNegativeExponent) {
  GrowthOptions o;
  o.mode = GrowthMode::kStochastic;
  o.eta = -1.0;
  EXPECT_THROW(solve_maze(parse_maze(fixture("small.txt")), o), Error);
}

TEST(Growth, DebrisIslandsAreAvoided) {
  const auto m = parse_maze(fixture("debris.txt"));
  const auto sol = solve_with_debris(m);
  ASSERT_EQ(sol.status, GrowthStatus::kConnected);
  expect_valid_path(m, sol.path);
  expect_connected_cluster(m, sol.growth.cluster);
  EXPECT_EQ(sol.path.size(), bfs_shortest_path(m).cells.size());
}

TEST(Output, OverlayDrawsPath) {
  const auto m = parse_maze("#######\nE.....X\n#######\n");
  const auto sol = solve_maze(m);
  EXPECT_EQ(overlay_path(m, sol.path), "#######\nE*****X\n#######\n");
}

TEST(Output, ModeNames) {
  EXPECT_EQ(growth_mode_from_string("det"), GrowthMode::kDeterministic);
  EXPECT_EQ(growth_mode_from_string("stochastic"), GrowthMode::kStochastic);
  EXPECT_EQ(to_string(GrowthMode::kStochastic), "stoch");
  EXPECT_EQ(to_string(GrowthStatus::kNoPath), "no_path");
  EXPECT_THROW(growth_mode_from_string("random"), Error);
}

TEST(Generator, PerfectMazesAreTrees) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto m = generate_maze(6, 4, seed);
    EXPECT_EQ(m.rows(), 9);
    EXPECT_EQ(m.cols(), 13);
    EXPECT_NO_THROW(m.validate());
    EXPECT_TRUE(testing::fluid_is_tree(m));
    EXPECT_TRUE(bfs_shortest_path(m).found);
  }
  EXPECT_FALSE(testing::fluid_is_tree(generate_maze(6, 4, 1, 5)));
  EXPECT_EQ(generate_maze(5, 5, 9).to_ascii(), generate_maze(5, 5, 9).to_ascii());
}

}  // namespace
}  // namespace healsim::maze
