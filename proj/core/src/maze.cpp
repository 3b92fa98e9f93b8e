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

#include <array>
#include <cmath>
#include <deque>
#include <limits>
#include <random>

#include "healsim/error.hpp"

namespace healsim::maze {
namespace {

// Neighbour order is (row, col) ascending, which makes "first best" scans
// resolve ties by lowest row then lowest column.
constexpr std::array<Coord, 4> kSteps{{{-1, 0}, {0, -1}, {0, 1}, {1, 0}}};

Coord operator+(Coord a, Coord b) { return {a.row + b.row, a.col + b.col}; }

bool touches(const MazeGrid& maze, Coord c, Cell kind) {
  for (const auto s : kSteps) {
    const Coord n = c + s;
    if (maze.in_bounds(n) && maze.at(n) == kind) return true;
  }
  return false;
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

MazeGrid::MazeGrid(int rows, int cols, double cell_size, double voltage)
    : rows_(rows), cols_(cols), cell_size_(cell_size), voltage_(voltage) {
  if (rows < 1 || cols < 1) {
    throw Error(ErrorCode::kInvalidArgument, "maze needs at least one cell");
  }
  if (!(cell_size > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "maze cell size must be > 0");
  }
  cells_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                Cell::kWall);
}

void MazeGrid::validate() const {
  bool entry = false;
  bool exit = false;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      const Cell cell = at({r, c});
      entry = entry || cell == Cell::kEntry;
      exit = exit || cell == Cell::kExit;
      const bool border = r == 0 || c == 0 || r == rows_ - 1 || c == cols_ - 1;
      if (border && cell == Cell::kFluid) {
        throw Error(ErrorCode::kInvalidArgument,
                    "maze border must be wall or electrode (row " +
                        std::to_string(r) + ", col " + std::to_string(c) + ")");
      }
    }
  }
  if (!entry) throw Error(ErrorCode::kInvalidArgument, "maze has no entry");
  if (!exit) throw Error(ErrorCode::kInvalidArgument, "maze has no exit");
}

std::string MazeGrid::to_ascii() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_ + 1));
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      switch (at({r, c})) {
        case Cell::kWall: out += '#'; break;
        case Cell::kFluid: out += '.'; break;
        case Cell::kEntry: out += 'E'; break;
        case Cell::kExit: out += 'X'; break;
      }
    }
    out += '\n';
  }
  return out;
}

MazeGrid parse_maze(std::string_view text, double cell_size, double voltage) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("empty maze", 1, 1);

  const std::size_t width = lines.front().size();
  if (width == 0) throw ParseError("empty maze row", 1, 1);
  MazeGrid maze(static_cast<int>(lines.size()), static_cast<int>(width),
                cell_size, voltage);
  bool entry = false;
  bool exit = false;
  for (std::size_t r = 0; r < lines.size(); ++r) {
    const auto line = lines[r];
    const int line_no = static_cast<int>(r) + 1;
    if (line.size() != width) {
      throw ParseError("ragged row (expected " + std::to_string(width) +
                           " columns, found " + std::to_string(line.size()) + ")",
                       line_no, static_cast<int>(std::min(line.size(), width)) + 1);
    }
    for (std::size_t c = 0; c < width; ++c) {
      Cell cell;
      switch (line[c]) {
        case '#': cell = Cell::kWall; break;
        case '.': cell = Cell::kFluid; break;
        case 'E': cell = Cell::kEntry; entry = true; break;
        case 'X': cell = Cell::kExit; exit = true; break;
        default:
          throw ParseError(std::string("unknown maze character '") + line[c] + "'",
                           line_no, static_cast<int>(c) + 1);
      }
      const bool border = r == 0 || c == 0 || r + 1 == lines.size() || c + 1 == width;
      if (border && cell == Cell::kFluid) {
        throw ParseError("fluid cell on the maze border", line_no,
                         static_cast<int>(c) + 1);
      }
      maze.set({static_cast<int>(r), static_cast<int>(c)}, cell);
    }
  }
  if (!entry) throw ParseError("maze has no entry electrode 'E'", 1, 1);
  if (!exit) throw ParseError("maze has no exit electrode 'X'", 1, 1);
  return maze;
}

field::FieldGrid to_field_grid(const MazeGrid& maze) {
  field::FieldGrid grid(maze.cols(), maze.rows(), maze.cell_size());
  for (int r = 0; r < maze.rows(); ++r) {
    for (int c = 0; c < maze.cols(); ++c) {
      switch (maze.at({r, c})) {
        case Cell::kWall: grid.set_wall(c, r); break;
        case Cell::kFluid: grid.set_fluid(c, r); break;
        case Cell::kEntry: grid.set_conductor(c, r, maze.voltage()); break;
        case Cell::kExit: grid.set_conductor(c, r, 0.0); break;
      }
    }
  }
  return grid;
}

PathResult shortest_path(const MazeGrid& maze,
                         const std::function<bool(Coord)>& passable) {
  constexpr int kUnseen = std::numeric_limits<int>::max();
  std::vector<int> dist(maze.size(), kUnseen);
  std::deque<Coord> queue;
  bool direct = false;
  for (int r = 0; r < maze.rows(); ++r) {
    for (int c = 0; c < maze.cols(); ++c) {
      if (maze.at({r, c}) != Cell::kExit) continue;
      dist[maze.index({r, c})] = 0;
      queue.push_back({r, c});
      direct = direct || touches(maze, {r, c}, Cell::kEntry);
    }
  }
  if (direct) return {true, {}};

  while (!queue.empty()) {
    const Coord cur = queue.front();
    queue.pop_front();
    for (const auto s : kSteps) {
      const Coord n = cur + s;
      if (!maze.in_bounds(n) || maze.at(n) != Cell::kFluid || !passable(n)) continue;
      if (dist[maze.index(n)] != kUnseen) continue;
      dist[maze.index(n)] = dist[maze.index(cur)] + 1;
      queue.push_back(n);
    }
  }

  Coord best{-1, -1};
  int best_dist = kUnseen;
  for (int r = 0; r < maze.rows(); ++r) {
    for (int c = 0; c < maze.cols(); ++c) {
      const Coord here{r, c};
      if (maze.at(here) != Cell::kFluid || dist[maze.index(here)] == kUnseen) continue;
      if (!touches(maze, here, Cell::kEntry)) continue;
      if (dist[maze.index(here)] < best_dist) {
        best_dist = dist[maze.index(here)];
        best = here;
      }
    }
  }
  if (best_dist == kUnseen) return {false, {}};

  PathResult result{true, {best}};
  Coord cur = best;
  while (dist[maze.index(cur)] > 1) {
    const int want = dist[maze.index(cur)] - 1;
    for (const auto s : kSteps) {
      const Coord n = cur + s;
      if (maze.in_bounds(n) && maze.at(n) == Cell::kFluid &&
          dist[maze.index(n)] == want) {
        cur = n;
        break;
      }
    }
    result.cells.push_back(cur);
  }
  return result;
}

PathResult bfs_shortest_path(const MazeGrid& maze) {
  return shortest_path(maze, [](Coord) { return true; });
}

std::string_view to_string(GrowthMode mode) {
  return mode == GrowthMode::kDeterministic ? "det" : "stoch";
}

GrowthMode growth_mode_from_string(std::string_view name) {
  if (name == "det" || name == "deterministic") return GrowthMode::kDeterministic;
  if (name == "stoch" || name == "stochastic") return GrowthMode::kStochastic;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown growth mode '" + std::string(name) + "'");
}

std::string_view to_string(GrowthStatus status) {
  return status == GrowthStatus::kConnected ? "connected" : "no_path";
}

double entry_current(const MazeGrid& maze, const field::FieldGrid& solved,
                     const std::vector<bool>& at_drive, double leakage_ratio) {
  const double v = maze.voltage();
  double current = 0.0;
  for (int r = 0; r < maze.rows(); ++r) {
    for (int c = 0; c < maze.cols(); ++c) {
      if (!at_drive[maze.index({r, c})]) continue;
      for (const auto s : kSteps) {
        const Coord n = Coord{r, c} + s;
        if (!maze.in_bounds(n) || at_drive[maze.index(n)]) continue;
        if (maze.at(n) == Cell::kExit) {
          current += v;
        } else if (maze.at(n) == Cell::kFluid) {
          current += leakage_ratio * (v - solved.potential(n.col, n.row));
        }
      }
    }
  }
  return current;
}

MazeSolution solve_maze(const MazeGrid& maze, const GrowthOptions& options) {
  maze.validate();
  if (options.mode == GrowthMode::kStochastic && !(options.eta >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "growth exponent must be >= 0");
  }
  MazeSolution solution;
  solution.field = to_field_grid(maze);
  auto& grid = solution.field;
  auto& growth = solution.growth;
  growth.cluster.assign(maze.size(), false);

  std::vector<bool> at_drive(maze.size(), false);
  bool connected = false;
  for (int r = 0; r < maze.rows(); ++r) {
    for (int c = 0; c < maze.cols(); ++c) {
      if (maze.at({r, c}) != Cell::kEntry) continue;
      at_drive[maze.index({r, c})] = true;
      connected = connected || touches(maze, {r, c}, Cell::kExit);
    }
  }

  std::mt19937_64 rng(options.seed);
  std::vector<Coord> candidates;
  std::vector<double> strength;
  while (!connected) {
    candidates.clear();
    for (int r = 0; r < maze.rows(); ++r) {
      for (int c = 0; c < maze.cols(); ++c) {
        const Coord here{r, c};
        if (maze.at(here) != Cell::kFluid || at_drive[maze.index(here)]) continue;
        for (const auto s : kSteps) {
          const Coord n = here + s;
          if (maze.in_bounds(n) && at_drive[maze.index(n)]) {
            candidates.push_back(here);
            break;
          }
        }
      }
    }
    if (candidates.empty()) break;

    field::solve_in_place(grid, options.solve);
    ++growth.solves;
    const auto e = field::field_from_potential(grid);
    strength.clear();
    for (const auto& cand : candidates) strength.push_back(e.magnitude(cand.col, cand.row));

    std::size_t pick = 0;
    if (options.mode == GrowthMode::kDeterministic) {
      for (std::size_t k = 1; k < candidates.size(); ++k) {
        if (strength[k] > strength[pick]) pick = k;
      }
    } else {
      double total = 0.0;
      for (auto& w : strength) total += (w = std::pow(w, options.eta));
      if (total > 0.0) {
        double u = uniform01(rng) * total;
        pick = candidates.size() - 1;
        for (std::size_t k = 0; k < candidates.size(); ++k) {
          if (u < strength[k]) {
            pick = k;
            break;
          }
          u -= strength[k];
        }
      } else {
        pick = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(candidates.size()));
      }
    }

    const Coord chosen = candidates[pick];
    const double chosen_field = e.magnitude(chosen.col, chosen.row);
    growth.cluster[maze.index(chosen)] = true;
    at_drive[maze.index(chosen)] = true;
    grid.set_conductor(chosen.col, chosen.row, maze.voltage());
    connected = touches(maze, chosen, Cell::kExit);
    ++growth.iterations;
    growth.history.push_back({growth.iterations, chosen, chosen_field,
                              growth.iterations,
                              entry_current(maze, grid, at_drive, options.leakage_ratio),
                              connected});
  }

  growth.connected = connected;
  solution.status = connected ? GrowthStatus::kConnected : GrowthStatus::kNoPath;
  if (connected) {
    const auto route = shortest_path(
        maze, [&](Coord c) { return static_cast<bool>(growth.cluster[maze.index(c)]); });
    solution.path = route.cells;
  }
  return solution;
}

MazeSolution solve_with_debris(const MazeGrid& maze, const GrowthOptions& options) {
  return solve_maze(maze, options);
}

std::vector<CurrentSample> current_trace(const GrowthState& growth) {
  std::vector<CurrentSample> trace;
  trace.reserve(growth.history.size());
  for (const auto& step : growth.history) trace.push_back({step.iteration, step.current});
  return trace;
}

std::string overlay_path(const MazeGrid& maze, const std::vector<Coord>& path) {
  std::string ascii = maze.to_ascii();
  const auto stride = static_cast<std::size_t>(maze.cols()) + 1;
  for (const auto& c : path) {
    ascii[static_cast<std::size_t>(c.row) * stride + static_cast<std::size_t>(c.col)] = '*';
  }
  return ascii;
}

}  // namespace healsim::maze
