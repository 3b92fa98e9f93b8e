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

// Maze solving by field-biased growth of a conductive cluster.
//
// The entry electrode and everything the cluster has annexed sit at the
// drive voltage, the exit at 0 V, walls are insulating. Each iteration
// re-solves the Laplace problem and annexes one fluid cell adjacent to the
// cluster: the strongest-field candidate in deterministic mode, or one drawn
// with probability ~ |E|^eta in stochastic mode. Growth stops at the first
// annexation that touches the exit.
//
// ASCII format, one row per line, first line is the top row:
//   '#' wall   '.' fluid   'E' entry electrode   'X' exit electrode

#ifndef HEALSIM_MAZE_HPP_
#define HEALSIM_MAZE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "healsim/field.hpp"

namespace healsim::maze {

enum class Cell : std::uint8_t { kWall, kFluid, kEntry, kExit };

struct Coord {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Coord&, const Coord&) = default;
};

inline constexpr double kDefaultCellSize = 1e-3;   // m
inline constexpr double kDefaultVoltage = 1000.0;  // V

class MazeGrid {
 public:
  MazeGrid(int rows, int cols, double cell_size = kDefaultCellSize,
           double voltage = kDefaultVoltage);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double cell_size() const { return cell_size_; }
  double voltage() const { return voltage_; }
  void set_voltage(double volts) { voltage_ = volts; }

  bool in_bounds(Coord c) const {
    return c.row >= 0 && c.col >= 0 && c.row < rows_ && c.col < cols_;
  }
  Cell at(Coord c) const { return cells_[index(c)]; }
  void set(Coord c, Cell cell) { cells_[index(c)] = cell; }
  std::size_t index(Coord c) const {
    return static_cast<std::size_t>(c.row) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c.col);
  }
  std::size_t size() const { return cells_.size(); }

  /// Entry and exit present, and no fluid cell on the border.
  void validate() const;
  std::string to_ascii() const;

 private:
  int rows_;
  int cols_;
  double cell_size_;
  double voltage_;
  std::vector<Cell> cells_;
};

/// Throws ParseError with the offending line/column (1-based).
MazeGrid parse_maze(std::string_view text, double cell_size = kDefaultCellSize,
                    double voltage = kDefaultVoltage);

/// Field grid with walls, entry at the drive voltage and exit at 0 V.
field::FieldGrid to_field_grid(const MazeGrid& maze);

struct PathResult {
  bool found = false;
  /// Passable cells from the one touching the entry to the one touching the
  /// exit; empty when entry and exit are adjacent.
  std::vector<Coord> cells;
};

/// Shortest 4-connected route from entry to exit through cells accepted by
/// `passable`. Ties go to the lowest row, then the lowest column, both for
/// the first cell and at every step.
PathResult shortest_path(const MazeGrid& maze,
                         const std::function<bool(Coord)>& passable);

/// shortest_path over all fluid cells.
PathResult bfs_shortest_path(const MazeGrid& maze);

enum class GrowthMode { kDeterministic, kStochastic };

std::string_view to_string(GrowthMode mode);
GrowthMode growth_mode_from_string(std::string_view name);

struct GrowthOptions {
  GrowthMode mode = GrowthMode::kDeterministic;
  double eta = 1.0;  // growth exponent, stochastic mode
  std::uint64_t seed = 1;
  field::SolveOptions solve;
  /// Conductance of an insulating-fluid face relative to a particle contact.
  double leakage_ratio = 1e-6;
};

/// One annexation.
struct GrowthStep {
  std::size_t iteration = 0;  // 1-based
  Coord annexed;
  double annexed_field = 0.0;  // |E| at the annexed cell, V/m
  std::size_t cluster_size = 0;
  double current = 0.0;  // arbitrary units
  bool connected = false;
};

enum class GrowthStatus { kConnected, kNoPath };

std::string_view to_string(GrowthStatus status);

struct GrowthState {
  std::vector<bool> cluster;  // row-major mask over the maze
  std::size_t iterations = 0;
  std::size_t solves = 0;
  bool connected = false;
  std::vector<GrowthStep> history;
};

struct MazeSolution {
  GrowthStatus status = GrowthStatus::kNoPath;
  GrowthState growth;
  std::vector<Coord> path;    // shortest route inside the cluster
  field::FieldGrid field{1, 1, 1.0};  // last solved potential
};

MazeSolution solve_maze(const MazeGrid& maze, const GrowthOptions& options = {});

/// Same growth on a maze whose open region contains impermeable islands
/// (debris); islands are ordinary wall cells.
MazeSolution solve_with_debris(const MazeGrid& maze,
                               const GrowthOptions& options = {});

/// Current leaving the entry in arbitrary units, from a solved grid in which
/// `at_drive` marks the entry plus cluster cells. Faces onto the exit count
/// as particle contacts (V per face); faces onto fluid leak with
/// `leakage_ratio` (V - phi) per face.
double entry_current(const MazeGrid& maze, const field::FieldGrid& solved,
                     const std::vector<bool>& at_drive, double leakage_ratio);

struct CurrentSample {
  std::size_t iteration = 0;
  double current = 0.0;
};

std::vector<CurrentSample> current_trace(const GrowthState& growth);

/// ASCII maze with the path cells drawn as '*'.
std::string overlay_path(const MazeGrid& maze, const std::vector<Coord>& path);

/// Perfect (unique-path) maze of cells_w x cells_h rooms on a
/// (2h+1) x (2w+1) grid by seeded depth-first carving. Entry on the left
/// border of the top-left room, exit on the right border of the bottom-right
/// room. `extra_openings` interior walls are knocked out afterwards to make
/// loops.
MazeGrid generate_maze(int cells_w, int cells_h, std::uint64_t seed,
                       std::size_t extra_openings = 0);

}  // namespace healsim::maze

#endif  // HEALSIM_MAZE_HPP_
