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

// 2-D electrostatic potential on a uniform cell grid.
//
// Cells are fluid (solved), conductors (Dirichlet, fixed potential) or
// insulating walls (zero normal flux, mirror ghost cells). Anything outside
// the grid behaves as wall. Cell (i, j) is column i, row j; its centre sits
// at ((i + 0.5) h, (j + 0.5) h) with y growing with the row index.

#ifndef HEALSIM_FIELD_HPP_
#define HEALSIM_FIELD_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "healsim/vec2.hpp"

namespace healsim::field {

enum class CellKind : std::uint8_t { kFluid, kConductor, kWall };

class FieldGrid {
 public:
  FieldGrid(int nx, int ny, double spacing);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double spacing() const { return spacing_; }
  std::size_t size() const { return kinds_.size(); }

  bool in_bounds(int i, int j) const {
    return i >= 0 && j >= 0 && i < nx_ && j < ny_;
  }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(nx_) +
           static_cast<std::size_t>(i);
  }

  CellKind kind(int i, int j) const { return kinds_[index(i, j)]; }
  double potential(int i, int j) const { return potential_[index(i, j)]; }
  std::span<const double> potentials() const { return potential_; }
  std::span<const CellKind> kinds() const { return kinds_; }

  void set_fluid(int i, int j);
  void set_wall(int i, int j);
  void set_conductor(int i, int j, double volts);
  /// Initial guess for a fluid cell; ignored by the solver for other kinds.
  void set_potential(int i, int j, double volts);

  /// Cell containing a physical position, or {-1, -1} outside the grid.
  std::pair<int, int> cell_at(Vec2 position) const;
  Vec2 centre(int i, int j) const {
    return {(i + 0.5) * spacing_, (j + 0.5) * spacing_};
  }

  bool solved() const { return solved_; }
  double residual() const { return residual_; }
  std::size_t iterations() const { return iterations_; }

  std::size_t conductor_count() const;
  double min_conductor_potential() const;
  double max_conductor_potential() const;

 private:
  friend struct SolverAccess;

  int nx_;
  int ny_;
  double spacing_;
  std::vector<CellKind> kinds_;
  std::vector<double> potential_;
  bool solved_ = false;
  double residual_ = 0.0;
  std::size_t iterations_ = 0;
};

struct SolveOptions {
  double tolerance = 0.0;  // V; 0 selects 1e-8 * max |V_conductor|
  std::size_t max_iterations = 1'000'000;
  double omega = 1.8;
};

struct SolveStats {
  std::size_t iterations = 0;
  double residual = 0.0;
};

/// Red-black SOR in place, warm-started from the current potentials. The
/// residual is max |sum(phi_nbr) - k phi| / 4 over fluid cells with k
/// non-wall neighbours, i.e. the 5-point Laplacian scaled by h^2/4. Throws
/// NotConvergedError carrying the last residual.
SolveStats solve_in_place(FieldGrid& grid, const SolveOptions& options = {});

FieldGrid solve_potential(FieldGrid grid, const SolveOptions& options = {});

/// Max-norm residual of the current potentials (same definition as above).
double laplacian_residual(const FieldGrid& grid);

/// min conductor V <= phi <= max conductor V on every non-wall cell.
bool satisfies_maximum_principle(const FieldGrid& grid, double slack = 0.0);

class VectorField {
 public:
  VectorField(int nx, int ny, double spacing)
      : nx_(nx), ny_(ny), spacing_(spacing),
        values_(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny)) {}

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double spacing() const { return spacing_; }
  Vec2 at(int i, int j) const { return values_[index(i, j)]; }
  double magnitude(int i, int j) const { return norm(at(i, j)); }
  Vec2& mutable_at(int i, int j) { return values_[index(i, j)]; }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(nx_) +
           static_cast<std::size_t>(i);
  }

  int nx_;
  int ny_;
  double spacing_;
  std::vector<Vec2> values_;
};

/// E = -grad(phi) on every non-wall cell: central differences where both
/// neighbours are non-wall, one-sided otherwise. Walls get zero.
VectorField field_from_potential(const FieldGrid& grid);

struct TraceOptions {
  double step_fraction = 0.25;  // step length in units of h
  std::size_t max_steps = 100'000;
};

/// Field line from `start` along +E (fixed-step midpoint rule) until it
/// enters a conductor or wall, leaves the grid, stalls, or hits the step cap.
std::vector<Vec2> trace_field_line(const FieldGrid& grid,
                                   const VectorField& field, Vec2 start,
                                   const TraceOptions& options = {});

}  // namespace healsim::field

#endif  // HEALSIM_FIELD_HPP_
