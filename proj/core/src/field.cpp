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

#include "healsim/field.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "healsim/error.hpp"

namespace healsim::field {

struct SolverAccess {
  static std::vector<double>& potential(FieldGrid& g) { return g.potential_; }
  static void mark(FieldGrid& g, bool solved, double residual,
                   std::size_t iterations) {
    g.solved_ = solved;
    g.residual_ = residual;
    g.iterations_ = iterations;
  }
};

FieldGrid::FieldGrid(int nx, int ny, double spacing)
    : nx_(nx), ny_(ny), spacing_(spacing) {
  if (nx < 1 || ny < 1) {
    throw Error(ErrorCode::kInvalidArgument, "grid needs nx, ny >= 1");
  }
  if (!(spacing > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "grid spacing must be > 0");
  }
  const auto n = static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);
  kinds_.assign(n, CellKind::kFluid);
  potential_.assign(n, 0.0);
}

void FieldGrid::set_fluid(int i, int j) {
  kinds_[index(i, j)] = CellKind::kFluid;
  solved_ = false;
}

void FieldGrid::set_wall(int i, int j) {
  kinds_[index(i, j)] = CellKind::kWall;
  potential_[index(i, j)] = 0.0;
  solved_ = false;
}

void FieldGrid::set_conductor(int i, int j, double volts) {
  kinds_[index(i, j)] = CellKind::kConductor;
  potential_[index(i, j)] = volts;
  solved_ = false;
}

void FieldGrid::set_potential(int i, int j, double volts) {
  if (kinds_[index(i, j)] == CellKind::kFluid) {
    potential_[index(i, j)] = volts;
    solved_ = false;
  }
}

std::pair<int, int> FieldGrid::cell_at(Vec2 position) const {
  const double fi = std::floor(position.x / spacing_);
  const double fj = std::floor(position.y / spacing_);
  if (!(fi >= 0.0 && fj >= 0.0 && fi < nx_ && fj < ny_)) return {-1, -1};
  return {static_cast<int>(fi), static_cast<int>(fj)};
}

std::size_t FieldGrid::conductor_count() const {
  return static_cast<std::size_t>(
      std::count(kinds_.begin(), kinds_.end(), CellKind::kConductor));
}

double FieldGrid::min_conductor_potential() const {
  double v = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < kinds_.size(); ++c) {
    if (kinds_[c] == CellKind::kConductor) v = std::min(v, potential_[c]);
  }
  return v;
}

double FieldGrid::max_conductor_potential() const {
  double v = -std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < kinds_.size(); ++c) {
    if (kinds_[c] == CellKind::kConductor) v = std::max(v, potential_[c]);
  }
  return v;
}

namespace {

constexpr std::array<std::array<int, 2>, 4> kOffsets{
    {{0, -1}, {-1, 0}, {1, 0}, {0, 1}}};

// Fluid cell with its non-wall neighbours, in a fixed order.
struct Stencil {
  std::size_t cell;
  std::array<std::size_t, 4> neighbours;
  int count;
};

std::array<std::vector<Stencil>, 2> build_stencils(const FieldGrid& grid) {
  std::array<std::vector<Stencil>, 2> colours;
  for (int j = 0; j < grid.ny(); ++j) {
    for (int i = 0; i < grid.nx(); ++i) {
      if (grid.kind(i, j) != CellKind::kFluid) continue;
      Stencil s{grid.index(i, j), {}, 0};
      for (const auto& [di, dj] : kOffsets) {
        const int ni = i + di;
        const int nj = j + dj;
        if (!grid.in_bounds(ni, nj) || grid.kind(ni, nj) == CellKind::kWall) {
          continue;
        }
        s.neighbours[static_cast<std::size_t>(s.count++)] = grid.index(ni, nj);
      }
      if (s.count > 0) colours[static_cast<std::size_t>((i + j) % 2)].push_back(s);
    }
  }
  return colours;
}

double stencil_residual(const Stencil& s, const std::vector<double>& phi) {
  double sum = 0.0;
  for (int n = 0; n < s.count; ++n) sum += phi[s.neighbours[static_cast<std::size_t>(n)]];
  return (sum - s.count * phi[s.cell]) / 4.0;
}

}  // namespace

double laplacian_residual(const FieldGrid& grid) {
  const auto colours = build_stencils(grid);
  std::vector<double> phi(grid.potentials().begin(), grid.potentials().end());
  double r = 0.0;
  for (const auto& colour : colours) {
    for (const auto& s : colour) r = std::max(r, std::abs(stencil_residual(s, phi)));
  }
  return r;
}

SolveStats solve_in_place(FieldGrid& grid, const SolveOptions& options) {
  if (grid.conductor_count() == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "ill-posed potential problem: no conductor cells");
  }
  if (!(options.omega > 0.0 && options.omega < 2.0)) {
    throw Error(ErrorCode::kInvalidArgument, "SOR omega must be in (0, 2)");
  }
  const double lo = grid.min_conductor_potential();
  const double hi = grid.max_conductor_potential();
  double tol = options.tolerance;
  if (tol <= 0.0) tol = 1e-8 * std::max({std::abs(lo), std::abs(hi), 1e-300});

  auto& phi = SolverAccess::potential(grid);
  for (std::size_t c = 0; c < phi.size(); ++c) {
    if (grid.kinds()[c] == CellKind::kFluid) phi[c] = std::clamp(phi[c], lo, hi);
  }

  const auto colours = build_stencils(grid);
  const double omega = options.omega;
  double residual = std::numeric_limits<double>::infinity();
  std::size_t iter = 0;
  while (iter < options.max_iterations) {
    double sweep_change = 0.0;
    for (const auto& colour : colours) {
      for (const auto& s : colour) {
        double sum = 0.0;
        for (int n = 0; n < s.count; ++n) {
          sum += phi[s.neighbours[static_cast<std::size_t>(n)]];
        }
        const double delta = sum / s.count - phi[s.cell];
        sweep_change = std::max(sweep_change, std::abs(delta));
        phi[s.cell] += omega * delta;
      }
    }
    ++iter;
    if (sweep_change <= tol) {
      residual = 0.0;
      for (const auto& colour : colours) {
        for (const auto& s : colour) {
          residual = std::max(residual, std::abs(stencil_residual(s, phi)));
        }
      }
      if (residual <= tol) {
        SolverAccess::mark(grid, true, residual, iter);
        return {iter, residual};
      }
    } else {
      residual = sweep_change;
    }
  }
  SolverAccess::mark(grid, false, residual, iter);
  throw NotConvergedError("potential solve did not converge in " +
                              std::to_string(iter) + " iterations (residual " +
                              std::to_string(residual) + " V)",
                          residual);
}

FieldGrid solve_potential(FieldGrid grid, const SolveOptions& options) {
  solve_in_place(grid, options);
  return grid;
}

bool satisfies_maximum_principle(const FieldGrid& grid, double slack) {
  const double lo = grid.min_conductor_potential() - slack;
  const double hi = grid.max_conductor_potential() + slack;
  for (std::size_t c = 0; c < grid.size(); ++c) {
    if (grid.kinds()[c] == CellKind::kWall) continue;
    const double v = grid.potentials()[c];
    if (v < lo || v > hi) return false;
  }
  return true;
}

VectorField field_from_potential(const FieldGrid& grid) {
  if (!grid.solved()) {
    throw Error(ErrorCode::kInvalidArgument,
                "field requested from an unsolved grid");
  }
  const double h = grid.spacing();
  VectorField field(grid.nx(), grid.ny(), h);
  auto open = [&](int i, int j) {
    return grid.in_bounds(i, j) && grid.kind(i, j) != CellKind::kWall;
  };
  // Derivative along one axis from whichever neighbours are available.
  auto derivative = [&](int i, int j, int di, int dj) {
    const bool minus = open(i - di, j - dj);
    const bool plus = open(i + di, j + dj);
    if (minus && plus) {
      return (grid.potential(i + di, j + dj) - grid.potential(i - di, j - dj)) /
             (2.0 * h);
    }
    if (plus) return (grid.potential(i + di, j + dj) - grid.potential(i, j)) / h;
    if (minus) return (grid.potential(i, j) - grid.potential(i - di, j - dj)) / h;
    return 0.0;
  };
  for (int j = 0; j < grid.ny(); ++j) {
    for (int i = 0; i < grid.nx(); ++i) {
      if (grid.kind(i, j) == CellKind::kWall) continue;
      field.mutable_at(i, j) = {-derivative(i, j, 1, 0), -derivative(i, j, 0, 1)};
    }
  }
  return field;
}

namespace {

// Bilinear interpolation over the surrounding cell centres, skipping walls.
Vec2 sample(const FieldGrid& grid, const VectorField& field, Vec2 p) {
  const double h = grid.spacing();
  const double gx = p.x / h - 0.5;
  const double gy = p.y / h - 0.5;
  const int i0 = static_cast<int>(std::floor(gx));
  const int j0 = static_cast<int>(std::floor(gy));
  const double fx = gx - i0;
  const double fy = gy - j0;
  Vec2 acc;
  double weight = 0.0;
  for (int dj = 0; dj <= 1; ++dj) {
    for (int di = 0; di <= 1; ++di) {
      const int i = i0 + di;
      const int j = j0 + dj;
      if (!grid.in_bounds(i, j) || grid.kind(i, j) == CellKind::kWall) continue;
      const double w = (di ? fx : 1.0 - fx) * (dj ? fy : 1.0 - fy);
      acc += w * field.at(i, j);
      weight += w;
    }
  }
  if (weight <= 0.0) return {};
  return (1.0 / weight) * acc;
}

}  // namespace

std::vector<Vec2> trace_field_line(const FieldGrid& grid,
                                   const VectorField& field, Vec2 start,
                                   const TraceOptions& options) {
  const auto [si, sj] = grid.cell_at(start);
  if (si < 0 || grid.kind(si, sj) == CellKind::kWall) {
    throw Error(ErrorCode::kInvalidArgument,
                "field line must start inside the fluid region");
  }
  std::vector<Vec2> line{start};
  if (grid.kind(si, sj) == CellKind::kConductor) return line;

  const double step = options.step_fraction * grid.spacing();
  double scale = 0.0;
  for (int j = 0; j < grid.ny(); ++j) {
    for (int i = 0; i < grid.nx(); ++i) scale = std::max(scale, field.magnitude(i, j));
  }
  const double stall = 1e-12 * scale;

  Vec2 p = start;
  for (std::size_t n = 0; n < options.max_steps; ++n) {
    const Vec2 e1 = sample(grid, field, p);
    const double m1 = norm(e1);
    if (m1 <= stall) break;
    const Vec2 mid = p + (0.5 * step / m1) * e1;
    const Vec2 e2 = sample(grid, field, mid);
    const double m2 = norm(e2);
    if (m2 <= stall) break;
    p += (step / m2) * e2;
    line.push_back(p);
    const auto [i, j] = grid.cell_at(p);
    if (i < 0 || grid.kind(i, j) != CellKind::kFluid) break;
  }
  return line;
}

}  // namespace healsim::field
