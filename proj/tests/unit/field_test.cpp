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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "healsim/error.hpp"
#include "support/oracles.hpp"

namespace healsim::field {
namespace {

using testing::Gen;

SolveOptions tight() {
  SolveOptions o;
  o.tolerance = 1e-12;
  o.omega = 1.9;
  return o;
}

// Left column at v, right column at 0, fluid in between.
FieldGrid plates(int nx, int ny, double h, double v) {
  FieldGrid g(nx, ny, h);
  for (int j = 0; j < ny; ++j) {
    g.set_conductor(0, j, v);
    g.set_conductor(nx - 1, j, 0.0);
  }
  return g;
}

TEST(Plates, UniformFieldBetweenPlates) {
  const double h = 10e-6;
  auto g = solve_potential(plates(21, 8, h, 30.0), tight());
  const auto e = field_from_potential(g);
  const double expected = 30.0 / (20 * h);
  for (int j = 0; j < 8; ++j) {
    for (int i = 1; i < 20; ++i) {
      EXPECT_NEAR(e.at(i, j).x, expected, 5e-3 * expected);
      EXPECT_NEAR(e.at(i, j).y, 0.0, 1e-6 * expected);
    }
  }
}

TEST(Plates, LinearPotential) {
  auto g = solve_potential(plates(11, 3, 1.0, 10.0), tight());
  for (int i = 0; i < 11; ++i) EXPECT_NEAR(g.potential(i, 1), 10.0 - i, 1e-9);
  EXPECT_TRUE(g.solved());
  EXPECT_LE(g.residual(), 1e-12);
  EXPECT_GT(g.iterations(), 0u);
}

TEST(Solver, EqualConductorsGiveConstantPotential) {
  FieldGrid g(9, 9, 1.0);
  g.set_conductor(0, 0, 7.0);
  g.set_conductor(8, 8, 7.0);
  g.set_wall(4, 4);
  g = solve_potential(g, tight());
  for (int j = 0; j < 9; ++j) {
    for (int i = 0; i < 9; ++i) {
      if (g.kind(i, j) != CellKind::kWall) {
        EXPECT_NEAR(g.potential(i, j), 7.0, 1e-9);
      }
    }
  }
}

FieldGrid random_grid(Gen& g) {
  const int nx = 3 + static_cast<int>(g.below(20));
  const int ny = 3 + static_cast<int>(g.below(20));
  FieldGrid grid(nx, ny, 1e-5);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const double u = g.uniform(0.0, 1.0);
      if (u < 0.2) grid.set_wall(i, j);
      else if (u < 0.3) grid.set_conductor(i, j, g.uniform(-50.0, 100.0));
    }
  }
  grid.set_conductor(0, 0, g.uniform(-50.0, 100.0));
  return grid;
}

TEST(Solver, MaximumPrincipleOnRandomGrids) {
  Gen g(21);
  for (int k = 0; k < 100; ++k) {
    auto grid = solve_potential(random_grid(g), tight());
    EXPECT_TRUE(satisfies_maximum_principle(grid, 1e-9));
    EXPECT_LE(laplacian_residual(grid), 1e-12 * 1.0001);
  }
}

TEST(Solver, Deterministic) {
  Gen g(22);
  for (int k = 0; k < 20; ++k) {
    const auto grid = random_grid(g);
    const auto a = solve_potential(grid);
    const auto b = solve_potential(grid);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
      EXPECT_EQ(a.potentials()[n], b.potentials()[n]);
    }
    EXPECT_EQ(a.iterations(), b.iterations());
  }
}

// phi = sinh(pi x) sin(pi y) / sinh(pi) on the unit square; the outer ring of
// cells is pinned to the exact values.
double harmonic(double x, double y) {
  constexpr double pi = std::numbers::pi;
  return std::sinh(pi * x) * std::sin(pi * y) / std::sinh(pi);
}

double harmonic_error(int n) {
  const double h = 1.0 / n;
  FieldGrid g(n, n, h);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (i == 0 || j == 0 || i == n - 1 || j == n - 1) {
        const Vec2 c = g.centre(i, j);
        g.set_conductor(i, j, harmonic(c.x, c.y));
      }
    }
  }
  g = solve_potential(g, tight());
  double err = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const Vec2 c = g.centre(i, j);
      err = std::max(err, std::abs(g.potential(i, j) - harmonic(c.x, c.y)));
    }
  }
  return err;
}

TEST(Convergence, SecondOrderOnSmoothProblem) {
  const double e16 = harmonic_error(16);
  const double e32 = harmonic_error(32);
  const double e64 = harmonic_error(64);
  EXPECT_NEAR(std::log2(e16 / e32), 2.0, 0.2);
  EXPECT_NEAR(std::log2(e32 / e64), 2.0, 0.2);
}

// L-shaped corridor, width w cells at scale s: down the left, across the
// bottom. Entry at the top end (v), exit at the right end (0 V).
FieldGrid l_corridor(int s, double v) {
  const int w = 4 * s;
  const int len = 12 * s;
  const double h = 1e-4 / s;
  FieldGrid g(len, len, h);
  for (int j = 0; j < len; ++j) {
    for (int i = 0; i < len; ++i) {
      const bool open = i < w || j < w;
      if (!open) g.set_wall(i, j);
    }
  }
  for (int i = 0; i < w; ++i) g.set_conductor(i, len - 1, v);
  for (int j = 0; j < w; ++j) g.set_conductor(len - 1, j, 0.0);
  return g;
}

TEST(Convergence, LCorridorProbesAgreeWithRefinedGrid) {
  const auto coarse = solve_potential(l_corridor(1, 10.0), tight());
  const auto fine = solve_potential(l_corridor(3, 10.0), tight());
  // With a 3x refinement every coarse centre is also a fine centre.
  const int probes[][2] = {{1, 9}, {2, 6}, {3, 2}, {6, 1}, {9, 2}, {1, 1}};
  for (const auto& p : probes) {
    const double a = coarse.potential(p[0], p[1]);
    const double b = fine.potential(3 * p[0] + 1, 3 * p[1] + 1);
    EXPECT_NEAR(a, b, 0.02 * 10.0) << p[0] << "," << p[1];
  }
  const auto fine_e = field_from_potential(fine);
  const auto coarse_e = field_from_potential(coarse);
  const double ec = coarse_e.magnitude(1, 8);
  const double ef = fine_e.magnitude(4, 25);
  EXPECT_NEAR(ec, ef, 0.03 * ef);
}

TEST(Trace, StraightLineBetweenPlates) {
  const double h = 1e-5;
  const auto g = solve_potential(plates(21, 8, h, 30.0), tight());
  const auto e = field_from_potential(g);
  const Vec2 start{3.2 * h, 4.1 * h};
  const auto line = trace_field_line(g, e, start);
  ASSERT_GE(line.size(), 2u);
  for (const auto& p : line) EXPECT_NEAR(p.y, start.y, 1e-9 * h);
  EXPECT_GE(line.back().x, 19.0 * h);
  for (std::size_t k = 1; k < line.size(); ++k) EXPECT_GT(line[k].x, line[k - 1].x);
}

TEST(Trace, StartInWallOrOutsideThrows) {
  auto g = plates(5, 5, 1.0, 1.0);
  g.set_wall(2, 2);
  g = solve_potential(g, tight());
  const auto e = field_from_potential(g);
  EXPECT_THROW(trace_field_line(g, e, {2.5, 2.5}), Error);
  EXPECT_THROW(trace_field_line(g, e, {-1.0, 2.5}), Error);
}

TEST(Trace, StartOnConductorIsASinglePoint) {
  const auto g = solve_potential(plates(5, 5, 1.0, 1.0), tight());
  EXPECT_EQ(trace_field_line(g, field_from_potential(g), {0.5, 2.5}).size(), 1u);
}

TEST(Errors, UnsolvedGridHasNoField) {
  EXPECT_THROW(field_from_potential(plates(5, 5, 1.0, 1.0)), Error);
}

TEST(Errors, NoConductorsIsIllPosed) {
  FieldGrid g(4, 4, 1.0);
  EXPECT_THROW(solve_potential(g), Error);
}

TEST(Errors, IterationCapReportsResidual) {
  SolveOptions o = tight();
  o.max_iterations = 2;
  try {
    solve_potential(plates(40, 4, 1.0, 5.0), o);
    FAIL() << "expected NotConvergedError";
  } catch (const NotConvergedError& e) {
    EXPECT_GT(e.last_residual(), 0.0);
    EXPECT_EQ(e.code(), ErrorCode::kNotConverged);
  }
}

TEST(Errors, BadGridArguments) {
  EXPECT_THROW(FieldGrid(0, 3, 1.0), Error);
  EXPECT_THROW(FieldGrid(3, 3, 0.0), Error);
  SolveOptions o;
  o.omega = 2.0;
  EXPECT_THROW(solve_potential(plates(4, 4, 1.0, 1.0), o), Error);
}

TEST(Grid, CellLookup) {
  FieldGrid g(4, 3, 2.0);
  EXPECT_EQ(g.cell_at({3.0, 5.0}), std::make_pair(1, 2));
  EXPECT_EQ(g.cell_at({9.0, 1.0}), std::make_pair(-1, -1));
  EXPECT_EQ(g.centre(1, 2).x, 3.0);
}

}  // namespace
}  // namespace healsim::field
