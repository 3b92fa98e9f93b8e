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


// Acceptance checks. Prints one PASS/FAIL line per criterion; with a number
// argument runs only that criterion. Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/numeric/odeint.hpp>

#include "healsim/cascade.hpp"
#include "healsim/contact_graph.hpp"
#include "healsim/descriptors.hpp"
#include "healsim/field.hpp"
#include "healsim/harness.hpp"
#include "healsim/kinetics.hpp"
#include "healsim/maze.hpp"
#include "healsim/particles.hpp"
#include "support/oracles.hpp"

namespace {

using namespace healsim;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Tolerances.
constexpr double kCascadeRelTol = 1e-12;
constexpr double kCascadeMaxSeconds = 1.0;
constexpr double kScalingExponent = -2.0;
constexpr double kScalingTol = 0.3;
constexpr double kScalingMaxSeconds = 600.0;
constexpr double kPairTol = 0.02;
constexpr double kRodTol = 1e-6;
constexpr double kConcentrationRatio = 32.0;
constexpr double kConcentrationTol = 1e-12;
constexpr double kPlateTol = 0.005;
constexpr double kOrderLo = 1.8;
constexpr double kOrderHi = 2.2;
constexpr double kDetourFactor = 1.1;
constexpr double kMazeMaxSeconds = 120.0;
constexpr double kPreConnectionCurrent = 1e-3;  // fraction of the final current
constexpr double kTargetHealRate = 10e-6;        // m/s
constexpr double kHealRateFactor = 10.0;
constexpr std::size_t kContactGraphs = 500;

constexpr double kUm = 1e-6;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

double rel_err(double a, double b) {
  if (a == b) return 0.0;
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FluidSpec oil() { return {0.05, 2.5}; }

DispersionSpec copper(double mg_ml) {
  return {oil(), {{ParticleSpec::sphere(5 * kUm, kCopperDensity), mg_ml}}};
}

// Layer-projected copper dispersion in a 200 um gap.
sim::SimConfig copper_layer(double mg_ml, double width_um, double volts, std::uint64_t seed) {
  sim::SimConfig c;
  c.dispersion = copper(mg_ml);
  c.gap = {200 * kUm, width_um * kUm, volts};
  c.layer_depth = 200 * kUm;
  c.seed = seed;
  c.stop_after_bridges = 1;
  c.max_time = 1e5;
  return c;
}

// ---------------------------------------------------------------------------

Outcome cascade_equivalence() {
  testing::Gen g(20260101);
  std::vector<cascade::Params> sets;
  for (int k = 0; k < 1000; ++k) sets.push_back(testing::random_cascade_params(g));
  double worst = 0.0;
  std::size_t mismatched_m = 0;
  std::size_t healed = 0;
  const auto t0 = Clock::now();
  for (const auto& p : sets) {
    const auto sim = cascade::simulate_cascade(p);
    const auto closed = cascade::healed_metrics(p);
    if (sim.bridges != closed.bridges || sim.status != closed.status) ++mismatched_m;
    if (closed.bridges == 0) continue;
    ++healed;
    worst = std::max({worst, rel_err(sim.total_time, cascade::total_heal_time(p)),
                      rel_err(sim.impedance, closed.impedance),
                      rel_err(sim.current, closed.current)});
  }
  const double elapsed = seconds_since(t0);
  return {mismatched_m == 0 && worst < kCascadeRelTol && elapsed < kCascadeMaxSeconds,
          "1000 sets (" + std::to_string(healed) + " with bridges), m mismatches " +
              std::to_string(mismatched_m) + ", max rel err " + num(worst) + " (< " +
              num(kCascadeRelTol) + "), " + num(elapsed) + " s (< 1 s)"};
}

Outcome field_scaling() {
  const std::vector<double> volts{10.0, 13.34, 17.78, 23.71, 31.62};
  std::vector<kinetics::FieldTime> samples;
  std::size_t missing = 0;
  std::size_t particles = 0;
  const auto t0 = Clock::now();
  for (const double v : volts) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto c = copper_layer(100.0, 235.0, v, seed);
      const auto r = sim::run_heal(c);
      particles = r.particles;
      if (r.bridge_times.empty()) {
        ++missing;
        continue;
      }
      samples.push_back({c.gap.nominal_field(), r.first_bridge_time()});
    }
  }
  const double elapsed = seconds_since(t0);
  if (samples.size() < 2) return {false, "fewer than two bridged runs"};
  const auto fit = kinetics::fit_power_law(samples);
  return {missing == 0 && std::abs(fit.exponent - kScalingExponent) <= kScalingTol &&
              elapsed <= kScalingMaxSeconds,
          "N=" + std::to_string(particles) + ", 5 fields x 10 seeds over 10-31.6 V, exponent " +
              num(fit.exponent) + " (target -2 +/- 0.3), unbridged runs " +
              std::to_string(missing) + ", " + num(elapsed) + " s (<= 600 s)"};
}

double rotation_ode(double k, double theta0, double t_end) {
  namespace odeint = boost::numeric::odeint;
  using State = std::vector<double>;
  State s{theta0};
  odeint::integrate_adaptive(
      odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(1e-13, 1e-13),
      [k](const State& x, State& dx, double) { dx[0] = -k * std::sin(x[0]); }, s, 0.0, t_end,
      t_end * 1e-4);
  return s[0];
}

Outcome pair_kinetics() {
  testing::Gen g(3003);
  double worst_pair = 0.0;
  for (int k = 0; k < 10; ++k) {
    const double radius = g.uniform(2.0, 10.0) * kUm;
    const double field = g.log_uniform(2e4, 5e5);
    const double x0 = g.uniform(2.5, 8.0) * radius;
    sim::SimConfig c;
    c.dispersion = {oil(), {{ParticleSpec::sphere(radius, kCopperDensity), 100.0}}};
    c.gap = {400 * kUm, 400 * kUm, field * 400 * kUm};
    c.electrode_images = false;
    c.time_step.displacement_fraction = 0.005;
    const sim::Simulation s(c);
    sim::Body a;
    a.position = {200 * kUm - x0 / 2, 200 * kUm};
    sim::Body b = a;
    b.position.x += x0;
    auto state = s.place({a, b});
    while (s.contact_graph(state).contact_count() == 0) {
      if (s.advance(state) <= 0.0) return {false, "pair stalled before contact"};
    }
    const double expected = kinetics::sphere_pair_contact_time(
        c.dispersion.species[0].particle, oil(), field, x0, kinetics::kPointDipoleStokes);
    worst_pair = std::max(worst_pair, std::abs(state.time - expected) / expected);
  }

  double worst_rod = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double rate = g.log_uniform(1e-2, 1e3);
    const double theta0 = g.uniform(0.2, kPi - 0.05);
    const double theta_f = g.uniform(1e-3, 0.9 * theta0);
    const double t = kinetics::rod_alignment_time(rate, theta0, theta_f);
    const double theta = rotation_ode(rate, theta0, t);
    const double dt = std::abs(theta - theta_f) / (rate * std::sin(theta_f));
    worst_rod = std::max(worst_rod, dt / t);
  }
  return {worst_pair <= kPairTol && worst_rod <= kRodTol,
          "pair sim vs closed form max rel err " + num(worst_pair) + " (<= 0.02, 10 configs); "
          "rod ODE vs ln-tan max rel err " + num(worst_rod) + " (<= 1e-6, 100 configs)"};
}

Outcome concentration_law() {
  double worst = 0.0;
  testing::Gen g(4004);
  for (int k = 0; k < 100; ++k) {
    const double c = g.log_uniform(1.0, 50.0);
    const double xi = g.log_uniform(1e4, 1e6);
    const double ratio = kinetics::repair_time_estimate(copper(c), xi).time /
                         kinetics::repair_time_estimate(copper(8.0 * c), xi).time;
    worst = std::max(worst, std::abs(ratio - kConcentrationRatio) / kConcentrationRatio);
  }

  const std::vector<double> conc{30.0, 60.0, 120.0};
  std::vector<double> mean;
  std::string per_seed;
  bool all_bridged = true;
  for (const double c : conc) {
    double total = 0.0;
    for (std::uint64_t seed = 1; seed <= 2; ++seed) {
      const auto r = sim::run_heal(copper_layer(c, 940.0, 30.0, seed));
      if (r.bridge_times.empty()) all_bridged = false;
      total += r.first_bridge_time();
      per_seed += " " + num(r.first_bridge_time());
    }
    mean.push_back(total / 2.0);
  }
  const bool decreasing = mean[0] > mean[1] && mean[1] > mean[2];
  return {worst <= kConcentrationTol && all_bridged && decreasing,
          "estimate ratio at 8x concentration max rel dev " + num(worst) +
              " from 32; sim mean first bridge at 30/60/120 mg/ml: " + num(mean[0]) + " > " +
              num(mean[1]) + " > " + num(mean[2]) + " s (runs:" + per_seed + ")"};
}

Outcome heal_ratio_monotone() {
  cascade::Params p;
  p.voltage = 50.0;
  p.gap = 200 * kUm;
  p.z_bridge = 1000.0;
  p.threshold_field = p.nominal_field() / 5.0;
  p.lambda = 1e10;
  std::vector<double> z;
  for (int k = 0; k < 10; ++k) z.push_back(10.0 * std::pow(1000.0, k / 9.0));
  const auto curve = cascade::heal_ratio_curve(p, z);

  std::size_t oracle_mismatch = 0;
  std::size_t drops = 0;
  std::string ratios;
  double prev = -1.0;
  for (const auto& pt : curve) {
    cascade::Params q = p;
    q.z_in = q.z_out = pt.terminal_impedance;
    const auto sim = cascade::simulate_cascade(q);
    if (sim.bridges != pt.bridges) {
      ++oracle_mismatch;
    } else if (pt.bridges > 0 && (rel_err(sim.total_time, pt.heal_time) > kCascadeRelTol ||
                                  rel_err(sim.current, pt.current) > kCascadeRelTol)) {
      ++oracle_mismatch;
    }
    ratios += " " + num(pt.ratio);
    if (!std::isnan(pt.ratio)) {
      if (pt.ratio < prev) ++drops;
      prev = pt.ratio;
    }
  }
  return {oracle_mismatch == 0 && drops == 0,
          "T_b/I_b over Z=10..1e4 ohm:" + ratios + "; decreases " + std::to_string(drops) +
              ", oracle mismatches " + std::to_string(oracle_mismatch)};
}

// Plate with a smooth harmonic perturbation; the outer ring is pinned to the
// exact solution.
double perturbed_plate_error(int n) {
  const double d = 1.0;
  const double h = d / n;
  auto exact = [d](double x, double y) {
    return 1.0 - x / d + 0.2 * std::sinh(kPi * x / d) * std::sin(kPi * y / d) / std::sinh(kPi);
  };
  field::FieldGrid g(n, n, h);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (i == 0 || j == 0 || i == n - 1 || j == n - 1) {
        const auto c = g.centre(i, j);
        g.set_conductor(i, j, exact(c.x, c.y));
      }
    }
  }
  field::SolveOptions o;
  o.tolerance = 1e-13;
  o.omega = 1.9;
  g = field::solve_potential(g, o);
  double err = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const auto c = g.centre(i, j);
      err = std::max(err, std::abs(g.potential(i, j) - exact(c.x, c.y)));
    }
  }
  return err;
}

Outcome field_solver() {
  const int nx = 41;
  const double h = 5 * kUm;
  const double v0 = 30.0;
  field::FieldGrid plate(nx, 12, h);
  for (int j = 0; j < 12; ++j) {
    plate.set_conductor(0, j, v0);
    plate.set_conductor(nx - 1, j, 0.0);
  }
  field::SolveOptions o;
  o.tolerance = 1e-12;
  plate = field::solve_potential(plate, o);
  const auto e = field::field_from_potential(plate);
  const double expected = v0 / ((nx - 1) * h);
  double worst_plate = 0.0;
  for (int j = 0; j < 12; ++j) {
    for (int i = 1; i < nx - 1; ++i) {
      worst_plate = std::max(worst_plate, std::abs(e.at(i, j).x - expected) / expected);
    }
  }

  std::size_t fixtures = 1;
  std::size_t violations = field::satisfies_maximum_principle(plate) ? 0 : 1;
  for (const auto& entry : fs::directory_iterator(fs::path(HEALSIM_FIXTURE_DIR) / "mazes")) {
    auto grid = maze::to_field_grid(maze::parse_maze(slurp(entry.path())));
    grid = field::solve_potential(grid);
    ++fixtures;
    if (!field::satisfies_maximum_principle(grid)) ++violations;
  }
  for (const auto& entry : fs::directory_iterator(fs::path(HEALSIM_FIXTURE_DIR) / "geometry")) {
    auto dump = io::parse_field_dump(io::parse_json_text(slurp(entry.path())));
    auto grid = field::solve_potential(dump.grid, dump.solve);
    ++fixtures;
    if (!field::satisfies_maximum_principle(grid)) ++violations;
  }

  const double e1 = perturbed_plate_error(16);
  const double e2 = perturbed_plate_error(32);
  const double e3 = perturbed_plate_error(64);
  const double p1 = std::log2(e1 / e2);
  const double p2 = std::log2(e2 / e3);
  const bool order_ok = p1 >= kOrderLo && p1 <= kOrderHi && p2 >= kOrderLo && p2 <= kOrderHi;
  return {worst_plate <= kPlateTol && violations == 0 && order_ok,
          "plate field max rel err " + num(worst_plate) + " (<= 0.005); maximum principle on " +
              std::to_string(fixtures) + " fixtures, violations " + std::to_string(violations) +
              "; observed order " + num(p1) + ", " + num(p2) + " (h = 1/16, 1/32, 1/64)"};
}

struct MazeCheck {
  bool ok = true;
  std::size_t path = 0;
  std::size_t bfs = 0;
  double seconds = 0.0;
};

MazeCheck check_maze(const std::string& name, bool unique) {
  const auto m = maze::parse_maze(slurp(fs::path(HEALSIM_FIXTURE_DIR) / "mazes" / name));
  const auto t0 = Clock::now();
  const auto sol = maze::solve_maze(m);
  MazeCheck c;
  c.seconds = seconds_since(t0);
  const auto bfs = maze::bfs_shortest_path(m);
  c.path = sol.path.size();
  c.bfs = bfs.cells.size();
  c.ok = sol.status == maze::GrowthStatus::kConnected && bfs.found && c.seconds <= kMazeMaxSeconds;
  if (unique) {
    c.ok = c.ok && sol.path == bfs.cells;
  } else {
    c.ok = c.ok && static_cast<double>(c.path) <= kDetourFactor * static_cast<double>(c.bfs);
  }
  // Connection is the last annexation.
  const auto& h = sol.growth.history;
  c.ok = c.ok && !h.empty() && h.back().connected && h.size() == sol.growth.iterations;
  for (std::size_t k = 0; k + 1 < h.size(); ++k) c.ok = c.ok && !h[k].connected;
  // Current: negligible before connection, nondecreasing from connection on.
  const auto trace = maze::current_trace(sol.growth);
  std::size_t first = trace.size();
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k].connected) {
      first = k;
      break;
    }
  }
  for (std::size_t k = 0; k < trace.size(); ++k) {
    if (k < first) {
      c.ok = c.ok && trace[k].current <= kPreConnectionCurrent * trace.back().current;
    } else if (k > first) {
      c.ok = c.ok && trace[k].current >= trace[k - 1].current;
    }
  }
  return c;
}

Outcome maze_solving() {
  bool ok = true;
  std::string detail = "unique (path/bfs):";
  double slowest = 0.0;
  for (const char* name : {"unique_3.txt", "unique_7.txt", "unique_19.txt", "unique_42.txt",
                           "unique_101.txt"}) {
    const auto c = check_maze(name, true);
    ok = ok && c.ok;
    slowest = std::max(slowest, c.seconds);
    detail += " " + std::to_string(c.path) + "/" + std::to_string(c.bfs) + (c.ok ? "" : "!");
  }
  detail += "; loops:";
  for (const char* name : {"loops_5.txt", "loops_11.txt", "loops_23.txt"}) {
    const auto c = check_maze(name, false);
    ok = ok && c.ok;
    slowest = std::max(slowest, c.seconds);
    detail += " " + std::to_string(c.path) + "/" + std::to_string(c.bfs) + (c.ok ? "" : "!");
  }
  detail += "; slowest maze " + num(slowest) + " s (<= 120 s)";
  return {ok, detail};
}

Outcome calibrated_rate() {
  // Synthetic datum: simulated first-bridge time at 27 V.
  const auto datum_cfg = copper_layer(100.0, 235.0, 27.0, 1);
  const auto datum = sim::run_heal(datum_cfg);
  if (datum.bridge_times.empty()) return {false, "calibration run did not bridge"};
  const auto d = copper(100.0);
  const auto cal = kinetics::calibrate(d, datum_cfg.gap.nominal_field(), datum.first_bridge_time());
  const double gap = 200 * kUm;
  const double predicted = kinetics::repair_time_estimate(d, 30.0 / gap, cal).time;
  const double rate = gap / predicted;
  const double ratio = rate / kTargetHealRate;
  return {ratio >= 1.0 / kHealRateFactor && ratio <= kHealRateFactor,
          "kappa " + num(cal.sphere) + " from a " + num(datum.first_bridge_time()) +
              " s datum at 27 V; predicted heal time at 30 V " + num(predicted) + " s, rate " +
              num(rate / kUm) + " um/s (within 10x of 10 um/s)"};
}

Outcome determinism() {
  const fs::path root = fs::temp_directory_path() / ("healsim_acceptance_" +
                                                     std::to_string(std::random_device{}()));
  fs::create_directories(root);
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream(root / name, std::ios::binary) << text;
    return root / name;
  };
  const auto cascade_cfg = write("cascade.json", R"({"voltage_V": 50, "gap_um": 200,
    "z_in_ohm": 10, "z_out_ohm": 10, "z_bridge_ohm": 1000,
    "threshold_field_V_per_m": 50000, "lambda_V2s_per_m2": 1e10})");
  const auto sim_cfg = write("sim.json", R"({"dispersion": {"fluid": {"viscosity_pa_s": 0.05,
    "epsilon_r": 2.5}, "particles": [{"shape": "sphere", "radius_um": 5,
    "concentration_mg_ml": 100}, {"shape": "rod", "radius_um": 2, "length_um": 20,
    "concentration_mg_ml": 5}]}, "gap": {"gap_um": 200, "width_um": 120, "voltage_V": 30},
    "layer_depth_um": 200, "brownian": {"enabled": true}, "stop_after_bridges": 2,
    "max_time_s": 50, "trace_interval": 25})");
  const auto sweep_cfg = write("sweep.json", R"({"target": "sim-heal", "replicates": 2,
    "base": {"dispersion": {"fluid": {"viscosity_pa_s": 0.05, "epsilon_r": 2.5},
    "particles": [{"shape": "sphere", "radius_um": 5, "concentration_mg_ml": 100}]},
    "gap": {"gap_um": 200, "width_um": 120, "voltage_V": 30}, "layer_depth_um": 200,
    "stop_after_bridges": 1, "max_time_s": 100},
    "axes": [{"keys": ["/gap/voltage_V"], "values": [20, 30]}]})");
  const auto maze_cfg = write("maze.json", R"({"mode": "stoch", "eta": 2})");
  const auto maze_in = fs::path(HEALSIM_FIXTURE_DIR) / "mazes" / "loops_5.txt";

  struct Job {
    harness::Kind kind;
    fs::path config;
    fs::path input;
  };
  const std::vector<Job> jobs{{harness::Kind::kCascade, cascade_cfg, {}},
                              {harness::Kind::kSimHeal, sim_cfg, {}},
                              {harness::Kind::kSimSweep, sweep_cfg, {}},
                              {harness::Kind::kMazeSolve, maze_cfg, maze_in},
                              {harness::Kind::kFieldDump, {}, maze_in}};
  std::size_t compared = 0;
  std::size_t differing = 0;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    harness::ExperimentConfig c;
    c.kind = jobs[k].kind;
    c.config_path = jobs[k].config;
    c.input_path = jobs[k].input;
    c.seed = 7;
    c.trace = true;
    c.dump_field = true;
    std::vector<std::string> outputs;
    for (const char* run : {"a", "b"}) {
      c.out_dir = root / std::to_string(k) / run;
      if (jobs[k].kind == harness::Kind::kSimSweep) {
        ::setenv("HEALSIM_THREADS", run[0] == 'a' ? "1" : "4", 1);
      }
      outputs = harness::run_experiment(c).outputs;
    }
    ::unsetenv("HEALSIM_THREADS");
    for (const auto& name : outputs) {
      if (fs::path(name).extension() != ".csv") continue;
      ++compared;
      if (slurp(root / std::to_string(k) / "a" / name) !=
          slurp(root / std::to_string(k) / "b" / name)) {
        ++differing;
      }
    }
  }
  fs::remove_all(root);

  testing::Gen g(9009);
  std::size_t graph_mismatch = 0;
  for (std::size_t k = 0; k < kContactGraphs; ++k) {
    const auto n = static_cast<std::uint32_t>(1 + g.below(12));
    const auto graph = testing::random_contact_graph(g, n);
    testing::ExhaustiveDisjointPaths oracle(graph);
    if (sim::max_disjoint_paths(graph).count != oracle.solve()) ++graph_mismatch;
  }
  return {differing == 0 && compared > 0 && graph_mismatch == 0,
          std::to_string(compared) + " CSV outputs from 5 experiments re-run, " +
              std::to_string(differing) + " differ; max-flow vs exhaustive on " +
              std::to_string(kContactGraphs) + " graphs, mismatches " +
              std::to_string(graph_mismatch)};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "cascade oracle equivalence", cascade_equivalence},
      {2, "inverse-square field scaling", field_scaling},
      {3, "pair and rod kinetics", pair_kinetics},
      {4, "concentration law", concentration_law},
      {5, "heal ratio monotone in terminal impedance", heal_ratio_monotone},
      {6, "field solver", field_solver},
      {7, "maze solving", maze_solving},
      {8, "calibrated heal rate", calibrated_rate},
      {9, "determinism", determinism},
  };
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  int failures = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures;
}
