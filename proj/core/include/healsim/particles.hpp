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

// Overdamped 2-D dynamics of field-polarized conductive particles in an open
// gap.
//
// The gap spans 0 <= x <= D between a left and a right electrode; the domain
// height is the electrode width W with insulating walls at y = 0 and y = W.
// The applied field points along +x and every particle carries an induced
// point dipole along +x (quasi-static limit). Particles interact through the
// full 3-D point-dipole force and move with Stokes mobility 1/(6 pi eta R).
// Rods are rigid two-bead dumbbells (bead radius R_R) that additionally
// rotate under eta R_R L^2 dtheta/dt = -p xi sin(theta) plus the torque of
// the pair forces on their beads.
//
// A particle whose surface comes within delta of an electrode sticks to it.
// Chains of touching particles that connect both electrodes are bridges;
// their count is the maximum number of particle-disjoint chains. Bodies on a
// counted bridge are frozen, so the bridge count never decreases.

#ifndef HEALSIM_PARTICLES_HPP_
#define HEALSIM_PARTICLES_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "healsim/contact_graph.hpp"
#include "healsim/model.hpp"
#include "healsim/vec2.hpp"

namespace healsim::sim {

/// Terminal circuit of the fractured route.
struct Circuit {
  double z_in = 0.0;             // ohm
  double z_out = 0.0;            // ohm
  double z_bridge = 1000.0;      // ohm per bridge
  double threshold_field = 0.0;  // V/m; 0 disables the threshold stop
};

struct TimeStepPolicy {
  double max_dt = std::numeric_limits<double>::infinity();  // s
  double displacement_fraction = 0.1;  // max move per substep, in radii
};

struct SimConfig {
  DispersionSpec dispersion;
  GapGeometry gap;  // gap.width is the domain height
  Circuit circuit;
  TimeStepPolicy time_step;
  std::uint64_t seed = 1;
  double max_time = 100.0;  // s
  std::size_t max_particles = 5000;
  double contact_gap_fraction = 0.05;  // delta / R
  std::size_t stop_after_bridges = 0;  // 0: run to threshold or max_time
  bool electrode_images = true;
  /// Pair interactions beyond this many largest-bead radii are dropped;
  /// 0 keeps every pair.
  double force_cutoff_radii = 0.0;
  /// Depth of the fluid layer projected onto the simulated plane. 0 selects
  /// the areal density n^(2/3)/4, whose random placement has mean nearest-
  /// neighbour distance d0.
  double layer_depth = 0.0;  // m
  bool brownian = false;
  double temperature = 298.15;  // K

  void validate() const;
};

enum class Anchor : std::uint8_t { kFree, kLeft, kRight };

struct Body {
  Vec2 position;             // m, body centre
  double orientation = 0.0;  // rad from the field axis, rods only
  std::uint32_t species = 0;
  Anchor anchor = Anchor::kFree;
  bool frozen = false;  // part of a counted bridge

  bool mobile() const { return anchor == Anchor::kFree && !frozen; }
};

struct BridgeEvent {
  double time = 0.0;         // s
  std::size_t bridges = 0;
  double gap_voltage = 0.0;  // V
  double current = 0.0;      // A
};

struct SimState {
  std::vector<Body> bodies;
  double time = 0.0;
  double field = 0.0;  // current uniform gap field, V/m
  std::size_t bridges = 0;
  std::uint64_t steps = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> contacts;
  std::vector<BridgeEvent> events;
  std::mt19937_64 rng;
};

enum class HealStatus {
  kHealed,          // field fell below threshold after bridging
  kBridgeTarget,    // stop_after_bridges reached
  kTimeLimit,       // max_time reached with at least one bridge
  kTimeout,         // no first bridge within max_time
  kBelowThreshold,  // initial field already below threshold
};

std::string_view to_string(HealStatus status);

struct HealRecord {
  HealStatus status = HealStatus::kTimeout;
  std::size_t particles = 0;
  std::vector<double> bridge_times;  // time of each bridge-count increase
  std::vector<BridgeEvent> events;   // starts with the open-gap row at t = 0
  std::size_t final_bridges = 0;
  double final_time = 0.0;
  std::uint64_t steps = 0;
  SimState final_state;

  double first_bridge_time() const;  // NaN when no bridge formed
};

using TraceSink = std::function<void(const SimState&)>;

class Simulation {
 public:
  explicit Simulation(SimConfig config);

  const SimConfig& config() const { return config_; }

  /// Particle count per species, round(D W sigma_i) with areal density
  /// sigma_i = n_i h for a layer of depth h, or n_i^(2/3)/4 by default.
  const std::vector<std::size_t>& species_counts() const { return counts_; }
  std::size_t particle_count() const;

  /// Seeded rejection sampling with at least delta surface separation.
  SimState initialize() const;

  /// State built from explicit bodies (tests, restarts).
  SimState place(std::vector<Body> bodies) const;

  /// Advances by exactly `dt`, substepping to honour the displacement cap.
  void step(SimState& state, double dt) const;

  /// One adaptive substep of at most `max_dt`; returns the time advanced.
  double advance(SimState& state,
                 double max_dt = std::numeric_limits<double>::infinity()) const;

  /// Rebuilds the contact graph, counts disjoint bridges and freezes their
  /// bodies. Returns the (nondecreasing) bridge count.
  std::size_t detect_bridges(SimState& state) const;

  ContactGraph contact_graph(const SimState& state) const;

  /// Uniform gap field for a given bridge count (divider against Z_in+Z_out).
  double gap_voltage(std::size_t bridges) const;
  double route_current(std::size_t bridges) const;

  HealRecord run_heal(const TraceSink& trace = {},
                      std::uint64_t trace_interval = 0) const;

  /// Bead centres and radii of one body (1 for spheres, 2 for rods).
  struct Bead {
    Vec2 position;
    double radius;
    double dipole_per_field;
  };
  std::vector<Bead> beads(const Body& body) const;

  double contact_gap(std::uint32_t species) const;
  double min_radius() const { return min_radius_; }

 private:
  struct SpeciesInfo {
    Shape shape;
    double bead_radius;
    double bead_offset;       // centre to bead centre, rods
    double dipole_per_field;  // per bead
    double rod_dipole_per_field;
    double drag;              // translational, whole body
    double rotational_drag;   // eta R L^2, rods
  };

  struct Forces;
  void compute_forces(const SimState& state, Forces& out) const;
  void enforce_constraints(SimState& state) const;
  void resolve_overlaps(SimState& state) const;
  void anchor_to_electrodes(SimState& state) const;

  SimConfig config_;
  std::vector<SpeciesInfo> info_;
  std::vector<std::size_t> counts_;
  double min_radius_ = 0.0;
  double max_radius_ = 0.0;
};

HealRecord run_heal(const SimConfig& config);

/// Mean distance from each particle to its nearest neighbour (centres).
double mean_nearest_neighbour_distance(const SimState& state);

}  // namespace healsim::sim

#endif  // HEALSIM_PARTICLES_HPP_
