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

#include "healsim/particles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "healsim/error.hpp"

namespace healsim::sim {
namespace {

constexpr std::size_t kMaxPlacementAttempts = 100'000;
constexpr int kOverlapSweeps = 50;
constexpr double kOverlapTolerance = 1e-4;  // in units of the smallest radius

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

// Platform-independent draws from mt19937_64.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double gaussian(std::mt19937_64& rng) {
  double u1 = uniform01(rng);
  while (u1 <= 0.0) u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

// Angle folded into (-pi/2, pi/2]; a rod is symmetric under theta -> theta+pi.
double fold_angle(double theta) {
  double t = std::remainder(theta, kPi);
  if (t <= -0.5 * kPi) t += kPi;
  return t;
}

struct FlatBead {
  Vec2 position;
  Vec2 arm;  // bead centre minus body centre
  double radius;
  double dipole_per_field;
  std::uint32_t body;
};

// Uniform bucket grid for short-range pair queries.
class CellList {
 public:
  CellList(const std::vector<FlatBead>& beads, double width, double height,
           double cell)
      : cell_(cell),
        nx_(std::max(1, static_cast<int>(std::ceil(width / cell)))),
        ny_(std::max(1, static_cast<int>(std::ceil(height / cell)))),
        buckets_(static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_)) {
    for (std::size_t b = 0; b < beads.size(); ++b) {
      const auto [i, j] = locate(beads[b].position);
      buckets_[static_cast<std::size_t>(j * nx_ + i)].push_back(b);
    }
  }

  // Calls fn(a, b) once for every bead pair a < b in neighbouring cells.
  template <typename Fn>
  void for_each_pair(Fn&& fn) const {
    for (int j = 0; j < ny_; ++j) {
      for (int i = 0; i < nx_; ++i) {
        const auto& here = buckets_[static_cast<std::size_t>(j * nx_ + i)];
        for (int dj = -1; dj <= 1; ++dj) {
          for (int di = -1; di <= 1; ++di) {
            const int ni = i + di;
            const int nj = j + dj;
            if (ni < 0 || nj < 0 || ni >= nx_ || nj >= ny_) continue;
            const auto& there = buckets_[static_cast<std::size_t>(nj * nx_ + ni)];
            for (const std::size_t a : here) {
              for (const std::size_t b : there) {
                if (a < b) fn(a, b);
              }
            }
          }
        }
      }
    }
  }

 private:
  std::pair<int, int> locate(Vec2 p) const {
    const int i = std::clamp(static_cast<int>(std::floor(p.x / cell_)), 0, nx_ - 1);
    const int j = std::clamp(static_cast<int>(std::floor(p.y / cell_)), 0, ny_ - 1);
    return {i, j};
  }

  double cell_;
  int nx_;
  int ny_;
  std::vector<std::vector<std::size_t>> buckets_;
};

}  // namespace

std::string_view to_string(HealStatus status) {
  switch (status) {
    case HealStatus::kHealed: return "healed";
    case HealStatus::kBridgeTarget: return "bridge_target";
    case HealStatus::kTimeLimit: return "time_limit";
    case HealStatus::kTimeout: return "timeout";
    case HealStatus::kBelowThreshold: return "below_threshold";
  }
  return "unknown";
}

double HealRecord::first_bridge_time() const {
  return bridge_times.empty() ? std::numeric_limits<double>::quiet_NaN()
                              : bridge_times.front();
}

void SimConfig::validate() const {
  dispersion.validate();
  gap.validate();
  require(gap.voltage > 0.0, "gap voltage must be > 0");
  require(circuit.z_in >= 0.0 && circuit.z_out >= 0.0,
          "terminal impedances must be >= 0");
  require(circuit.z_bridge > 0.0, "bridge impedance must be > 0");
  require(circuit.threshold_field >= 0.0, "threshold field must be >= 0");
  require(time_step.max_dt > 0.0, "max_dt must be > 0");
  require(time_step.displacement_fraction > 0.0,
          "displacement fraction must be > 0");
  require(max_time > 0.0, "max_time must be > 0");
  require(contact_gap_fraction > 0.0, "contact gap fraction must be > 0");
  require(force_cutoff_radii >= 0.0, "force cutoff must be >= 0");
  require(layer_depth >= 0.0, "layer depth must be >= 0");
  require(!brownian || temperature > 0.0, "temperature must be > 0");
}

Simulation::Simulation(SimConfig config) : config_(std::move(config)) {
  config_.validate();
  const auto& fluid = config_.dispersion.fluid;
  const double eta = fluid.viscosity;
  min_radius_ = std::numeric_limits<double>::infinity();
  std::size_t total = 0;
  for (const auto& s : config_.dispersion.species) {
    const auto& p = s.particle;
    SpeciesInfo info{};
    info.shape = p.shape;
    info.bead_radius = p.radius;
    if (p.shape == Shape::kSphere) {
      info.dipole_per_field = induced_dipole(p, fluid, 1.0);
      info.rod_dipole_per_field = info.dipole_per_field;
      info.drag = 6.0 * kPi * eta * p.radius;
    } else {
      require(p.length < config_.gap.gap, "rod longer than the gap");
      info.bead_offset = 0.5 * p.length - p.radius;
      info.rod_dipole_per_field = induced_dipole(p, fluid, 1.0);
      info.dipole_per_field = 0.5 * info.rod_dipole_per_field;
      info.drag = 2.0 * 6.0 * kPi * eta * p.radius;
      info.rotational_drag = eta * p.radius * p.length * p.length;
    }
    info_.push_back(info);
    min_radius_ = std::min(min_radius_, p.radius);
    max_radius_ = std::max(max_radius_, p.radius);

    const double n3 = number_density(s);
    const double area = config_.gap.gap * config_.gap.width;
    const double areal = config_.layer_depth > 0.0 ? n3 * config_.layer_depth
                                                   : std::pow(n3, 2.0 / 3.0) / 4.0;
    const auto count = static_cast<std::size_t>(std::llround(area * areal));
    counts_.push_back(count);
    total += count;
  }
  volume_fraction(config_.dispersion);
  if (total == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "dispersion yields no particles in the simulated domain");
  }
  if (total > config_.max_particles) {
    throw Error(ErrorCode::kInvalidArgument,
                "particle count " + std::to_string(total) +
                    " exceeds max_particles " +
                    std::to_string(config_.max_particles));
  }
}

std::size_t Simulation::particle_count() const {
  std::size_t n = 0;
  for (const auto c : counts_) n += c;
  return n;
}

double Simulation::contact_gap(std::uint32_t species) const {
  return config_.contact_gap_fraction * info_[species].bead_radius;
}

std::vector<Simulation::Bead> Simulation::beads(const Body& body) const {
  const auto& info = info_[body.species];
  if (info.shape == Shape::kSphere) {
    return {{body.position, info.bead_radius, info.dipole_per_field}};
  }
  const Vec2 axis{std::cos(body.orientation), std::sin(body.orientation)};
  return {{body.position - info.bead_offset * axis, info.bead_radius,
           info.dipole_per_field},
          {body.position + info.bead_offset * axis, info.bead_radius,
           info.dipole_per_field}};
}

double Simulation::gap_voltage(std::size_t bridges) const {
  const double v0 = config_.gap.voltage;
  if (bridges == 0) return v0;
  const double z_gap = config_.circuit.z_bridge / static_cast<double>(bridges);
  return v0 * z_gap / (z_gap + config_.circuit.z_in + config_.circuit.z_out);
}

double Simulation::route_current(std::size_t bridges) const {
  if (bridges == 0) return 0.0;
  return config_.gap.voltage /
         (config_.circuit.z_in + config_.circuit.z_out +
          config_.circuit.z_bridge / static_cast<double>(bridges));
}

SimState Simulation::place(std::vector<Body> bodies) const {
  SimState state;
  state.rng.seed(config_.seed);
  state.bodies = std::move(bodies);
  for (const auto& b : state.bodies) {
    require(b.species < info_.size(), "body references unknown species");
  }
  state.field = gap_voltage(0) / config_.gap.gap;
  enforce_constraints(state);
  return state;
}

SimState Simulation::initialize() const {
  SimState state;
  state.rng.seed(config_.seed);
  state.field = gap_voltage(0) / config_.gap.gap;
  const double d = config_.gap.gap;
  const double w = config_.gap.width;

  std::vector<Bead> placed;
  std::size_t attempts = 0;
  for (std::uint32_t k = 0; k < counts_.size(); ++k) {
    const auto& info = info_[k];
    const double delta = contact_gap(k);
    const double reach = info.bead_offset + info.bead_radius;
    for (std::size_t n = 0; n < counts_[k]; ++n) {
      bool ok = false;
      while (!ok) {
        if (++attempts > kMaxPlacementAttempts) {
          throw Error(ErrorCode::kInvalidArgument,
                      "domain too dense: could not place " +
                          std::to_string(particle_count()) + " particles");
        }
        Body body;
        body.species = k;
        body.position = {reach + delta + uniform01(state.rng) * (d - 2.0 * (reach + delta)),
                         reach + uniform01(state.rng) * (w - 2.0 * reach)};
        if (info.shape == Shape::kRod) body.orientation = uniform01(state.rng) * kPi;
        const auto mine = beads(body);
        ok = true;
        for (const auto& b : mine) {
          if (b.position.x - b.radius < delta || d - b.position.x - b.radius < delta ||
              b.position.y < b.radius || w - b.position.y < b.radius) {
            ok = false;
          }
          for (const auto& other : placed) {
            if (!ok) break;
            const double gap = norm(b.position - other.position) - b.radius - other.radius;
            const double need = config_.contact_gap_fraction * 0.5 * (b.radius + other.radius);
            if (gap < need) ok = false;
          }
        }
        if (ok) {
          placed.insert(placed.end(), mine.begin(), mine.end());
          state.bodies.push_back(body);
        }
      }
    }
  }
  return state;
}

struct Simulation::Forces {
  std::vector<Vec2> force;
  std::vector<double> torque;
};

void Simulation::compute_forces(const SimState& state, Forces& out) const {
  const std::size_t n = state.bodies.size();
  out.force.assign(n, Vec2{});
  out.torque.assign(n, 0.0);

  std::vector<FlatBead> flat;
  flat.reserve(2 * n);
  for (std::uint32_t b = 0; b < n; ++b) {
    for (const auto& bead : beads(state.bodies[b])) {
      flat.push_back({bead.position, bead.position - state.bodies[b].position,
                      bead.radius, bead.dipole_per_field, b});
    }
  }

  const double xi = state.field;
  const double eps = config_.dispersion.fluid.permittivity();
  const double scale = 3.0 * xi * xi / (4.0 * kPi * eps);
  const double cutoff = config_.force_cutoff_radii * max_radius_;
  const double cutoff2 = cutoff > 0.0 ? cutoff * cutoff : std::numeric_limits<double>::infinity();

  for (std::size_t a = 0; a < flat.size(); ++a) {
    const auto& ba = flat[a];
    const bool mobile_a = state.bodies[ba.body].mobile();
    for (std::size_t b = a + 1; b < flat.size(); ++b) {
      const auto& bb = flat[b];
      if (ba.body == bb.body) continue;
      if (!mobile_a && !state.bodies[bb.body].mobile()) continue;
      const Vec2 r = bb.position - ba.position;
      const double d2 = dot(r, r);
      if (d2 > cutoff2) continue;
      const double d = std::sqrt(d2);
      const Vec2 rhat = (1.0 / d) * r;
      const double c = rhat.x;
      const double k = scale * ba.dipole_per_field * bb.dipole_per_field / (d2 * d2);
      const double radial = 1.0 - 5.0 * c * c;
      Vec2 f{k * (radial * rhat.x + 2.0 * c), k * radial * rhat.y};
      // Hard contact: a touching pair cannot compress further.
      const double surface = d - ba.radius - bb.radius;
      if (surface < config_.contact_gap_fraction * 0.5 * (ba.radius + bb.radius)) {
        const double fn = dot(f, rhat);
        if (fn < 0.0) f -= fn * rhat;
      }
      out.force[bb.body] += f;
      out.force[ba.body] -= f;
      out.torque[bb.body] += cross(bb.arm, f);
      out.torque[ba.body] -= cross(ba.arm, f);
    }
  }

  if (config_.electrode_images) {
    const double gap = config_.gap.gap;
    for (const auto& bead : flat) {
      if (!state.bodies[bead.body].mobile()) continue;
      const double p2 = bead.dipole_per_field * bead.dipole_per_field;
      const double sl = 2.0 * bead.position.x;
      const double sr = 2.0 * (gap - bead.position.x);
      const double fx = 2.0 * scale * p2 * (1.0 / (sr * sr * sr * sr) - 1.0 / (sl * sl * sl * sl));
      const Vec2 f{fx, 0.0};
      out.force[bead.body] += f;
      out.torque[bead.body] += cross(bead.arm, f);
    }
  }

  for (std::uint32_t b = 0; b < n; ++b) {
    const auto& body = state.bodies[b];
    const auto& info = info_[body.species];
    if (info.shape == Shape::kRod) {
      const double p = info.rod_dipole_per_field * xi;
      out.torque[b] -= p * xi * std::sin(fold_angle(body.orientation));
    }
    if (!std::isfinite(out.force[b].x) || !std::isfinite(out.force[b].y) ||
        !std::isfinite(out.torque[b])) {
      std::ostringstream dump;
      dump.precision(17);
      dump << "non-finite force on body " << b << " at t=" << state.time
           << " pos=(" << body.position.x << ", " << body.position.y << ")";
      for (std::size_t o = 0; o < n && o < 16; ++o) {
        dump << "; body " << o << " (" << state.bodies[o].position.x << ", "
             << state.bodies[o].position.y << ")";
      }
      throw Error(ErrorCode::kNumerical, dump.str());
    }
  }
}

double Simulation::advance(SimState& state, double max_dt) const {
  Forces forces;
  compute_forces(state, forces);

  const std::size_t n = state.bodies.size();
  std::vector<Vec2> velocity(n);
  std::vector<double> spin(n, 0.0);
  double dt = std::min(max_dt, config_.time_step.max_dt);
  const double frac = config_.time_step.displacement_fraction;
  for (std::size_t b = 0; b < n; ++b) {
    const auto& body = state.bodies[b];
    if (!body.mobile()) continue;
    const auto& info = info_[body.species];
    velocity[b] = (1.0 / info.drag) * forces.force[b];
    const double speed = norm(velocity[b]);
    if (speed > 0.0) dt = std::min(dt, frac * info.bead_radius / speed);
    if (info.shape == Shape::kRod) {
      spin[b] = forces.torque[b] / info.rotational_drag;
      const double tip = std::abs(spin[b]) * (info.bead_offset + info.bead_radius);
      if (tip > 0.0) dt = std::min(dt, frac * info.bead_radius / tip);
    }
  }
  if (!std::isfinite(dt) || dt <= 0.0) return 0.0;

  for (std::size_t b = 0; b < n; ++b) {
    auto& body = state.bodies[b];
    if (!body.mobile()) continue;
    body.position += dt * velocity[b];
    body.orientation += dt * spin[b];
    if (config_.brownian) {
      const auto& info = info_[body.species];
      const double kt = kBoltzmann * config_.temperature;
      const double sigma = std::sqrt(2.0 * kt * dt / info.drag);
      body.position += Vec2{sigma * gaussian(state.rng), sigma * gaussian(state.rng)};
      if (info.shape == Shape::kRod) {
        body.orientation += std::sqrt(2.0 * kt * dt / info.rotational_drag) * gaussian(state.rng);
      }
    }
  }
  enforce_constraints(state);
  state.time += dt;
  ++state.steps;
  return dt;
}

void Simulation::step(SimState& state, double dt) const {
  require(dt > 0.0, "step needs dt > 0");
  const double end = state.time + dt;
  while (state.time < end) {
    const double taken = advance(state, end - state.time);
    if (taken <= 0.0) {
      state.time = end;
      break;
    }
  }
}

void Simulation::anchor_to_electrodes(SimState& state) const {
  const double gap = config_.gap.gap;
  const double height = config_.gap.width;
  for (auto& body : state.bodies) {
    if (!body.mobile()) continue;
    const double delta = contact_gap(body.species);
    Vec2 shift;
    double left = std::numeric_limits<double>::infinity();
    double right = left;
    for (const auto& bead : beads(body)) {
      left = std::min(left, bead.position.x - bead.radius);
      right = std::min(right, gap - bead.position.x - bead.radius);
      shift.y = std::max(shift.y, bead.radius - bead.position.y);
      shift.y = std::min(shift.y, height - bead.radius - bead.position.y);
    }
    if (left < 0.0) shift.x = -left;
    if (right < 0.0) shift.x = right;
    body.position += shift;
    if (left < delta) {
      body.anchor = Anchor::kLeft;
    } else if (right < delta) {
      body.anchor = Anchor::kRight;
    }
  }
}

void Simulation::resolve_overlaps(SimState& state) const {
  const double margin = 0.5 * max_radius_;
  for (int sweep = 0; sweep < kOverlapSweeps; ++sweep) {
    std::vector<FlatBead> flat;
    for (std::uint32_t b = 0; b < state.bodies.size(); ++b) {
      for (const auto& bead : beads(state.bodies[b])) {
        flat.push_back({bead.position, {}, bead.radius, 0.0, b});
      }
    }
    const CellList cells(flat, config_.gap.gap, config_.gap.width,
                         2.0 * max_radius_ + margin);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    cells.for_each_pair([&](std::size_t a, std::size_t b) {
      if (flat[a].body == flat[b].body) return;
      const double reach = flat[a].radius + flat[b].radius;
      const Vec2 r = flat[b].position - flat[a].position;
      if (dot(r, r) < reach * reach) pairs.emplace_back(a, b);
    });
    std::sort(pairs.begin(), pairs.end());

    double worst = 0.0;
    for (const auto& [a, b] : pairs) {
      auto& body_a = state.bodies[flat[a].body];
      auto& body_b = state.bodies[flat[b].body];
      if (!body_a.mobile() && !body_b.mobile()) continue;
      Vec2 r = flat[b].position - flat[a].position;
      double d = norm(r);
      const double reach = flat[a].radius + flat[b].radius;
      if (d >= reach) continue;
      if (d == 0.0) {
        r = {1.0, 0.0};
        d = 1.0;
        worst = std::max(worst, reach);
      }
      const double overlap = reach - d;
      worst = std::max(worst, overlap);
      const Vec2 n = (1.0 / d) * r;
      const double wa = body_a.mobile() ? (body_b.mobile() ? 0.5 : 1.0) : 0.0;
      const double wb = 1.0 - wa;
      body_a.position -= (wa * overlap) * n;
      body_b.position += (wb * overlap) * n;
      flat[a].position -= (wa * overlap) * n;
      flat[b].position += (wb * overlap) * n;
    }
    if (worst < kOverlapTolerance * min_radius_) break;
  }
}

void Simulation::enforce_constraints(SimState& state) const {
  anchor_to_electrodes(state);
  resolve_overlaps(state);
  anchor_to_electrodes(state);
}

ContactGraph Simulation::contact_graph(const SimState& state) const {
  ContactGraph graph(state.bodies.size());
  std::vector<FlatBead> flat;
  for (std::uint32_t b = 0; b < state.bodies.size(); ++b) {
    const auto& body = state.bodies[b];
    if (body.anchor == Anchor::kLeft) graph.touch_left(b);
    if (body.anchor == Anchor::kRight) graph.touch_right(b);
    for (const auto& bead : beads(body)) {
      flat.push_back({bead.position, {}, bead.radius, 0.0, b});
    }
  }
  const double cell = 2.0 * max_radius_ * (1.0 + config_.contact_gap_fraction);
  const CellList cells(flat, config_.gap.gap, config_.gap.width, cell);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  cells.for_each_pair([&](std::size_t a, std::size_t b) {
    if (flat[a].body == flat[b].body) return;
    const double surface =
        norm(flat[b].position - flat[a].position) - flat[a].radius - flat[b].radius;
    if (surface < config_.contact_gap_fraction * 0.5 * (flat[a].radius + flat[b].radius)) {
      edges.emplace_back(std::min(flat[a].body, flat[b].body),
                         std::max(flat[a].body, flat[b].body));
    }
  });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const auto& [a, b] : edges) graph.add_contact(a, b);
  return graph;
}

std::size_t Simulation::detect_bridges(SimState& state) const {
  const ContactGraph graph = contact_graph(state);
  state.contacts.clear();
  for (std::uint32_t a = 0; a < graph.bodies(); ++a) {
    for (const auto b : graph.neighbours(a)) {
      if (a < b) state.contacts.emplace_back(a, b);
    }
  }
  const auto paths = max_disjoint_paths(graph);
  if (paths.count > state.bridges) {
    for (const auto& path : paths.paths) {
      for (const auto body : path) state.bodies[body].frozen = true;
    }
    state.bridges = paths.count;
  }
  return state.bridges;
}

HealRecord Simulation::run_heal(const TraceSink& trace,
                                std::uint64_t trace_interval) const {
  HealRecord record;
  record.particles = particle_count();
  SimState state = initialize();
  const double gap = config_.gap.gap;
  const double threshold = config_.circuit.threshold_field;
  state.field = gap_voltage(0) / gap;
  record.events.push_back({0.0, 0, gap_voltage(0), 0.0});
  if (trace) trace(state);

  // Returns true when the run should stop after a bridge-count increase.
  auto on_bridges = [&](std::size_t before) {
    state.field = gap_voltage(state.bridges) / gap;
    const BridgeEvent event{state.time, state.bridges,
                            gap_voltage(state.bridges),
                            route_current(state.bridges)};
    state.events.push_back(event);
    record.events.push_back(event);
    for (std::size_t k = before; k < state.bridges; ++k) {
      record.bridge_times.push_back(state.time);
    }
    if (threshold > 0.0 && state.field < threshold) {
      record.status = HealStatus::kHealed;
      return true;
    }
    if (config_.stop_after_bridges > 0 &&
        state.bridges >= config_.stop_after_bridges) {
      record.status = HealStatus::kBridgeTarget;
      return true;
    }
    return false;
  };

  if (state.field < threshold) {
    record.status = HealStatus::kBelowThreshold;
  } else if (detect_bridges(state) == 0 || !on_bridges(0)) {
    while (true) {
      const double remaining = config_.max_time - state.time;
      if (remaining <= 0.0) {
        record.status =
            state.bridges > 0 ? HealStatus::kTimeLimit : HealStatus::kTimeout;
        break;
      }
      if (advance(state, remaining) <= 0.0) state.time = config_.max_time;
      const std::size_t before = state.bridges;
      detect_bridges(state);
      if (trace && trace_interval > 0 && state.steps % trace_interval == 0) {
        trace(state);
      }
      if (state.bridges > before && on_bridges(before)) break;
    }
  }
  if (trace) trace(state);
  record.final_bridges = state.bridges;
  record.final_time = state.time;
  record.steps = state.steps;
  record.final_state = std::move(state);
  return record;
}

HealRecord run_heal(const SimConfig& config) {
  return Simulation(config).run_heal();
}

double mean_nearest_neighbour_distance(const SimState& state) {
  const std::size_t n = state.bodies.size();
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  double total = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b) best = std::min(best, norm(state.bodies[a].position - state.bodies[b].position));
    }
    total += best;
  }
  return total / static_cast<double>(n);
}

}  // namespace healsim::sim
