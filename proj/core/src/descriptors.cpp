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

#include "healsim/descriptors.hpp"

#include <algorithm>
#include <cctype>

namespace healsim::io {
namespace {

constexpr double kMicro = 1e-6;

std::string escape_pointer_token(std::string_view key) {
  std::string out;
  for (const char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

bool is_count(const json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

std::string describe(const std::vector<SchemaIssue>& issues) {
  std::string msg = "invalid configuration:";
  for (const auto& i : issues) msg += " " + (i.pointer.empty() ? "/" : i.pointer) + " (" + i.problem + ");";
  msg.pop_back();
  return msg;
}

}  // namespace

SchemaError::SchemaError(std::vector<SchemaIssue> issues)
    : Error(ErrorCode::kSchema, describe(issues)), issues_(std::move(issues)) {}

void Schema::report(std::string pointer, std::string problem) {
  issues_.push_back({std::move(pointer), std::move(problem)});
}

void Schema::throw_if_any() const {
  if (!issues_.empty()) throw SchemaError(issues_);
}

ObjectReader::ObjectReader(const json& value, std::string pointer, Schema& schema)
    : value_(value), pointer_(std::move(pointer)), schema_(schema) {
  if (!value_.is_object()) {
    // A missing member was already reported by the parent reader.
    if (!value_.is_null()) schema_.report(pointer_, "expected object");
    valid_ = false;
  }
}

ObjectReader::~ObjectReader() {
  if (!finished_) finish();
}

std::string ObjectReader::child_pointer(std::string_view key) const {
  return pointer_ + "/" + escape_pointer_token(key);
}

bool ObjectReader::has(std::string_view key) const {
  return valid_ && value_.contains(std::string(key));
}

const json* ObjectReader::lookup(std::string_view key, bool required) {
  if (!valid_) return nullptr;
  consumed_.emplace_back(key);
  const auto it = value_.find(std::string(key));
  if (it == value_.end()) {
    if (required) schema_.report(child_pointer(key), "missing required key");
    return nullptr;
  }
  return &*it;
}

double ObjectReader::number(std::string_view key) {
  const json* v = lookup(key, true);
  if (!v) return 0.0;
  if (!v->is_number()) {
    schema_.report(child_pointer(key), "expected number");
    return 0.0;
  }
  return v->get<double>();
}

double ObjectReader::number(std::string_view key, double fallback) {
  const json* v = lookup(key, false);
  if (!v) return fallback;
  if (!v->is_number()) {
    schema_.report(child_pointer(key), "expected number");
    return fallback;
  }
  return v->get<double>();
}

std::uint64_t ObjectReader::count(std::string_view key) {
  const json* v = lookup(key, true);
  if (!v) return 0;
  if (!is_count(*v)) {
    schema_.report(child_pointer(key), "expected non-negative integer");
    return 0;
  }
  return v->get<std::uint64_t>();
}

std::uint64_t ObjectReader::count(std::string_view key, std::uint64_t fallback) {
  const json* v = lookup(key, false);
  if (!v) return fallback;
  if (!is_count(*v)) {
    schema_.report(child_pointer(key), "expected non-negative integer");
    return fallback;
  }
  return v->get<std::uint64_t>();
}

bool ObjectReader::flag(std::string_view key, bool fallback) {
  const json* v = lookup(key, false);
  if (!v) return fallback;
  if (!v->is_boolean()) {
    schema_.report(child_pointer(key), "expected boolean");
    return fallback;
  }
  return v->get<bool>();
}

std::string ObjectReader::text(std::string_view key) {
  const json* v = lookup(key, true);
  if (!v) return {};
  if (!v->is_string()) {
    schema_.report(child_pointer(key), "expected string");
    return {};
  }
  return v->get<std::string>();
}

std::string ObjectReader::text(std::string_view key, std::string fallback) {
  const json* v = lookup(key, false);
  if (!v) return fallback;
  if (!v->is_string()) {
    schema_.report(child_pointer(key), "expected string");
    return fallback;
  }
  return v->get<std::string>();
}

const json& ObjectReader::raw(std::string_view key, bool required) {
  static const json kNull;
  const json* v = lookup(key, required);
  return v ? *v : kNull;
}

void ObjectReader::finish() {
  finished_ = true;
  if (!valid_) return;
  for (const auto& [key, unused] : value_.items()) {
    if (std::find(consumed_.begin(), consumed_.end(), key) == consumed_.end()) {
      schema_.report(child_pointer(key), "unknown key");
    }
  }
}

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line/column pair.
    const std::size_t offset = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    const auto colon = what.rfind(": ");
    if (colon != std::string::npos) what = what.substr(colon + 2);
    throw ParseError("invalid JSON: " + what, line, col);
  }
}

DispersionSpec read_dispersion(const json& value, const std::string& pointer,
                               Schema& schema) {
  DispersionSpec d;
  ObjectReader top(value, pointer, schema);
  {
    ObjectReader fluid(top.raw("fluid", true), top.child_pointer("fluid"), schema);
    d.fluid.viscosity = fluid.number("viscosity_pa_s");
    d.fluid.epsilon_r = fluid.number("epsilon_r");
  }
  const json& particles = top.raw("particles", true);
  if (!particles.is_null() && !particles.is_array()) {
    schema.report(top.child_pointer("particles"), "expected array");
  } else if (particles.is_array()) {
    for (std::size_t k = 0; k < particles.size(); ++k) {
      ObjectReader p(particles[k], top.child_pointer("particles") + "/" + std::to_string(k), schema);
      const std::string shape_name = p.text("shape");
      Species s;
      if (shape_name == "sphere") {
        s.particle.shape = Shape::kSphere;
      } else if (shape_name == "rod") {
        s.particle.shape = Shape::kRod;
      } else if (!shape_name.empty()) {
        schema.report(p.child_pointer("shape"), "expected \"sphere\" or \"rod\"");
      }
      s.particle.radius = p.number("radius_um") * kMicro;
      if (s.particle.shape == Shape::kRod) s.particle.length = p.number("length_um") * kMicro;
      s.particle.density = p.number(
          "density_kg_m3", s.particle.shape == Shape::kRod ? kNanotubeDensity : kCopperDensity);
      s.concentration = p.number("concentration_mg_ml");
      d.species.push_back(s);
    }
  }
  return d;
}

DispersionSpec parse_dispersion(const json& value) {
  Schema schema;
  DispersionSpec d = read_dispersion(value, "", schema);
  schema.throw_if_any();
  d.validate();
  return d;
}

cascade::Params parse_cascade(const json& value) {
  Schema schema;
  cascade::Params p;
  {
    ObjectReader r(value, "", schema);
    p.voltage = r.number("voltage_V");
    p.gap = r.number("gap_um") * kMicro;
    p.z_in = r.number("z_in_ohm");
    p.z_out = r.number("z_out_ohm");
    p.z_bridge = r.number("z_bridge_ohm");
    p.threshold_field = r.number("threshold_field_V_per_m");
    p.lambda = r.number("lambda_V2s_per_m2");
    p.max_bridges = r.count("max_bridges", p.max_bridges);
  }
  schema.throw_if_any();
  p.validate();
  return p;
}

SimRun parse_sim_run(const json& value) {
  Schema schema;
  SimRun run;
  auto& c = run.config;
  {
    ObjectReader r(value, "", schema);
    c.dispersion = read_dispersion(r.raw("dispersion", true), r.child_pointer("dispersion"), schema);
    {
      ObjectReader g(r.raw("gap", true), r.child_pointer("gap"), schema);
      c.gap.gap = g.number("gap_um") * kMicro;
      c.gap.width = g.number("width_um") * kMicro;
      c.gap.voltage = g.number("voltage_V");
    }
    if (r.has("circuit")) {
      ObjectReader k(r.raw("circuit", false), r.child_pointer("circuit"), schema);
      c.circuit.z_in = k.number("z_in_ohm", c.circuit.z_in);
      c.circuit.z_out = k.number("z_out_ohm", c.circuit.z_out);
      c.circuit.z_bridge = k.number("z_bridge_ohm", c.circuit.z_bridge);
      c.circuit.threshold_field = k.number("threshold_field_V_per_m", c.circuit.threshold_field);
    }
    if (r.has("time_step")) {
      ObjectReader t(r.raw("time_step", false), r.child_pointer("time_step"), schema);
      c.time_step.max_dt = t.number("max_dt_s", c.time_step.max_dt);
      c.time_step.displacement_fraction =
          t.number("displacement_fraction", c.time_step.displacement_fraction);
    }
    if (r.has("brownian")) {
      ObjectReader b(r.raw("brownian", false), r.child_pointer("brownian"), schema);
      c.brownian = b.flag("enabled", c.brownian);
      c.temperature = b.number("temperature_K", c.temperature);
    }
    c.seed = r.count("seed", c.seed);
    c.max_time = r.number("max_time_s", c.max_time);
    c.max_particles = r.count("max_particles", c.max_particles);
    c.contact_gap_fraction = r.number("contact_gap_fraction", c.contact_gap_fraction);
    c.stop_after_bridges = r.count("stop_after_bridges", c.stop_after_bridges);
    c.electrode_images = r.flag("electrode_images", c.electrode_images);
    c.force_cutoff_radii = r.number("force_cutoff_radii", c.force_cutoff_radii);
    c.layer_depth = r.number("layer_depth_um", c.layer_depth / kMicro) * kMicro;
    run.trace_interval = r.count("trace_interval", run.trace_interval);
  }
  schema.throw_if_any();
  c.validate();
  if (run.trace_interval == 0) {
    throw Error(ErrorCode::kInvalidArgument, "trace_interval must be >= 1");
  }
  return run;
}

KineticsPrediction parse_kinetics_prediction(const json& value) {
  Schema schema;
  KineticsPrediction k;
  {
    ObjectReader r(value, "", schema);
    k.dispersion = read_dispersion(r.raw("dispersion", true), r.child_pointer("dispersion"), schema);
    k.field = r.number("field_V_per_m", 0.0);
    if (r.has("calibration")) {
      ObjectReader c(r.raw("calibration", false), r.child_pointer("calibration"), schema);
      k.calibration.sphere = c.number("sphere", k.calibration.sphere);
      k.calibration.rod = c.number("rod", k.calibration.rod);
    }
  }
  schema.throw_if_any();
  k.dispersion.validate();
  return k;
}

MazeRun parse_maze_run(const json& value) {
  Schema schema;
  MazeRun m;
  {
    ObjectReader r(value, "", schema);
    m.cell_size = r.number("cell_size_um", m.cell_size / kMicro) * kMicro;
    m.voltage = r.number("voltage_V", m.voltage);
    const std::string mode = r.text("mode", std::string(maze::to_string(m.growth.mode)));
    if (mode == "det") {
      m.growth.mode = maze::GrowthMode::kDeterministic;
    } else if (mode == "stoch") {
      m.growth.mode = maze::GrowthMode::kStochastic;
    } else {
      schema.report(r.child_pointer("mode"), "expected \"det\" or \"stoch\"");
    }
    m.growth.eta = r.number("eta", m.growth.eta);
    m.growth.seed = r.count("seed", m.growth.seed);
    m.growth.leakage_ratio = r.number("leakage_ratio", m.growth.leakage_ratio);
    m.growth.solve.tolerance = r.number("tolerance_V", m.growth.solve.tolerance);
  }
  schema.throw_if_any();
  if (!(m.cell_size > 0.0)) throw Error(ErrorCode::kInvalidArgument, "cell size must be > 0");
  if (!(m.voltage > 0.0)) throw Error(ErrorCode::kInvalidArgument, "maze voltage must be > 0");
  if (!(m.growth.eta >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "eta must be >= 0");
  if (!(m.growth.leakage_ratio >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "leakage ratio must be >= 0");
  }
  return m;
}

FieldDump parse_field_dump(const json& value) {
  Schema schema;
  double spacing = 0.0;
  std::vector<std::string> rows;
  std::vector<std::pair<char, double>> conductors;
  FieldDump dump;
  {
    ObjectReader r(value, "", schema);
    spacing = r.number("spacing_um") * kMicro;
    dump.solve.tolerance = r.number("tolerance_V", dump.solve.tolerance);
    const json& rows_json = r.raw("rows", true);
    if (rows_json.is_array()) {
      for (std::size_t k = 0; k < rows_json.size(); ++k) {
        if (!rows_json[k].is_string()) {
          schema.report(r.child_pointer("rows") + "/" + std::to_string(k), "expected string");
        } else {
          rows.push_back(rows_json[k].get<std::string>());
        }
      }
    } else if (!rows_json.is_null()) {
      schema.report(r.child_pointer("rows"), "expected array of strings");
    }
    const json& cond = r.raw("conductors", true);
    if (cond.is_object()) {
      for (const auto& [key, v] : cond.items()) {
        const std::string ptr = r.child_pointer("conductors") + "/" + escape_pointer_token(key);
        if (key.size() != 1 || !std::isalpha(static_cast<unsigned char>(key[0]))) {
          schema.report(ptr, "conductor labels must be single letters");
        } else if (!v.is_number()) {
          schema.report(ptr, "expected number");
        } else {
          conductors.emplace_back(key[0], v.get<double>());
        }
      }
    } else if (!cond.is_null()) {
      schema.report(r.child_pointer("conductors"), "expected object");
    }
  }
  schema.throw_if_any();
  if (!(spacing > 0.0)) throw Error(ErrorCode::kInvalidArgument, "spacing must be > 0");
  if (rows.empty() || rows.front().empty()) {
    throw Error(ErrorCode::kInvalidArgument, "geometry has no cells");
  }
  const int nx = static_cast<int>(rows.front().size());
  const int ny = static_cast<int>(rows.size());
  field::FieldGrid grid(nx, ny, spacing);
  for (int j = 0; j < ny; ++j) {
    const auto& row = rows[static_cast<std::size_t>(j)];
    if (static_cast<int>(row.size()) != nx) {
      throw ParseError("ragged geometry row", j + 1, static_cast<int>(std::min<std::size_t>(row.size(), nx)) + 1);
    }
    for (int i = 0; i < nx; ++i) {
      const char c = row[static_cast<std::size_t>(i)];
      if (c == '#') {
        grid.set_wall(i, j);
      } else if (c == '.') {
        grid.set_fluid(i, j);
      } else {
        const auto it = std::find_if(conductors.begin(), conductors.end(),
                                     [c](const auto& p) { return p.first == c; });
        if (it == conductors.end()) {
          throw ParseError(std::string("unknown geometry cell '") + c + "'", j + 1, i + 1);
        }
        grid.set_conductor(i, j, it->second);
      }
    }
  }
  dump.grid = std::move(grid);
  return dump;
}

std::size_t SweepSpec::points() const {
  std::size_t n = axes.empty() ? 0 : 1;
  for (const auto& a : axes) n *= a.values.size();
  return n;
}

json SweepSpec::point_config(std::size_t index) const {
  json config = base;
  std::vector<std::size_t> digits(axes.size());
  for (std::size_t a = axes.size(); a-- > 0;) {
    const std::size_t n = axes[a].values.size();
    digits[a] = index % n;
    index /= n;
  }
  for (std::size_t a = 0; a < axes.size(); ++a) {
    for (const auto& key : axes[a].keys) {
      config[json::json_pointer(key)] = axes[a].values[digits[a]];
    }
  }
  return config;
}

SweepSpec parse_sweep(const json& value) {
  Schema schema;
  SweepSpec s;
  {
    ObjectReader r(value, "", schema);
    s.target = r.text("target");
    if (!s.target.empty() && s.target != "cascade" && s.target != "sim-heal") {
      schema.report(r.child_pointer("target"), "expected \"cascade\" or \"sim-heal\"");
    }
    s.base = r.raw("base", true);
    if (!s.base.is_null() && !s.base.is_object()) {
      schema.report(r.child_pointer("base"), "expected object");
    }
    s.replicates = r.count("replicates", 1);
    const json& axes = r.raw("axes", true);
    if (axes.is_array()) {
      if (axes.empty() || axes.size() > 2) {
        schema.report(r.child_pointer("axes"), "sweep grid must have one or two axes");
      }
      for (std::size_t k = 0; k < axes.size(); ++k) {
        const std::string ptr = r.child_pointer("axes") + "/" + std::to_string(k);
        ObjectReader a(axes[k], ptr, schema);
        SweepAxis axis;
        const json& keys = a.raw("keys", true);
        if (!keys.is_array() || keys.empty()) {
          if (!keys.is_null()) schema.report(a.child_pointer("keys"), "expected non-empty array");
        } else {
          for (std::size_t q = 0; q < keys.size(); ++q) {
            const std::string kptr = a.child_pointer("keys") + "/" + std::to_string(q);
            if (!keys[q].is_string()) {
              schema.report(kptr, "expected JSON pointer string");
              continue;
            }
            const auto key = keys[q].get<std::string>();
            try {
              const json::json_pointer jp(key);
              if (s.base.is_object() && !s.base.contains(jp)) {
                schema.report(kptr, "pointer " + key + " not present in base");
              }
            } catch (const json::exception&) {
              schema.report(kptr, "malformed JSON pointer");
              continue;
            }
            axis.keys.push_back(key);
          }
        }
        const json& values = a.raw("values", true);
        if (values.is_array()) {
          axis.values.assign(values.begin(), values.end());
        } else if (!values.is_null()) {
          schema.report(a.child_pointer("values"), "expected array");
        }
        s.axes.push_back(std::move(axis));
      }
    } else if (!axes.is_null()) {
      schema.report(r.child_pointer("axes"), "expected array");
    }
  }
  schema.throw_if_any();
  if (s.replicates == 0) throw Error(ErrorCode::kInvalidArgument, "replicates must be >= 1");
  return s;
}

}  // namespace healsim::io
