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

#include "healsim/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include "healsim/cascade.hpp"
#include "healsim/field.hpp"
#include "healsim/kinetics.hpp"
#include "healsim/maze.hpp"
#include "healsim/particles.hpp"

#ifndef HEALSIM_VERSION
#define HEALSIM_VERSION "0.0.0"
#endif

namespace healsim::harness {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file", path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string hex64(std::uint64_t v) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int k = 15; k >= 0; --k) {
    out[static_cast<std::size_t>(k)] = kDigits[v & 0xF];
    v >>= 4;
  }
  return out;
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

class OutputDir {
 public:
  OutputDir(std::filesystem::path dir, Format format) : dir_(std::move(dir)), format_(format) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw IoError("cannot create output directory", dir_.string());
  }

  void write(const std::string& name, const std::string& content) {
    const auto path = dir_ / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write output file", path.string());
    out << content;
    out.close();
    if (!out) throw IoError("cannot write output file", path.string());
    written_.push_back(name);
  }

  void write_json(const std::string& name, const json& doc) { write(name, doc.dump(2) + "\n"); }

  void write_table(const std::string& stem, const io::Table& table) {
    if (format_ == Format::kCsv) {
      write(stem + ".csv", table.to_csv());
    } else {
      write_json(stem + ".json", table.to_json());
    }
  }

  const std::vector<std::string>& written() const { return written_; }

 private:
  std::filesystem::path dir_;
  Format format_;
  std::vector<std::string> written_;
};

// ---------------------------------------------------------------------------
// Experiments. Each takes its effective parameters and writes its outputs.

void run_cascade(const json& params, OutputDir& out) {
  const auto p = io::parse_cascade(params);
  const auto count = cascade::bridge_count(p);
  const auto metrics = cascade::healed_metrics(p);

  io::Table table({"j", "xi_j_V_per_m", "t_j_s", "cum_time_s"});
  if (count.bridges > 0) {
    double cum = 0.0;
    for (std::uint64_t j = 0; j <= count.bridges; ++j) {
      const double t = cascade::bridge_formation_time(p, j);
      cum += t;
      table.add_row({j, cascade::field_after_bridges(p, j), t, cum});
    }
  }
  out.write_table("cascade", table);

  const double heal_time =
      count.bridges > 0 ? cascade::total_heal_time(p, count.bridges) : kNaN;
  json summary = {
      {"m", count.bridges},
      {"T_b_s", finite_or_null(heal_time)},
      {"Z_healed_ohm", finite_or_null(metrics.impedance)},
      {"I_b_A", metrics.current},
      {"status", std::string(cascade::to_string(count.status))},
      {"nominal_field_V_per_m", p.nominal_field()},
      {"alpha", p.load_ratio()},
  };
  out.write_json("summary.json", summary);
}

void run_kinetics_fit(const std::string& csv, OutputDir& out) {
  const auto rows = io::read_numeric_csv(csv, {"xi_V_per_m", "t_s"});
  std::vector<kinetics::FieldTime> data;
  data.reserve(rows.size());
  for (const auto& r : rows) data.push_back({r[0], r[1]});
  const auto fit = kinetics::fit_power_law(data);
  out.write_json("fit.json", {{"lambda", fit.amplitude},
                              {"exponent", fit.exponent},
                              {"residual", fit.residual},
                              {"points", fit.points}});
}

void run_kinetics_predict(const json& params, OutputDir& out) {
  const auto k = io::parse_kinetics_prediction(params);
  if (!(k.field > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "kinetics predict needs field_V_per_m > 0 (config key or --field)");
  }
  const auto est = kinetics::repair_time_estimate(k.dispersion, k.field, k.calibration);
  out.write_json("prediction.json",
                 {{"field_V_per_m", k.field},
                  {"lambda_V2s_per_m2", est.lambda},
                  {"time_s", est.time},
                  {"mean_spacing_um", mean_spacing(k.dispersion) * 1e6},
                  {"volume_fraction", volume_fraction(k.dispersion)},
                  {"calibration", {{"sphere", k.calibration.sphere}, {"rod", k.calibration.rod}}}});
}

std::string_view anchor_name(sim::Anchor a) {
  switch (a) {
    case sim::Anchor::kFree: return "free";
    case sim::Anchor::kLeft: return "left";
    case sim::Anchor::kRight: return "right";
  }
  return "free";
}

void run_sim_heal(const json& params, bool trace, OutputDir& out) {
  const auto run = io::parse_sim_run(params);
  const sim::Simulation simulation(run.config);

  io::Table trajectory({"step", "t_s", "body", "x_m", "y_m", "theta_rad"});
  sim::TraceSink sink;
  if (trace) {
    sink = [&trajectory](const sim::SimState& s) {
      for (std::size_t b = 0; b < s.bodies.size(); ++b) {
        const auto& body = s.bodies[b];
        trajectory.add_row({s.steps, s.time, static_cast<std::uint64_t>(b), body.position.x,
                            body.position.y, body.orientation});
      }
    };
  }
  const auto record = simulation.run_heal(sink, trace ? run.trace_interval : 0);

  io::Table events({"t_s", "m_sim", "V_gap_V", "I_A"});
  for (const auto& e : record.events) {
    events.add_row({e.time, static_cast<std::uint64_t>(e.bridges), e.gap_voltage, e.current});
  }
  out.write_table("events", events);

  json bodies = json::array();
  for (const auto& b : record.final_state.bodies) {
    bodies.push_back({{"x_m", b.position.x},
                      {"y_m", b.position.y},
                      {"theta_rad", b.orientation},
                      {"species", b.species},
                      {"anchor", std::string(anchor_name(b.anchor))},
                      {"frozen", b.frozen}});
  }
  out.write_json("final_state.json",
                 {{"status", std::string(sim::to_string(record.status))},
                  {"seed", run.config.seed},
                  {"particles", record.particles},
                  {"final_bridges", record.final_bridges},
                  {"final_time_s", record.final_time},
                  {"first_bridge_s", finite_or_null(record.first_bridge_time())},
                  {"bridge_times_s", record.bridge_times},
                  {"steps", record.steps},
                  {"bodies", bodies}});
  if (trace) out.write_table("trajectory", trajectory);
}

void write_field_matrices(const field::FieldGrid& grid, OutputDir& out) {
  const auto e = field::field_from_potential(grid);
  std::vector<double> phi(grid.size());
  std::vector<double> mag(grid.size());
  for (int j = 0; j < grid.ny(); ++j) {
    for (int i = 0; i < grid.nx(); ++i) {
      const auto k = grid.index(i, j);
      const bool wall = grid.kind(i, j) == field::CellKind::kWall;
      phi[k] = wall ? kNaN : grid.potential(i, j);
      mag[k] = wall ? kNaN : e.magnitude(i, j);
    }
  }
  out.write("potential.csv", io::matrix_csv(phi, grid.nx(), grid.ny()));
  out.write("field_magnitude.csv", io::matrix_csv(mag, grid.nx(), grid.ny()));
}

void run_maze_solve(const json& params, const std::string& ascii, bool dump_field,
                    OutputDir& out) {
  const auto m = io::parse_maze_run(params);
  const auto grid = maze::parse_maze(ascii, m.cell_size, m.voltage);
  const auto solution = maze::solve_maze(grid, m.growth);
  const auto bfs = maze::bfs_shortest_path(grid);

  out.write("path.txt", maze::overlay_path(grid, solution.path));
  io::Table growth({"iter", "cluster_size", "current_au", "connected"});
  for (const auto& s : solution.growth.history) {
    growth.add_row({static_cast<std::uint64_t>(s.iteration),
                    static_cast<std::uint64_t>(s.cluster_size), s.current, s.connected});
  }
  out.write_table("growth", growth);
  const bool connected = solution.status == maze::GrowthStatus::kConnected;
  out.write_json(
      "summary.json",
      {{"status", std::string(maze::to_string(solution.status))},
       {"mode", std::string(maze::to_string(m.growth.mode))},
       {"eta", m.growth.eta},
       {"seed", m.growth.seed},
       {"iterations", solution.growth.iterations},
       {"solves", solution.growth.solves},
       {"path_length", connected ? json(solution.path.size()) : json(nullptr)},
       {"bfs_length", bfs.found ? json(bfs.cells.size()) : json(nullptr)},
       {"final_current_au",
        solution.growth.history.empty() ? 0.0 : solution.growth.history.back().current}});
  if (dump_field) {
    auto final_grid = solution.field;
    if (!final_grid.solved()) field::solve_in_place(final_grid, m.growth.solve);
    write_field_matrices(final_grid, out);
  }
}

void run_field_dump(const json& params, const std::string* ascii, OutputDir& out) {
  field::FieldGrid grid{1, 1, 1.0};
  field::SolveOptions solve;
  if (ascii) {
    const auto m = io::parse_maze_run(params);
    grid = maze::to_field_grid(maze::parse_maze(*ascii, m.cell_size, m.voltage));
    solve = m.growth.solve;
  } else {
    auto dump = io::parse_field_dump(params);
    grid = std::move(dump.grid);
    solve = dump.solve;
  }
  const auto stats = field::solve_in_place(grid, solve);
  write_field_matrices(grid, out);
  out.write_json("summary.json", {{"nx", grid.nx()},
                                  {"ny", grid.ny()},
                                  {"spacing_m", grid.spacing()},
                                  {"iterations", stats.iterations},
                                  {"residual_V", stats.residual},
                                  {"maximum_principle", field::satisfies_maximum_principle(grid)}});
}

void run_sim_sweep(const json& params, OutputDir& out) {
  const auto spec = io::parse_sweep(params);
  const auto jobs = spec.points() * spec.replicates;
  auto result = run_sweep(spec, worker_count(jobs));
  out.write_table("sweep", result.table);
  out.write_json("summary.json", result.summary);
}

// Effective parameters: the config file with command-line overrides folded
// in, so that the manifest alone reproduces the run.
json effective_params(const ExperimentConfig& c, std::uint64_t& seed) {
  json params = c.config_path.empty() ? json::object()
                                      : io::parse_json_text(read_file(c.config_path));
  auto take_seed = [&](json& target) {
    if (c.seed) target["seed"] = *c.seed;
    if (!target.contains("seed")) target["seed"] = std::uint64_t{1};
    if (target["seed"].is_number_unsigned()) {
      seed = target["seed"].get<std::uint64_t>();
    }
  };
  switch (c.kind) {
    case Kind::kSimHeal:
    case Kind::kMazeSolve:
      if (c.kind == Kind::kMazeSolve) {
        if (c.mode) params["mode"] = *c.mode;
        if (c.eta) params["eta"] = *c.eta;
      }
      if (params.is_object()) take_seed(params);
      break;
    case Kind::kSimSweep:
      if (params.is_object() && params.contains("base") && params["base"].is_object() &&
          params.value("target", "") == "sim-heal") {
        take_seed(params["base"]);
      }
      break;
    case Kind::kKineticsPredict:
      if (c.field && params.is_object()) params["field_V_per_m"] = *c.field;
      break;
    default:
      break;
  }
  return params;
}

}  // namespace

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::kCascade: return "cascade";
    case Kind::kKineticsFit: return "kinetics-fit";
    case Kind::kKineticsPredict: return "kinetics-predict";
    case Kind::kSimHeal: return "sim-heal";
    case Kind::kSimSweep: return "sim-sweep";
    case Kind::kMazeSolve: return "maze-solve";
    case Kind::kFieldDump: return "field-dump";
  }
  return "unknown";
}

Kind kind_from_string(std::string_view name) {
  for (const Kind k : {Kind::kCascade, Kind::kKineticsFit, Kind::kKineticsPredict, Kind::kSimHeal,
                       Kind::kSimSweep, Kind::kMazeSolve, Kind::kFieldDump}) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown experiment kind '" + std::string(name) + "'");
}

std::string_view to_string(Format format) { return format == Format::kCsv ? "csv" : "json"; }

Format format_from_string(std::string_view name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  throw Error(ErrorCode::kInvalidArgument, "unknown format '" + std::string(name) + "'");
}

std::string_view version() { return HEALSIM_VERSION; }

void ExperimentConfig::validate() const {
  const bool needs_config = kind == Kind::kCascade || kind == Kind::kKineticsPredict ||
                            kind == Kind::kSimHeal || kind == Kind::kSimSweep;
  const bool needs_input = kind == Kind::kKineticsFit || kind == Kind::kMazeSolve;
  if (needs_config && config_path.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(to_string(kind)) + " needs a parameter file (--config)");
  }
  if (needs_input && input_path.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(to_string(kind)) + " needs an input file (--input)");
  }
  if (kind == Kind::kFieldDump && config_path.empty() && input_path.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "field-dump needs a geometry (--config) or a maze (--input)");
  }
  for (const auto* p : {&config_path, &input_path}) {
    if (!p->empty() && !std::filesystem::is_regular_file(*p)) {
      throw IoError("input file does not exist", p->string());
    }
  }
}

json RunManifest::to_json() const {
  return {{"tool", "healsim"},         {"tool_version", tool_version},
          {"kind", kind},              {"config_hash", config_hash},
          {"seed", seed},              {"started_utc", started},
          {"finished_utc", finished},  {"outputs", outputs},
          {"config", config}};
}

RunManifest run_experiment(const ExperimentConfig& config) {
  config.validate();
  RunManifest manifest;
  manifest.started = utc_now();
  manifest.tool_version = std::string(version());
  manifest.kind = std::string(to_string(config.kind));
  manifest.seed = config.seed.value_or(0);

  json params = effective_params(config, manifest.seed);
  std::string input_text;
  json effective = {{"kind", manifest.kind}, {"params", params},
                    {"format", std::string(to_string(config.format))}};
  if (!config.input_path.empty()) {
    input_text = read_file(config.input_path);
    effective["input"] = {{"name", config.input_path.filename().string()},
                          {"fnv1a64", hex64(fnv1a64(input_text))}};
  }
  if (config.kind == Kind::kMazeSolve) effective["dump_field"] = config.dump_field;
  if (config.kind == Kind::kSimHeal) effective["trace"] = config.trace;
  manifest.config = effective;
  manifest.config_hash = config_hash(effective);

  OutputDir out(config.out_dir, config.format);
  switch (config.kind) {
    case Kind::kCascade: run_cascade(params, out); break;
    case Kind::kKineticsFit: run_kinetics_fit(input_text, out); break;
    case Kind::kKineticsPredict: run_kinetics_predict(params, out); break;
    case Kind::kSimHeal: run_sim_heal(params, config.trace, out); break;
    case Kind::kSimSweep: run_sim_sweep(params, out); break;
    case Kind::kMazeSolve: run_maze_solve(params, input_text, config.dump_field, out); break;
    case Kind::kFieldDump:
      run_field_dump(params, config.input_path.empty() ? nullptr : &input_text, out);
      break;
  }
  manifest.outputs = out.written();
  manifest.finished = utc_now();
  if (!config.input_path.empty()) manifest.config["input"]["path"] = config.input_path.string();
  out.write_json("manifest.json", manifest.to_json());
  return manifest;
}

json error_json(const std::exception& error) {
  json body = {{"message", error.what()}};
  if (const auto* e = dynamic_cast<const Error*>(&error)) {
    body["code"] = std::string(to_string(e->code()));
  } else {
    body["code"] = "internal";
  }
  if (const auto* e = dynamic_cast<const IoError*>(&error)) body["path"] = e->path();
  if (const auto* e = dynamic_cast<const ParseError*>(&error)) {
    body["line"] = e->line();
    body["column"] = e->column();
  }
  if (const auto* e = dynamic_cast<const io::SchemaError*>(&error)) {
    json keys = json::array();
    json issues = json::array();
    for (const auto& i : e->issues()) {
      keys.push_back(i.pointer);
      issues.push_back({{"key", i.pointer}, {"problem", i.problem}});
    }
    body["keys"] = keys;
    body["issues"] = issues;
  }
  if (const auto* e = dynamic_cast<const NotConvergedError*>(&error)) {
    body["last_residual"] = e->last_residual();
  }
  return {{"error", body}};
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string config_hash(const json& config) { return hex64(fnv1a64(config.dump())); }

std::size_t worker_count(std::size_t jobs) {
  std::size_t n = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("HEALSIM_THREADS")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) n = static_cast<std::size_t>(v);
  }
  n = std::min(n, jobs);
  return n == 0 ? 1 : n;
}

// ---------------------------------------------------------------------------
// Sweeps

namespace {

struct SweepRow {
  std::string status;
  std::string error;
  std::vector<io::Value> metrics;
  double field = kNaN;  // nominal, sim-heal only
  double first_bridge = kNaN;
};

std::vector<std::string> metric_columns(const std::string& target) {
  if (target == "cascade") return {"m", "T_b_s", "Z_healed_ohm", "I_b_A", "T_b_over_I_b_s_per_A"};
  return {"seed", "field_V_per_m", "particles", "first_bridge_s", "final_bridges", "final_time_s",
          "steps"};
}

SweepRow run_point(const std::string& target, json config, std::uint64_t replicate) {
  SweepRow row;
  const auto width = metric_columns(target).size();
  try {
    if (target == "cascade") {
      const auto p = io::parse_cascade(config);
      const auto metrics = cascade::healed_metrics(p);
      const double t = metrics.bridges > 0 ? cascade::total_heal_time(p, metrics.bridges) : kNaN;
      row.status = std::string(cascade::to_string(metrics.status));
      row.metrics = {metrics.bridges, t, metrics.impedance, metrics.current,
                     metrics.bridges > 0 ? t / metrics.current : kNaN};
    } else {
      const std::uint64_t base_seed =
          config.contains("seed") && config["seed"].is_number_integer() && config["seed"].get<std::int64_t>() >= 0
              ? config["seed"].get<std::uint64_t>()
              : 1;
      config["seed"] = base_seed + replicate;
      const auto run = io::parse_sim_run(config);
      const auto record = sim::Simulation(run.config).run_heal();
      row.field = run.config.gap.nominal_field();
      row.first_bridge = record.first_bridge_time();
      row.status = std::string(sim::to_string(record.status));
      row.metrics = {run.config.seed,
                     row.field,
                     static_cast<std::uint64_t>(record.particles),
                     row.first_bridge,
                     static_cast<std::uint64_t>(record.final_bridges),
                     record.final_time,
                     record.steps};
    }
  } catch (const std::exception& e) {
    row.status = "error";
    row.error = e.what();
    row.metrics.assign(width, io::Value{kNaN});
    row.field = kNaN;
    row.first_bridge = kNaN;
  }
  return row;
}

io::Value axis_value(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

SweepResult run_sweep(const io::SweepSpec& spec, std::size_t workers) {
  std::vector<std::string> columns;
  for (const auto& axis : spec.axes) {
    columns.push_back(axis.keys.empty() ? std::string("axis") : axis.keys.front().substr(1));
  }
  columns.insert(columns.end(), {"replicate", "status", "error"});
  for (auto& m : metric_columns(spec.target)) columns.push_back(m);

  const std::size_t points = spec.points();
  const std::size_t jobs = points * spec.replicates;
  std::vector<SweepRow> rows(jobs);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < jobs; k = next++) {
      rows[k] = run_point(spec.target, spec.point_config(k / spec.replicates),
                          k % spec.replicates);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < std::max<std::size_t>(workers, 1); ++w) pool.emplace_back(work);
    work();
  }

  SweepResult result{io::Table(columns), json::object()};
  std::size_t failures = 0;
  std::vector<kinetics::FieldTime> samples;
  for (std::size_t k = 0; k < jobs; ++k) {
    const json point = spec.point_config(k / spec.replicates);
    std::vector<io::Value> cells;
    for (const auto& axis : spec.axes) cells.push_back(axis_value(point[json::json_pointer(axis.keys.front())]));
    cells.push_back(static_cast<std::uint64_t>(k % spec.replicates));
    cells.push_back(rows[k].status);
    cells.push_back(rows[k].error);
    for (auto& m : rows[k].metrics) cells.push_back(std::move(m));
    result.table.add_row(std::move(cells));
    if (rows[k].status == "error") ++failures;
    if (std::isfinite(rows[k].first_bridge) && rows[k].first_bridge > 0.0) {
      samples.push_back({rows[k].field, rows[k].first_bridge});
    }
  }

  result.summary = {{"target", spec.target},
                    {"points", points},
                    {"replicates", spec.replicates},
                    {"rows", jobs},
                    {"failures", failures}};
  if (spec.target == "sim-heal") {
    json fit = nullptr;
    try {
      if (samples.size() >= 2) {
        const auto f = kinetics::fit_power_law(samples);
        fit = {{"lambda", f.amplitude}, {"exponent", f.exponent}, {"residual", f.residual},
               {"points", f.points}};
      }
    } catch (const Error&) {
      fit = nullptr;
    }
    result.summary["first_bridge_fit"] = fit;
  }
  return result;
}

}  // namespace healsim::harness
