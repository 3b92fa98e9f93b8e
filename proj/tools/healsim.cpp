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

// healsim: command-line entry point.
//
//   healsim cascade        --config params.json
//   healsim kinetics fit   --input data.csv
//   healsim kinetics predict --config dispersion.json [--field V_per_m]
//   healsim sim heal       --config sim.json [--trace]
//   healsim sim sweep      --config sweep.json
//   healsim maze solve     --input maze.txt [--mode det|stoch] [--eta x]
//   healsim field dump     --config geometry.json | --input maze.txt
//
// Every subcommand accepts --out <dir>, --seed <u64> and --format csv|json.
// Failures exit nonzero with a JSON error document on stderr.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "healsim/harness.hpp"

namespace {

using healsim::harness::ExperimentConfig;
using healsim::harness::Kind;

struct Options {
  std::string config;
  std::string input;
  std::string out = ".";
  std::optional<std::uint64_t> seed;
  std::string format = "csv";
  double field = 0.0;
  std::string mode;
  double eta = 1.0;
  bool dump_field = false;
  bool trace = false;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--out", o.out, "Output directory")->capture_default_str();
  cmd->add_option("--seed", o.seed, "Random seed (overrides the config)");
  cmd->add_option("--format", o.format, "Tabular output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

CLI::Option* add_config(CLI::App* cmd, Options& o, bool required) {
  auto* opt = cmd->add_option("--config", o.config, "JSON parameter file");
  if (required) opt->required();
  return opt;
}

CLI::Option* add_input(CLI::App* cmd, Options& o, std::string help, bool required) {
  auto* opt = cmd->add_option("--input", o.input, std::move(help));
  if (required) opt->required();
  return opt;
}

int fail(const nlohmann::json& doc, int status) {
  std::cerr << doc.dump() << '\n';
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Field-driven self-healing interconnect simulator"};
  app.set_version_flag("--version", std::string(healsim::harness::version()));
  app.require_subcommand(1);
  Options o;

  auto* cascade = app.add_subcommand("cascade", "Closed-form bridge cascade");
  add_config(cascade, o, true);
  add_common(cascade, o);

  auto* kinetics = app.add_subcommand("kinetics", "Repair-time kinetics");
  kinetics->require_subcommand(1);
  auto* fit = kinetics->add_subcommand("fit", "Power-law fit of (field, time) data");
  add_input(fit, o, "CSV with columns xi_V_per_m,t_s", true);
  add_common(fit, o);
  auto* predict = kinetics->add_subcommand("predict", "Repair-time estimate");
  add_config(predict, o, true);
  auto* field_opt = predict->add_option("--field", o.field, "Applied field, V/m");
  add_common(predict, o);

  auto* sim = app.add_subcommand("sim", "Particle dynamics");
  sim->require_subcommand(1);
  auto* heal = sim->add_subcommand("heal", "Single healing run");
  add_config(heal, o, true);
  heal->add_flag("--trace", o.trace, "Write the particle trajectory CSV");
  add_common(heal, o);
  auto* sweep = sim->add_subcommand("sweep", "Parameter sweep");
  add_config(sweep, o, true);
  add_common(sweep, o);

  auto* maze = app.add_subcommand("maze", "Maze solving by field-driven growth");
  maze->require_subcommand(1);
  auto* solve = maze->add_subcommand("solve", "Grow a bridge through a maze");
  add_input(solve, o, "Maze ASCII file", true);
  add_config(solve, o, false);
  auto* mode_opt = solve->add_option("--mode", o.mode, "Growth mode")
                       ->check(CLI::IsMember({"det", "stoch"}));
  auto* eta_opt = solve->add_option("--eta", o.eta, "Growth exponent (stochastic mode)");
  solve->add_flag("--dump-field", o.dump_field, "Write potential and |E| matrices");
  add_common(solve, o);

  auto* field = app.add_subcommand("field", "Laplace solver");
  field->require_subcommand(1);
  auto* dump = field->add_subcommand("dump", "Solve and dump potential and |E|");
  auto* dump_config = add_config(dump, o, false);
  auto* dump_input = add_input(dump, o, "Maze ASCII file", false);
  dump_input->excludes(dump_config);
  add_common(dump, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail({{"error", {{"code", "usage"}, {"message", e.what()}}}}, 2);
  }

  ExperimentConfig config;
  if (*cascade) {
    config.kind = Kind::kCascade;
  } else if (*fit) {
    config.kind = Kind::kKineticsFit;
  } else if (*predict) {
    config.kind = Kind::kKineticsPredict;
    if (*field_opt) config.field = o.field;
  } else if (*heal) {
    config.kind = Kind::kSimHeal;
    config.trace = o.trace;
  } else if (*sweep) {
    config.kind = Kind::kSimSweep;
  } else if (*solve) {
    config.kind = Kind::kMazeSolve;
    if (*mode_opt) config.mode = o.mode;
    if (*eta_opt) config.eta = o.eta;
    config.dump_field = o.dump_field;
  } else {
    config.kind = Kind::kFieldDump;
  }
  config.config_path = o.config;
  config.input_path = o.input;
  config.out_dir = o.out;
  config.seed = o.seed;
  config.format = o.format == "json" ? healsim::harness::Format::kJson
                                     : healsim::harness::Format::kCsv;

  try {
    const auto manifest = healsim::harness::run_experiment(config);
    std::cout << manifest.to_json().dump() << '\n';
  } catch (const std::exception& e) {
    return fail(healsim::harness::error_json(e), 1);
  }
  return 0;
}
