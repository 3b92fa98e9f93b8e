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

// Experiment runner behind the `healsim` binary. A run reads its JSON
// parameters (and input file, where the experiment takes one), writes its
// outputs into one directory and finishes with manifest.json.
//
// The manifest embeds the effective configuration (file parameters with
// command-line overrides folded in) and its FNV-1a 64 hash over the
// canonical serialization (sorted keys, no whitespace), so the hash is the
// same on every platform.

#ifndef HEALSIM_HARNESS_HPP_
#define HEALSIM_HARNESS_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "healsim/descriptors.hpp"
#include "healsim/table.hpp"

namespace healsim::harness {

using nlohmann::json;

enum class Kind {
  kCascade,
  kKineticsFit,
  kKineticsPredict,
  kSimHeal,
  kSimSweep,
  kMazeSolve,
  kFieldDump,
};

std::string_view to_string(Kind kind);
Kind kind_from_string(std::string_view name);

enum class Format { kCsv, kJson };

std::string_view to_string(Format format);
Format format_from_string(std::string_view name);

std::string_view version();

struct ExperimentConfig {
  Kind kind = Kind::kCascade;
  std::filesystem::path config_path;  // JSON parameters
  std::filesystem::path input_path;   // CSV data or maze ASCII
  std::filesystem::path out_dir = ".";
  std::optional<std::uint64_t> seed;
  Format format = Format::kCsv;  // tabular outputs

  std::optional<double> field;  // kinetics predict, V/m
  std::optional<std::string> mode;  // maze solve, "det" or "stoch"
  std::optional<double> eta;        // maze solve
  bool dump_field = false;          // maze solve: potential and |E| matrices
  bool trace = false;               // sim heal: trajectory CSV

  /// Required files are named and exist.
  void validate() const;
};

struct RunManifest {
  std::string tool_version;
  std::string kind;
  std::string config_hash;  // 16 hex digits
  std::uint64_t seed = 0;
  std::string started;   // UTC, ISO 8601
  std::string finished;  // UTC, ISO 8601
  std::vector<std::string> outputs;  // relative to the output directory
  json config;  // effective configuration

  json to_json() const;
};

RunManifest run_experiment(const ExperimentConfig& config);

/// Machine-readable error document written to stderr on failure.
json error_json(const std::exception& error);

std::uint64_t fnv1a64(std::string_view bytes);
std::string config_hash(const json& config);

/// min(HEALSIM_THREADS or the hardware thread count, jobs), at least 1.
std::size_t worker_count(std::size_t jobs);

struct SweepResult {
  io::Table table{{}};
  json summary;
};

/// Runs every grid point (times replicates) in a worker pool. Rows come back
/// in grid order, replicates innermost; a failing point becomes a row with
/// status "error" and empty metrics.
SweepResult run_sweep(const io::SweepSpec& spec, std::size_t workers);

}  // namespace healsim::harness

#endif  // HEALSIM_HARNESS_HPP_
