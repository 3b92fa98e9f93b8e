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

// JSON experiment descriptors with strict schemas. Every reader records all
// problems (unknown keys, missing keys, wrong types) before failing, so one
// SchemaError lists every offending key as a JSON pointer.
//
// Units are carried in key names: lengths in um, concentrations in mg/ml,
// fields in V/m, impedances in ohm, times in s.

#ifndef HEALSIM_DESCRIPTORS_HPP_
#define HEALSIM_DESCRIPTORS_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "healsim/cascade.hpp"
#include "healsim/error.hpp"
#include "healsim/field.hpp"
#include "healsim/kinetics.hpp"
#include "healsim/maze.hpp"
#include "healsim/model.hpp"
#include "healsim/particles.hpp"

namespace healsim::io {

using nlohmann::json;

struct SchemaIssue {
  std::string pointer;  // e.g. "/gap/gap_um"
  std::string problem;
};

class SchemaError : public Error {
 public:
  explicit SchemaError(std::vector<SchemaIssue> issues);
  const std::vector<SchemaIssue>& issues() const noexcept { return issues_; }

 private:
  std::vector<SchemaIssue> issues_;
};

class Schema {
 public:
  void report(std::string pointer, std::string problem);
  bool ok() const { return issues_.empty(); }
  void throw_if_any() const;

 private:
  std::vector<SchemaIssue> issues_;
};

/// Reads one JSON object. Keys that are never requested are reported as
/// unknown by finish().
class ObjectReader {
 public:
  ObjectReader(const json& value, std::string pointer, Schema& schema);
  ~ObjectReader();
  ObjectReader(const ObjectReader&) = delete;
  ObjectReader& operator=(const ObjectReader&) = delete;

  bool has(std::string_view key) const;

  double number(std::string_view key);
  double number(std::string_view key, double fallback);
  std::uint64_t count(std::string_view key);
  std::uint64_t count(std::string_view key, std::uint64_t fallback);
  bool flag(std::string_view key, bool fallback);
  std::string text(std::string_view key);
  std::string text(std::string_view key, std::string fallback);
  /// Raw member, marked as consumed; null json when absent.
  const json& raw(std::string_view key, bool required);

  std::string child_pointer(std::string_view key) const;
  Schema& schema() { return schema_; }

  void finish();

 private:
  const json* lookup(std::string_view key, bool required);

  const json& value_;
  std::string pointer_;
  Schema& schema_;
  std::vector<std::string> consumed_;
  bool valid_ = true;
  bool finished_ = false;
};

/// Parses text as JSON; syntax errors become ParseError with line/column.
json parse_json_text(std::string_view text);

DispersionSpec read_dispersion(const json& value, const std::string& pointer,
                               Schema& schema);

DispersionSpec parse_dispersion(const json& value);
cascade::Params parse_cascade(const json& value);

struct SimRun {
  sim::SimConfig config;
  std::uint64_t trace_interval = 1;  // steps between trajectory rows
};
SimRun parse_sim_run(const json& value);

struct KineticsPrediction {
  DispersionSpec dispersion;
  double field = 0.0;  // 0 when absent; the CLI may supply it
  kinetics::Calibration calibration;
};
KineticsPrediction parse_kinetics_prediction(const json& value);

struct MazeRun {
  double cell_size = maze::kDefaultCellSize;
  double voltage = maze::kDefaultVoltage;
  maze::GrowthOptions growth;
};
MazeRun parse_maze_run(const json& value);

/// {"spacing_um": h, "rows": ["#..A", ...], "conductors": {"A": volts, ...},
///  "tolerance_V": tol}. '#' is wall, '.' fluid, any letter a conductor.
/// Grid row j is rows[j].
struct FieldDump {
  field::FieldGrid grid{1, 1, 1.0};
  field::SolveOptions solve;
};
FieldDump parse_field_dump(const json& value);

struct SweepAxis {
  std::vector<std::string> keys;  // JSON pointers into the base config
  std::vector<json> values;
};

struct SweepSpec {
  std::string target;  // "cascade" or "sim-heal"
  json base;
  std::vector<SweepAxis> axes;
  std::uint64_t replicates = 1;

  /// Number of grid points (product of axis lengths), excluding replicates.
  std::size_t points() const;
  /// Base config with the values of grid point `index` (row-major, first
  /// axis slowest) substituted.
  json point_config(std::size_t index) const;
};
SweepSpec parse_sweep(const json& value);

}  // namespace healsim::io

#endif  // HEALSIM_DESCRIPTORS_HPP_
