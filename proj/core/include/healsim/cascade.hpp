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

// Sequential bridge formation across an open gap loaded by terminal
// impedances.
//
// Every bridge has impedance Z_b. With j bridges in parallel the gap sits in
// a divider against Z_in + Z_out, so the field falls to xi0 / (1 + j*alpha)
// with alpha = (Z_in + Z_out) / Z_b. Chaining time scales as lambda / xi^2,
// hence the j-th formation event (j = 0 is the first bridge) takes
// lambda xi0^-2 (j*alpha + 1)^2. Formation stops once the field would drop
// below the threshold xi_th, giving
//
//   m   = floor((xi0/xi_th - 1) / alpha)
//   T_b = lambda xi0^-2 * sum_{j=0..m} (j*alpha + 1)^2
//   I_b = (V0/Z_b) / (alpha + 1/m),  healed impedance Z_b / m.
//
// The sum keeps m + 1 terms while the healed route is counted with m bridges;
// both conventions are kept exactly and simulate_cascade() follows them too.

#ifndef HEALSIM_CASCADE_HPP_
#define HEALSIM_CASCADE_HPP_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace healsim::cascade {

struct Params {
  double voltage = 0.0;          // V0, V
  double gap = 0.0;              // D, m
  double z_in = 0.0;             // ohm
  double z_out = 0.0;            // ohm
  double z_bridge = 0.0;         // Z_b, ohm
  double threshold_field = 0.0;  // xi_th, V/m
  double lambda = 0.0;           // V^2 s / m^2
  std::uint64_t max_bridges = 1'000'000;

  double nominal_field() const { return voltage / gap; }
  double load_ratio() const { return (z_in + z_out) / z_bridge; }
  void validate() const;
};

enum class Status {
  kHealed,
  kUnbounded,  // cap max_bridges reached (always the case when alpha == 0)
  kNoHeal,
};

std::string_view to_string(Status status);

struct BridgeCount {
  std::uint64_t bridges = 0;
  Status status = Status::kNoHeal;
};

/// xi_j = xi0 / (1 + j*alpha).
double field_after_bridges(const Params& params, std::uint64_t j);

/// Formation time of event j, lambda xi0^-2 (j*alpha + 1)^2. Throws when
/// xi_j is below threshold because no bridge forms there.
double bridge_formation_time(const Params& params, std::uint64_t j);

BridgeCount bridge_count(const Params& params);

/// T_b for the model's own bridge count. Throws when m == 0.
double total_heal_time(const Params& params);

/// T_b evaluated for an explicit m (closed-form power sums).
double total_heal_time(const Params& params, std::uint64_t bridges);

struct HealedMetrics {
  std::uint64_t bridges = 0;
  double impedance = 0.0;  // Z_b / m, +inf for an open route
  double current = 0.0;   // I_b, 0 for an open route
  Status status = Status::kNoHeal;
};

HealedMetrics healed_metrics(const Params& params);

struct RatioPoint {
  double terminal_impedance = 0.0;  // Z_in = Z_out
  std::uint64_t bridges = 0;
  double heal_time = 0.0;  // NaN when no heal
  double current = 0.0;
  double ratio = 0.0;  // T_b / I_b, NaN when no heal
  Status status = Status::kNoHeal;
};

/// Repair time to current ratio with Z_in = Z_out = each terminal value.
std::vector<RatioPoint> heal_ratio_curve(const Params& base,
                                         std::span<const double> terminal);

struct Result {
  std::uint64_t bridges = 0;
  Status status = Status::kNoHeal;
  std::vector<double> fields;           // xi_j at each formation event
  std::vector<double> formation_times;  // per event
  double total_time = 0.0;
  double impedance = 0.0;
  double current = 0.0;
};

/// Iterative oracle: add one bridge at a time, recompute the divider from the
/// circuit, accumulate time. Shares no arithmetic path with the closed forms.
Result simulate_cascade(const Params& params);

}  // namespace healsim::cascade

#endif  // HEALSIM_CASCADE_HPP_
