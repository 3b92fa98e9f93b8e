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

#include "healsim/cascade.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "healsim/error.hpp"

namespace healsim::cascade {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

// Compensated (Neumaier) running sum.
class Accumulator {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

void Params::validate() const {
  require(voltage > 0.0, "cascade voltage must be > 0");
  require(gap > 0.0, "cascade gap must be > 0");
  require(z_in >= 0.0 && z_out >= 0.0, "terminal impedances must be >= 0");
  require(z_bridge > 0.0, "bridge impedance must be > 0");
  require(threshold_field > 0.0, "threshold field must be > 0");
  require(lambda > 0.0, "lambda must be > 0");
  require(max_bridges >= 1, "max_bridges must be >= 1");
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::kHealed: return "healed";
    case Status::kUnbounded: return "unbounded";
    case Status::kNoHeal: return "no_heal";
  }
  return "unknown";
}

double field_after_bridges(const Params& params, std::uint64_t j) {
  params.validate();
  return params.nominal_field() /
         (1.0 + static_cast<double>(j) * params.load_ratio());
}

double bridge_formation_time(const Params& params, std::uint64_t j) {
  if (field_after_bridges(params, j) < params.threshold_field) {
    throw Error(ErrorCode::kInvalidArgument,
                "below threshold, no bridge forms at index " +
                    std::to_string(j));
  }
  const double xi0 = params.nominal_field();
  const double f = static_cast<double>(j) * params.load_ratio() + 1.0;
  return params.lambda / (xi0 * xi0) * f * f;
}

BridgeCount bridge_count(const Params& params) {
  params.validate();
  const double xi0 = params.nominal_field();
  if (xi0 <= params.threshold_field) return {0, Status::kNoHeal};
  const double alpha = params.load_ratio();
  if (alpha == 0.0) return {params.max_bridges, Status::kUnbounded};
  const double raw = std::floor((xi0 / params.threshold_field - 1.0) / alpha);
  if (raw >= static_cast<double>(params.max_bridges)) {
    return {params.max_bridges, Status::kUnbounded};
  }
  if (raw < 1.0) return {0, Status::kNoHeal};
  return {static_cast<std::uint64_t>(raw), Status::kHealed};
}

double total_heal_time(const Params& params, std::uint64_t bridges) {
  params.validate();
  const double m = static_cast<double>(bridges);
  const double a = params.load_ratio();
  // sum_{j=0..m} (j a + 1)^2 = (m+1) + a m(m+1) + a^2 m(m+1)(2m+1)/6
  const double s0 = m + 1.0;
  const double s1 = m * (m + 1.0) / 2.0;
  const double s2 = m * (m + 1.0) * (2.0 * m + 1.0) / 6.0;
  const double xi0 = params.nominal_field();
  return params.lambda / (xi0 * xi0) * (s0 + 2.0 * a * s1 + a * a * s2);
}

double total_heal_time(const Params& params) {
  const auto count = bridge_count(params);
  if (count.bridges == 0) {
    throw Error(ErrorCode::kInvalidArgument, "no heal possible: m = 0");
  }
  return total_heal_time(params, count.bridges);
}

HealedMetrics healed_metrics(const Params& params) {
  const auto count = bridge_count(params);
  if (count.bridges == 0) {
    return {0, std::numeric_limits<double>::infinity(), 0.0, Status::kNoHeal};
  }
  const double m = static_cast<double>(count.bridges);
  const double current =
      (params.voltage / params.z_bridge) / (params.load_ratio() + 1.0 / m);
  return {count.bridges, params.z_bridge / m, current, count.status};
}

std::vector<RatioPoint> heal_ratio_curve(const Params& base,
                                         std::span<const double> terminal) {
  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
  std::vector<RatioPoint> curve;
  curve.reserve(terminal.size());
  for (const double z : terminal) {
    Params p = base;
    p.z_in = z;
    p.z_out = z;
    const auto metrics = healed_metrics(p);
    RatioPoint point{z, metrics.bridges, kNaN, 0.0, kNaN, metrics.status};
    if (metrics.bridges > 0) {
      point.heal_time = total_heal_time(p, metrics.bridges);
      point.current = metrics.current;
      point.ratio = point.heal_time / point.current;
    }
    curve.push_back(point);
  }
  return curve;
}

Result simulate_cascade(const Params& params) {
  params.validate();
  const double z_terminal = params.z_in + params.z_out;
  Result result;
  Accumulator elapsed;
  for (std::uint64_t j = 0; j <= params.max_bridges; ++j) {
    double gap_voltage = params.voltage;
    if (j > 0) {
      const double z_gap = params.z_bridge / static_cast<double>(j);
      gap_voltage = params.voltage * z_gap / (z_gap + z_terminal);
    }
    const double field = gap_voltage / params.gap;
    if (field < params.threshold_field) break;
    const double t = params.lambda / (field * field);
    result.fields.push_back(field);
    result.formation_times.push_back(t);
    elapsed.add(t);
  }

  const auto events = static_cast<std::uint64_t>(result.fields.size());
  if (events < 2) {
    result.status = Status::kNoHeal;
    result.impedance = std::numeric_limits<double>::infinity();
    return result;
  }
  result.bridges = events - 1;
  result.status = result.bridges == params.max_bridges ? Status::kUnbounded
                                                       : Status::kHealed;
  result.total_time = elapsed.value();
  result.impedance = params.z_bridge / static_cast<double>(result.bridges);
  result.current = params.voltage / (z_terminal + result.impedance);
  return result;
}

}  // namespace healsim::cascade
