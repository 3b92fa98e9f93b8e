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

#include "healsim/kinetics.hpp"

#include <cmath>

#include "healsim/error.hpp"

namespace healsim::kinetics {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

double pow5(double x) {
  const double x2 = x * x;
  return x2 * x2 * x;
}

}  // namespace

double alignment_rate(const ParticleSpec& rod, const FluidSpec& fluid,
                      double field) {
  require(rod.shape == Shape::kRod, "alignment rate needs a rod");
  rod.validate();
  fluid.validate();
  require(field > 0.0, "field must be > 0");
  const double p = induced_dipole(rod, fluid, field);
  return p * field / (fluid.viscosity * rod.radius * rod.length * rod.length);
}

double rod_alignment_time(double rate, double theta0, double theta_f) {
  require(rate > 0.0, "alignment rate must be > 0");
  if (theta0 >= kPi || theta_f <= 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "unstable equilibrium, infinite alignment time");
  }
  require(theta_f < theta0, "need theta_f < theta0");
  return std::log(std::tan(0.5 * theta0) / std::tan(0.5 * theta_f)) / rate;
}

double rod_alignment_time(const ParticleSpec& rod, const FluidSpec& fluid,
                          double field, double theta0, double theta_f) {
  return rod_alignment_time(alignment_rate(rod, fluid, field), theta0,
                            theta_f);
}

double approach_coefficient(const ParticleSpec& sphere, const FluidSpec& fluid,
                            double field, double prefactor) {
  require(sphere.shape == Shape::kSphere, "approach law needs a sphere");
  sphere.validate();
  fluid.validate();
  require(field > 0.0, "field must be > 0");
  require(prefactor > 0.0, "prefactor must be > 0");
  const double p = induced_dipole(sphere, fluid, field);
  return prefactor * p * p /
         (fluid.permittivity() * fluid.viscosity * sphere.radius);
}

double contact_distance(const ParticleSpec& sphere) {
  return (2.0 + kDefaultContactGapFraction) * sphere.radius;
}

double sphere_pair_contact_time(double coefficient, double x0,
                                double contact_distance) {
  require(coefficient > 0.0, "approach coefficient must be > 0");
  require(contact_distance > 0.0, "contact distance must be > 0");
  if (x0 <= contact_distance) return 0.0;
  return (pow5(x0) - pow5(contact_distance)) / (5.0 * coefficient);
}

double sphere_pair_contact_time(const ParticleSpec& sphere,
                                const FluidSpec& fluid, double field,
                                double x0, double prefactor) {
  return sphere_pair_contact_time(
      approach_coefficient(sphere, fluid, field, prefactor), x0,
      contact_distance(sphere));
}

RepairEstimate repair_time_estimate(const DispersionSpec& dispersion,
                                    double field,
                                    const Calibration& calibration) {
  dispersion.validate();
  require(field > 0.0, "field must be > 0");
  if (!(volume_fraction(dispersion) > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "no particles in dispersion");
  }
  const auto& fluid = dispersion.fluid;
  const double base = fluid.viscosity / fluid.permittivity();
  const auto& particle = dominant_particle(dispersion);
  double lambda;
  if (particle.shape == Shape::kSphere) {
    lambda = calibration.sphere * base *
             pow5(mean_spacing(dispersion) / particle.radius);
  } else {
    lambda = calibration.rod * base;
  }
  return {lambda, lambda / (field * field)};
}

Calibration calibrate(const DispersionSpec& dispersion, double field,
                      double measured_time, Calibration base) {
  require(measured_time > 0.0, "measured time must be > 0");
  Calibration unit = base;
  unit.sphere = 1.0;
  unit.rod = 1.0;
  const double bare = repair_time_estimate(dispersion, field, unit).time;
  if (dominant_particle(dispersion).shape == Shape::kSphere) {
    base.sphere = measured_time / bare;
  } else {
    base.rod = measured_time / bare;
  }
  return base;
}

PowerLawFit fit_power_law(std::span<const FieldTime> data) {
  if (data.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "power-law fit needs at least 2 points");
  }
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& d : data) {
    if (!(d.field > 0.0) || !(d.time > 0.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "power-law fit needs positive field and time values");
    }
    mean_x += std::log(d.field);
    mean_y += std::log(d.time);
  }
  const double n = static_cast<double>(data.size());
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& d : data) {
    const double dx = std::log(d.field) - mean_x;
    sxx += dx * dx;
    sxy += dx * (std::log(d.time) - mean_y);
  }
  if (!(sxx > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "power-law fit needs at least two distinct fields");
  }
  const double slope = sxy / sxx;
  const double intercept = mean_y - slope * mean_x;
  double ss = 0.0;
  for (const auto& d : data) {
    const double r =
        std::log(d.time) - (intercept + slope * std::log(d.field));
    ss += r * r;
  }
  return {std::exp(intercept), slope, std::sqrt(ss), data.size()};
}

}  // namespace healsim::kinetics
