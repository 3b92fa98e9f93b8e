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

// Timescales of field-driven chaining.
//
// Rod alignment:    eta R L^2 dtheta/dt = -p xi sin(theta)
// Sphere approach:  eta R dx/dt = -g p^2 / (eps_f x^4)
//
// Both right-hand sides carry p ~ xi, so every timescale here goes as xi^-2.
// The order-one coefficient g of the approach law is explicit: 1 is the bare
// scaling law, kPointDipoleStokes matches two point dipoles on the field
// axis under Stokes drag 6 pi eta R (what sim::Simulation integrates).

#ifndef HEALSIM_KINETICS_HPP_
#define HEALSIM_KINETICS_HPP_

#include <cstddef>
#include <span>

#include "healsim/model.hpp"

namespace healsim::kinetics {

/// Relative approach coefficient of an on-axis pair: force 6p^2/(4 pi eps x^4)
/// on each sphere, both moving with mobility 1/(6 pi eta R).
inline constexpr double kPointDipoleStokes = 1.0 / (2.0 * kPi * kPi);

inline constexpr double kDefaultAlignedAngle = 0.05;         // rad
inline constexpr double kDefaultInitialAngle = kPi / 2.0;    // rad
inline constexpr double kDefaultContactGapFraction = 0.05;   // delta / R

/// k = p xi / (eta R L^2) in 1/s for a rod.
double alignment_rate(const ParticleSpec& rod, const FluidSpec& fluid,
                      double field);

/// t = ln(tan(theta0/2) / tan(theta_f/2)) / k, requires 0 < theta_f < theta0 < pi.
double rod_alignment_time(double rate, double theta0, double theta_f);

double rod_alignment_time(const ParticleSpec& rod, const FluidSpec& fluid,
                          double field, double theta0 = kDefaultInitialAngle,
                          double theta_f = kDefaultAlignedAngle);

/// C = g p^2 / (eps_f eta R) in m^5/s, so that dx/dt = -C / x^4.
double approach_coefficient(const ParticleSpec& sphere, const FluidSpec& fluid,
                            double field, double prefactor = 1.0);

/// Default contact distance 2R + delta, delta = 0.05 R.
double contact_distance(const ParticleSpec& sphere);

/// (x0^5 - xc^5) / (5 C); zero when x0 <= xc.
double sphere_pair_contact_time(double coefficient, double x0,
                                double contact_distance);

double sphere_pair_contact_time(const ParticleSpec& sphere,
                                const FluidSpec& fluid, double field,
                                double x0, double prefactor = 1.0);

/// Dropped order-one coefficients of the repair-time law.
struct Calibration {
  double sphere = 1.0;
  double rod = 1.0;
};

struct RepairEstimate {
  double lambda = 0.0;  // V^2 s / m^2
  double time = 0.0;    // s
};

/// lambda = kappa (eta/eps_f)(d0/R_S)^5 for dispersions containing spheres,
/// kappa_rod (eta/eps_f) for rod-only ones; time = lambda / xi^2.
RepairEstimate repair_time_estimate(const DispersionSpec& dispersion,
                                    double field,
                                    const Calibration& calibration = {});

/// Returns `base` with the relevant kappa set so that repair_time_estimate
/// reproduces `measured_time` at `field`.
Calibration calibrate(const DispersionSpec& dispersion, double field,
                      double measured_time, Calibration base = {});

struct FieldTime {
  double field = 0.0;  // V/m
  double time = 0.0;   // s
};

struct PowerLawFit {
  double amplitude = 0.0;  // lambda-hat
  double exponent = 0.0;   // n-hat
  double residual = 0.0;   // 2-norm of ln-space residuals
  std::size_t points = 0;
};

/// Ordinary least squares of ln t = ln lambda + n ln xi.
PowerLawFit fit_power_law(std::span<const FieldTime> data);

}  // namespace healsim::kinetics

#endif  // HEALSIM_KINETICS_HPP_
