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

// Physical description of a conductive-particle dispersion and the gap it
// heals. Everything is SI internally: metres, seconds, volts, pascal-seconds,
// kg/m^3. Note that a mass concentration in mg/ml is numerically equal to
// kg/m^3, so descriptor files can pass it straight through.

#ifndef HEALSIM_MODEL_HPP_
#define HEALSIM_MODEL_HPP_

#include <numbers>
#include <string_view>
#include <vector>

namespace healsim {

inline constexpr double kVacuumPermittivity = 8.8541878128e-12;  // F/m
inline constexpr double kBoltzmann = 1.380649e-23;               // J/K
inline constexpr double kPi = std::numbers::pi;

// Default densities; both are configuration inputs, never baked into a model.
inline constexpr double kCopperDensity = 8960.0;    // kg/m^3
inline constexpr double kNanotubeDensity = 1300.0;  // kg/m^3

/// Insulating carrier fluid.
struct FluidSpec {
  double viscosity = 0.0;   // Pa s
  double epsilon_r = 1.0;   // relative permittivity

  /// Absolute permittivity epsilon_r * epsilon_0 in F/m.
  double permittivity() const { return epsilon_r * kVacuumPermittivity; }
  void validate() const;
};

enum class Shape { kSphere, kRod };

std::string_view to_string(Shape shape);
Shape shape_from_string(std::string_view name);

/// Geometry and material of one dispersed conductive particle. For a sphere
/// `radius` is R_S and `length` is unused; for a rod `radius` is the
/// cross-section radius and `length` the tip-to-tip length.
struct ParticleSpec {
  Shape shape = Shape::kSphere;
  double radius = 0.0;   // m
  double length = 0.0;   // m, rods only
  double density = 0.0;  // kg/m^3

  static ParticleSpec sphere(double radius, double density);
  static ParticleSpec rod(double radius, double length, double density);

  /// Solid volume; rods use the equivalent cylinder pi R^2 L.
  double volume() const;
  void validate() const;
};

/// One population in a (possibly composite) dispersion.
struct Species {
  ParticleSpec particle;
  double concentration = 0.0;  // kg/m^3 (== mg/ml)
};

struct DispersionSpec {
  FluidSpec fluid;
  std::vector<Species> species;

  void validate() const;
};

/// Fractured route: gap length, electrode width and the voltage that appears
/// across the gap when it opens.
struct GapGeometry {
  double gap = 0.0;      // D, m
  double width = 0.0;    // W, m
  double voltage = 0.0;  // V0, V

  double nominal_field() const { return voltage / gap; }
  void validate() const;
};

/// Solid volume fraction sum(c_i / rho_i). Throws kUnphysical when the
/// result reaches 0.5, which no homogeneous dispersion can sustain.
double volume_fraction(const DispersionSpec& dispersion);

/// Number density (1/m^3) of a single species.
double number_density(const Species& species);

/// Mean centre-to-centre spacing d0 = n^(-1/3) of a uniform cubic-cell
/// arrangement. Spheres set the spacing when any are present; a rod-only
/// dispersion falls back to the rod number density with the cylinder volume.
/// For a single sphere species this is (4 pi R^3 / (3 phi))^(1/3).
double mean_spacing(const DispersionSpec& dispersion);

/// The particle whose translation dominates repair: the first sphere species,
/// otherwise the first species.
const ParticleSpec& dominant_particle(const DispersionSpec& dispersion);

/// Axial polarizability enhancement of a conducting prolate spheroid with
/// semi-axes L/2 and R, relative to a sphere of the same product a*b^2.
/// Equals 1 for a sphere and grows roughly like (L/2R)^2 / ln(L/R).
double rod_enhancement(const ParticleSpec& rod);

/// Induced point-dipole moment (C m) of a conducting particle in field xi.
///   sphere: p = 4 pi eps_f R^3 xi
///   rod:    p = 4 pi eps_f (L/2) R^2 xi * rod_enhancement
double induced_dipole(const ParticleSpec& particle, const FluidSpec& fluid,
                      double field);

}  // namespace healsim

#endif  // HEALSIM_MODEL_HPP_
