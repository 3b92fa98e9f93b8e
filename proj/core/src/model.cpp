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

#include "healsim/model.hpp"

#include <cmath>
#include <string>

#include "healsim/error.hpp"

namespace healsim {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kUnphysical: return "unphysical";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kSchema: return "schema";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kNotConverged: return "not_converged";
    case ErrorCode::kNumerical: return "numerical";
  }
  return "unknown";
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

}  // namespace

void FluidSpec::validate() const {
  require(viscosity > 0.0, "fluid viscosity must be > 0");
  require(epsilon_r >= 1.0, "fluid relative permittivity must be >= 1");
}

std::string_view to_string(Shape shape) {
  return shape == Shape::kSphere ? "sphere" : "rod";
}

Shape shape_from_string(std::string_view name) {
  if (name == "sphere") return Shape::kSphere;
  if (name == "rod") return Shape::kRod;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown particle shape '" + std::string(name) + "'");
}

ParticleSpec ParticleSpec::sphere(double radius, double density) {
  return {Shape::kSphere, radius, 0.0, density};
}

ParticleSpec ParticleSpec::rod(double radius, double length, double density) {
  return {Shape::kRod, radius, length, density};
}

double ParticleSpec::volume() const {
  if (shape == Shape::kSphere) return 4.0 / 3.0 * kPi * radius * radius * radius;
  return kPi * radius * radius * length;
}

void ParticleSpec::validate() const {
  require(radius > 0.0, "particle radius must be > 0");
  require(density > 0.0, "particle density must be > 0");
  if (shape == Shape::kRod) {
    require(length > 2.0 * radius, "rod length must exceed its diameter");
  }
}

void DispersionSpec::validate() const {
  fluid.validate();
  require(!species.empty(), "dispersion needs at least one particle species");
  for (const auto& s : species) {
    s.particle.validate();
    require(s.concentration >= 0.0, "concentration must be >= 0");
  }
}

void GapGeometry::validate() const {
  require(gap > 0.0, "gap length must be > 0");
  require(width > 0.0, "electrode width must be > 0");
  require(voltage >= 0.0, "gap voltage must be >= 0");
}

double volume_fraction(const DispersionSpec& dispersion) {
  double phi = 0.0;
  for (const auto& s : dispersion.species) {
    require(s.concentration >= 0.0, "concentration must be >= 0");
    require(s.particle.density > 0.0, "particle density must be > 0");
    phi += s.concentration / s.particle.density;
  }
  if (phi >= 0.5) {
    throw Error(ErrorCode::kUnphysical,
                "unphysical concentration: volume fraction " +
                    std::to_string(phi) + " >= 0.5");
  }
  return phi;
}

double number_density(const Species& species) {
  return species.concentration / species.particle.density /
         species.particle.volume();
}

double mean_spacing(const DispersionSpec& dispersion) {
  volume_fraction(dispersion);  // rejects unphysical input
  bool any_sphere = false;
  for (const auto& s : dispersion.species) {
    any_sphere = any_sphere || s.particle.shape == Shape::kSphere;
  }
  double n = 0.0;
  for (const auto& s : dispersion.species) {
    if (any_sphere && s.particle.shape != Shape::kSphere) continue;
    n += number_density(s);
  }
  if (!(n > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "infinite spacing: dispersion has no particles");
  }
  return std::cbrt(1.0 / n);
}

const ParticleSpec& dominant_particle(const DispersionSpec& dispersion) {
  require(!dispersion.species.empty(), "dispersion has no species");
  for (const auto& s : dispersion.species) {
    if (s.particle.shape == Shape::kSphere) return s.particle;
  }
  return dispersion.species.front().particle;
}

double rod_enhancement(const ParticleSpec& rod) {
  if (rod.shape == Shape::kSphere) return 1.0;
  const double a = 0.5 * rod.length;
  const double b = rod.radius;
  const double e2 = 1.0 - (b * b) / (a * a);
  const double e = std::sqrt(e2);
  // Depolarization factor along the long axis of a prolate spheroid.
  double depol;
  if (e < 1e-4) {
    depol = 1.0 / 3.0 - 2.0 * e2 / 15.0;
  } else {
    depol = (1.0 - e2) / e2 * (std::atanh(e) / e - 1.0);
  }
  return 1.0 / (3.0 * depol);
}

double induced_dipole(const ParticleSpec& particle, const FluidSpec& fluid,
                      double field) {
  require(field >= 0.0, "field magnitude must be >= 0");
  const double four_pi_eps = 4.0 * kPi * fluid.permittivity();
  const double r = particle.radius;
  if (particle.shape == Shape::kSphere) {
    return four_pi_eps * r * r * r * field;
  }
  return four_pi_eps * 0.5 * particle.length * r * r * field *
         rod_enhancement(particle);
}

}  // namespace healsim
