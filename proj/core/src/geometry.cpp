#include "optospring/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "optospring/constants.hpp"

namespace optospring {

double DiskMirror::volume() const {
  return constants::pi * 0.25 * diameter * diameter * height;
}

double DiskMirror::face_area() const {
  return constants::pi * 0.25 * diameter * diameter;
}

void DiskMirror::validate() const {
  if (!(diameter > 0.0)) throw std::invalid_argument("disk: diameter must be > 0");
  if (!(height > 0.0)) throw std::invalid_argument("disk: height must be > 0");
  if (!(diameter > height))
    throw std::invalid_argument("disk: diameter must exceed height (oblate geometry)");
  if (!(mass > 0.0)) throw std::invalid_argument("disk: mass must be > 0");
  if (!(relative_permittivity >= 1.0))
    throw std::invalid_argument("disk: relative permittivity must be >= 1");
  if (!(reflectivity > 0.0 && reflectivity <= 1.0))
    throw std::invalid_argument("disk: reflectivity must be in (0, 1]");
}

double disk_eccentricity(const DiskMirror& disk) {
  const double ratio = disk.diameter / disk.height;
  if (!(ratio > 1.0))
    throw std::domain_error("eccentricity: need diameter > height (prolate case unsupported)");
  return std::sqrt(ratio * ratio - 1.0);
}

namespace {

// N_axial = (1+e^2)(e - atan e)/e^3
//         = 1/3 + 2 sum_{k>=1} (-1)^{k+1} e^{2k} / ((2k+1)(2k+3))
// The alternating series converges fast for e < 0.05 and avoids the
// e - atan(e) cancellation that costs ~8 digits near e ~ 1e-4.
double axial_factor(double e) {
  if (e < 0.05) {
    const double e2 = e * e;
    double sum = 1.0 / 3.0;
    double power = 1.0;
    double sign = 1.0;
    for (int k = 1; k <= 12; ++k) {
      power *= e2;
      sum += sign * 2.0 * power / ((2.0 * k + 1.0) * (2.0 * k + 3.0));
      sign = -sign;
    }
    return sum;
  }
  return (1.0 + e * e) * (e - std::atan(e)) / (e * e * e);
}

} // namespace

DepolarizationFactors depolarization_factors(double eccentricity) {
  if (eccentricity < 0.0)
    throw std::domain_error("depolarization_factors: eccentricity must be >= 0");
  const double nz = axial_factor(eccentricity);
  return {nz, 0.5 * (1.0 - nz)};
}

Polarizability static_polarizability(const DiskMirror& disk) {
  disk.validate();
  const DepolarizationFactors n = depolarization_factors(disk_eccentricity(disk));
  const double f = disk.relative_permittivity - 1.0;
  const double scale = constants::vacuum_permittivity * disk.volume();
  return {scale * f / (1.0 + n.transverse * f), scale * f / (1.0 + n.axial * f)};
}

double moment_of_inertia_x(const DiskMirror& disk) {
  return disk.mass * (0.75 * disk.diameter * disk.diameter + disk.height * disk.height);
}

} // namespace optospring
