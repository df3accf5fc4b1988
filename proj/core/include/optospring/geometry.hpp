#ifndef OPTOSPRING_GEOMETRY_HPP
#define OPTOSPRING_GEOMETRY_HPP

// Effective-spheroid model of the levitated Bragg disk: volume, mass,
// eccentricity, static polarizabilities and the rocking moment of inertia.

namespace optospring {

struct DiskMirror {
  double diameter = 0.0;              // m
  double height = 0.0;                // m, must be < diameter (oblate)
  double mass = 0.0;                  // kg, independent input, not derived
  double relative_permittivity = 1.0; // effective slab value
  double reflectivity = 1.0;          // at the cavity wavelength

  // Cylinder volume; the spheroid polarizability formula is applied to it.
  double volume() const;
  double face_area() const; // pi (d/2)^2

  void validate() const; // throws std::invalid_argument
};

struct Polarizability {
  double perpendicular = 0.0; // C m^2 / V, field in the disk plane
  double axial = 0.0;         // C m^2 / V, field along the disk axis
};

struct DepolarizationFactors {
  double axial = 1.0 / 3.0;
  double transverse = 1.0 / 3.0;
};

// e = sqrt((d/h)^2 - 1); throws std::domain_error unless d > h.
double disk_eccentricity(const DiskMirror& disk);

// Oblate-spheroid factors: N_axial = (1+e^2)(e - atan e)/e^3,
// N_transverse = (1 - N_axial)/2. A convergent small-e expansion is used
// below e = 0.05 where the closed form loses digits to cancellation.
DepolarizationFactors depolarization_factors(double eccentricity);

// alpha = eps0 V (eps_r - 1) / (1 + N (eps_r - 1)) per axis.
Polarizability static_polarizability(const DiskMirror& disk);

// Effective rocking inertia about an in-plane axis: m (3 d^2/4 + h^2).
// Pairs with the torque normalization in wobble_frequency().
double moment_of_inertia_x(const DiskMirror& disk);

} // namespace optospring

#endif
