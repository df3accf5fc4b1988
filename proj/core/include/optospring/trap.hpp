#ifndef OPTOSPRING_TRAP_HPP
#define OPTOSPRING_TRAP_HPP

#include <array>
#include <string>
#include <vector>

#include "optospring/geometry.hpp"

// Crossed-beam optical tweezer: intensity field, gradient-force potential,
// trap frequencies and the rocking ("wobble") frequency of the disk.

namespace optospring {

using Vec3 = std::array<double, 3>;

struct TrapBeams {
  double intensity_x = 0.0; // W/m^2, on-axis intensity of the x-traveling beam
  double intensity_y = 0.0; // W/m^2, on-axis intensity of the y-traveling beam
  double waist_x = 0.0;     // m, w0x
  double waist_y = 0.0;     // m, w0y
  double waist_z = 0.0;     // m, w0z (tight axis)
  double wavelength = 0.0;  // m

  double intensity_noise = 0.0; // relative intensity PSD at 2*omega_z, 1/Hz
  double pointing_noise = 0.0;  // trap-center position PSD at omega_z, m^2/Hz
  double beam_disk_angle = 0.0; // residual beam/disk-surface angle, rad

  // Rayleigh ranges pi w0^2 / lambda, always derived, never stored.
  double rayleigh_x() const;
  double rayleigh_y() const;
  double rayleigh_z() const;

  void validate() const; // throws std::invalid_argument
};

// Non-fatal validity notes for the "field varies little over the disk"
// approximation (h < w0z, d < x_r, d < y_r). Empty when all hold.
std::vector<std::string> field_variation_warnings(const TrapBeams& beams,
                                                  const DiskMirror& disk);

// Two-term elliptical-Gaussian intensity, both divergence denominators kept.
double beam_intensity(const Vec3& r, const TrapBeams& beams);

// Gradient-force potential -alpha_perp I(r) / (2 eps0 c). Both beams are
// polarized in the disk plane, so the in-plane polarizability applies.
double optical_potential(const Vec3& r, const TrapBeams& beams, const Polarizability& pol);

// V(origin) - V(z -> inf) along the cavity axis.
double trap_depth_z(const TrapBeams& beams, const Polarizability& pol);

// sqrt(2 alpha_perp (I0x + I0y) / (m c eps0 w0z^2))
double axial_frequency(const TrapBeams& beams, const Polarizability& pol,
                       const DiskMirror& disk);

struct TransverseFrequencies {
  double x = 0.0;
  double y = 0.0;
};

// No closed form is used: the in-plane curvatures mix the transverse
// Gaussian profile of one beam with the divergence of the other, so the
// frequencies come from a Richardson-extrapolated central second
// difference of the potential at the origin (step 1e-3 of the waist).
// Throws std::domain_error("untrapped axis ...") on negative curvature.
TransverseFrequencies transverse_frequencies(const TrapBeams& beams,
                                             const Polarizability& pol,
                                             const DiskMirror& disk);

// sqrt(12 I0y (alpha_perp - alpha_axial) / (eps0 c I_x)); only the
// y-traveling beam supplies the restoring torque in this estimate.
double wobble_frequency(const TrapBeams& beams, const Polarizability& pol,
                        const DiskMirror& disk);

struct TrapCharacterization {
  double omega_z = 0.0;   // 1/s
  double omega_x = 0.0;   // 1/s
  double omega_y = 0.0;   // 1/s
  double omega_wob = 0.0; // 1/s
  double trap_depth = 0.0; // J
};

TrapCharacterization characterize_trap(const TrapBeams& beams, const Polarizability& pol,
                                       const DiskMirror& disk);

} // namespace optospring

#endif
