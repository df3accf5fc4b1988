#include "optospring/trap.hpp"

#include <cmath>
#include <stdexcept>

#include "optospring/constants.hpp"

namespace optospring {

namespace {
constexpr double pi = constants::pi;
constexpr double c0 = constants::speed_of_light;
constexpr double eps0 = constants::vacuum_permittivity;
} // namespace

double TrapBeams::rayleigh_x() const { return pi * waist_x * waist_x / wavelength; }
double TrapBeams::rayleigh_y() const { return pi * waist_y * waist_y / wavelength; }
double TrapBeams::rayleigh_z() const { return pi * waist_z * waist_z / wavelength; }

void TrapBeams::validate() const {
  if (!(intensity_x >= 0.0) || !(intensity_y >= 0.0))
    throw std::invalid_argument("beams: intensities must be non-negative");
  if (!(waist_x > 0.0 && waist_y > 0.0 && waist_z > 0.0))
    throw std::invalid_argument("beams: waists must be > 0");
  if (!(wavelength > 0.0)) throw std::invalid_argument("beams: wavelength must be > 0");
  if (!(intensity_noise >= 0.0))
    throw std::invalid_argument("beams: intensity noise PSD must be >= 0");
  if (!(pointing_noise >= 0.0))
    throw std::invalid_argument("beams: pointing noise PSD must be >= 0");
  if (!(beam_disk_angle >= 0.0))
    throw std::invalid_argument("beams: beam/disk angle must be >= 0");
}

std::vector<std::string> field_variation_warnings(const TrapBeams& beams,
                                                  const DiskMirror& disk) {
  std::vector<std::string> warnings;
  if (disk.height >= beams.waist_z)
    warnings.push_back("disk height is not small compared with the axial waist; "
                       "the rigid-dipole trap model degrades");
  if (disk.diameter >= beams.rayleigh_x())
    warnings.push_back("disk diameter reaches the x-waist Rayleigh range; "
                       "beam divergence varies across the disk");
  if (disk.diameter >= beams.rayleigh_y())
    warnings.push_back("disk diameter reaches the y-waist Rayleigh range; "
                       "beam divergence varies across the disk");
  return warnings;
}

double beam_intensity(const Vec3& r, const TrapBeams& beams) {
  const double x = r[0], y = r[1], z = r[2];
  const double xr = beams.rayleigh_x();
  const double yr = beams.rayleigh_y();
  const double zr = beams.rayleigh_z();

  // beam traveling along x: transverse profile in (y, z), diverges with x
  const double gx1 = 1.0 + x * x / (yr * yr);
  const double gx2 = 1.0 + x * x / (zr * zr);
  const double tx = beams.intensity_x *
                    std::exp(-2.0 * y * y / (beams.waist_y * beams.waist_y * gx1) -
                             2.0 * z * z / (beams.waist_z * beams.waist_z * gx2)) /
                    std::sqrt(gx1 * gx2);

  // beam traveling along y: transverse profile in (x, z), diverges with y
  const double gy1 = 1.0 + y * y / (xr * xr);
  const double gy2 = 1.0 + y * y / (zr * zr);
  const double ty = beams.intensity_y *
                    std::exp(-2.0 * x * x / (beams.waist_x * beams.waist_x * gy1) -
                             2.0 * z * z / (beams.waist_z * beams.waist_z * gy2)) /
                    std::sqrt(gy1 * gy2);

  return tx + ty;
}

double optical_potential(const Vec3& r, const TrapBeams& beams, const Polarizability& pol) {
  return -pol.perpendicular * beam_intensity(r, beams) / (2.0 * eps0 * c0);
}

double trap_depth_z(const TrapBeams& beams, const Polarizability& pol) {
  return pol.perpendicular * (beams.intensity_x + beams.intensity_y) / (2.0 * eps0 * c0);
}

double axial_frequency(const TrapBeams& beams, const Polarizability& pol,
                       const DiskMirror& disk) {
  const double itot = beams.intensity_x + beams.intensity_y;
  return std::sqrt(2.0 * pol.perpendicular * itot /
                   (disk.mass * c0 * eps0 * beams.waist_z * beams.waist_z));
}

namespace {

// Richardson-extrapolated central second difference along one axis.
double curvature_at_origin(const TrapBeams& beams, const Polarizability& pol,
                           int axis, double step) {
  const auto second = [&](double h) {
    Vec3 plus{0.0, 0.0, 0.0}, minus{0.0, 0.0, 0.0};
    plus[static_cast<std::size_t>(axis)] = h;
    minus[static_cast<std::size_t>(axis)] = -h;
    const double v0 = optical_potential({0.0, 0.0, 0.0}, beams, pol);
    return (optical_potential(plus, beams, pol) - 2.0 * v0 +
            optical_potential(minus, beams, pol)) /
           (h * h);
  };
  return (4.0 * second(0.5 * step) - second(step)) / 3.0;
}

} // namespace

TransverseFrequencies transverse_frequencies(const TrapBeams& beams,
                                             const Polarizability& pol,
                                             const DiskMirror& disk) {
  const double kx = curvature_at_origin(beams, pol, 0, 1e-3 * beams.waist_x);
  const double ky = curvature_at_origin(beams, pol, 1, 1e-3 * beams.waist_y);
  if (kx < 0.0) throw std::domain_error("untrapped axis x: negative curvature at origin");
  if (ky < 0.0) throw std::domain_error("untrapped axis y: negative curvature at origin");
  return {std::sqrt(kx / disk.mass), std::sqrt(ky / disk.mass)};
}

double wobble_frequency(const TrapBeams& beams, const Polarizability& pol,
                        const DiskMirror& disk) {
  const double anisotropy = pol.perpendicular - pol.axial;
  if (anisotropy < 0.0)
    throw std::domain_error("wobble_frequency: in-plane polarizability must be >= axial");
  return std::sqrt(12.0 * beams.intensity_y * anisotropy /
                   (eps0 * c0 * moment_of_inertia_x(disk)));
}

TrapCharacterization characterize_trap(const TrapBeams& beams, const Polarizability& pol,
                                       const DiskMirror& disk) {
  const TransverseFrequencies t = transverse_frequencies(beams, pol, disk);
  return {axial_frequency(beams, pol, disk), t.x, t.y,
          wobble_frequency(beams, pol, disk), trap_depth_z(beams, pol)};
}

} // namespace optospring
