#include "optospring/cavity.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "optospring/constants.hpp"
#include "optospring/parallel.hpp"

namespace optospring {

namespace {
constexpr double pi = constants::pi;
constexpr double c0 = constants::speed_of_light;
} // namespace

double CavityConfig::resonance_frequency() const { return 2.0 * pi * c0 / wavelength; }

void CavityConfig::validate() const {
  if (!(length > 0.0)) throw std::invalid_argument("cavity: length must be > 0");
  if (!(fixed_reflectivity > 0.0 && fixed_reflectivity < 1.0))
    throw std::invalid_argument("cavity: fixed mirror reflectivity must be in (0, 1)");
  if (!(moving_reflectivity > 0.0 && moving_reflectivity < 1.0))
    throw std::invalid_argument("cavity: moving mirror reflectivity must be in (0, 1)");
  if (!(wavelength > 0.0)) throw std::invalid_argument("cavity: wavelength must be > 0");
  if (!(input_power >= 0.0)) throw std::invalid_argument("cavity: input power must be >= 0");
  if (!(linewidth >= 0.0)) throw std::invalid_argument("cavity: laser linewidth must be >= 0");
}

double cavity_finesse(const CavityConfig& cavity) {
  const double product = cavity.fixed_reflectivity * cavity.moving_reflectivity;
  const double loss = 1.0 - std::sqrt(product);
  if (loss < 1e-12)
    throw std::domain_error("lossless cavity: finesse overflows as Rf*Rm -> 1");
  return pi * std::pow(product, 0.25) / loss;
}

double cavity_linewidth(const CavityConfig& cavity) {
  return pi * c0 / (cavity_finesse(cavity) * cavity.length);
}

double min_phonon_number(double detuning, double omega_z, double kappa) {
  if (!(omega_z > 0.0)) throw std::domain_error("min_phonon_number: omega_z must be > 0");
  if (!(kappa > 0.0)) throw std::domain_error("min_phonon_number: kappa must be > 0");
  if (!(detuning < 0.0))
    throw std::domain_error("not in cooling regime: detuning must be negative (red)");
  const double s = detuning + omega_z;
  return -(4.0 * s * s + kappa * kappa) / (16.0 * omega_z * detuning);
}

double optimal_detuning(double omega_z, double kappa) {
  if (!(omega_z > 0.0 && kappa > 0.0))
    throw std::domain_error("optimal_detuning: omega_z and kappa must be > 0");
  return -std::sqrt(omega_z * omega_z + 0.25 * kappa * kappa);
}

namespace {

// Spectral weight of the upper (+) / lower (-) motional sideband seen
// through the phase-diffusion-broadened drive.
double sideband_weight(double detuning, double laser_linewidth, double omega_z,
                       double kappa, double sign) {
  const double s = detuning + sign * omega_z;
  const double broadened = 2.0 * laser_linewidth + kappa;
  const double num = (laser_linewidth + kappa) * broadened * broadened +
                     2.0 * laser_linewidth * (s * s + detuning * detuning) +
                     kappa * omega_z * omega_z;
  const double den = broadened * broadened + 4.0 * s * s;
  return num / den;
}

} // namespace

double cooling_rate(double detuning, double laser_linewidth, double omega_z,
                    double kappa, double input_power, double mass, double length,
                    double cavity_omega) {
  if (!(mass > 0.0)) throw std::domain_error("cooling_rate: mass must be > 0");
  if (!(length > 0.0)) throw std::domain_error("cooling_rate: length must be > 0");
  if (!(omega_z > 0.0)) throw std::domain_error("cooling_rate: omega_z must be > 0");
  if (!(kappa > 0.0)) throw std::domain_error("cooling_rate: kappa must be > 0");

  const double lower = sideband_weight(detuning, laser_linewidth, omega_z, kappa, -1.0);
  const double upper = sideband_weight(detuning, laser_linewidth, omega_z, kappa, +1.0);
  const double broadened = 2.0 * laser_linewidth + kappa;
  const double prefactor = cavity_omega * kappa / (mass * omega_z * length * length);
  // leading minus: lower - upper < 0 on the red side, so cooling comes out positive
  return -prefactor * 8.0 * input_power * (lower - upper) /
         ((broadened * broadened + 4.0 * detuning * detuning) *
          (kappa * kappa + omega_z * omega_z));
}

double cooling_rate_phase_noise(const CavityConfig& cavity, double omega_z,
                                double kappa, double mass) {
  return cooling_rate(cavity.detuning, cavity.linewidth, omega_z, kappa,
                      cavity.input_power, mass, cavity.length,
                      cavity.resonance_frequency());
}

CoolingResult cooling_result(const CavityConfig& cavity, double omega_z, double mass) {
  CoolingResult result;
  result.kappa = cavity_linewidth(cavity);
  result.n_min = min_phonon_number(cavity.detuning, omega_z, result.kappa);
  result.gamma_rp = cooling_rate_phase_noise(cavity, omega_z, result.kappa, mass);
  result.gamma_rp_monochromatic =
      cooling_rate(cavity.detuning, 0.0, omega_z, result.kappa, cavity.input_power,
                   mass, cavity.length, cavity.resonance_frequency());
  return result;
}

void SurfaceGrid::validate() const {
  if (n_detuning < 1 || n_linewidth < 1)
    throw std::invalid_argument("surface grid: need at least one point per axis");
  if (!(detuning_hi < 0.0) || !(detuning_lo <= detuning_hi))
    throw std::invalid_argument("surface grid: detunings must be strictly negative, lo <= hi");
  if (!(linewidth_lo >= 0.0) || !(linewidth_lo <= linewidth_hi))
    throw std::invalid_argument("surface grid: linewidths must be >= 0, lo <= hi");
}

double RatioSurface::at(int linewidth_index, int detuning_index) const {
  return ratios[static_cast<std::size_t>(linewidth_index) * detunings.size() +
                static_cast<std::size_t>(detuning_index)];
}

bool RatioSurface::is_defined(int linewidth_index, int detuning_index) const {
  return defined[static_cast<std::size_t>(linewidth_index) * detunings.size() +
                 static_cast<std::size_t>(detuning_index)] != 0;
}

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> values(static_cast<std::size_t>(n));
  if (n == 1) {
    values[0] = lo;
    return values;
  }
  for (int i = 0; i < n; ++i)
    values[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return values;
}

} // namespace

RatioSurface cooling_ratio_surface(const CavityConfig& cavity, double omega_z,
                                   double kappa, double mass, const SurfaceGrid& grid) {
  grid.validate();
  RatioSurface surface;
  surface.detunings = linspace(grid.detuning_lo, grid.detuning_hi, grid.n_detuning);
  surface.linewidths = linspace(grid.linewidth_lo, grid.linewidth_hi, grid.n_linewidth);
  const std::size_t cells =
      surface.detunings.size() * surface.linewidths.size();
  surface.ratios.assign(cells, 0.0);
  surface.defined.assign(cells, 0);

  const double omega_c = cavity.resonance_frequency();
  const std::int64_t rows = grid.n_linewidth;
  parallel_for(rows, [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t i = begin; i < end; ++i) {
      const double laser_linewidth = surface.linewidths[static_cast<std::size_t>(i)] * kappa;
      for (std::size_t j = 0; j < surface.detunings.size(); ++j) {
        const double detuning = surface.detunings[j] * kappa;
        const double mono = cooling_rate(detuning, 0.0, omega_z, kappa,
                                         cavity.input_power, mass, cavity.length, omega_c);
        const std::size_t cell = static_cast<std::size_t>(i) * surface.detunings.size() + j;
        if (mono == 0.0) {
          surface.ratios[cell] = std::numeric_limits<double>::quiet_NaN();
          surface.defined[cell] = 0;
        } else {
          surface.ratios[cell] =
              cooling_rate(detuning, laser_linewidth, omega_z, kappa,
                           cavity.input_power, mass, cavity.length, omega_c) /
              mono;
          surface.defined[cell] = 1;
        }
      }
    }
  });
  return surface;
}

} // namespace optospring
