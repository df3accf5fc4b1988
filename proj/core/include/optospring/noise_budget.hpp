#ifndef OPTOSPRING_NOISE_BUDGET_HPP
#define OPTOSPRING_NOISE_BUDGET_HPP

#include <string>
#include <utility>
#include <vector>

#include "optospring/cavity.hpp"
#include "optospring/geometry.hpp"
#include "optospring/trap.hpp"

// Heating/damping channels and the final phonon-number budget.

namespace optospring {

struct Environment {
  double pressure = 0.0;    // Pa
  double gas_mass = 0.0;    // kg per molecule
  double temperature = 0.0; // K

  void validate() const; // throws std::invalid_argument
};

// Parametric heating from relative intensity noise: omega_z^2 S_I(2 omega_z) / 4.
double intensity_heating_rate(double omega_z, double intensity_noise);

struct PointingHeating {
  // The trap-center-fluctuation expression omega_z^4 m S_x(omega_z) / 4
  // carries units of power. The quanta-rate reading (power / hbar omega_z)
  // is reported alongside but is not commensurate with the parametric
  // rates; budgets never fold it into the mechanical damping.
  double power = 0.0;       // W
  double quanta_rate = 0.0; // 1/s, caveat above
};

PointingHeating pointing_heating_rate(double omega_z, double mass, double pointing_noise);

struct ScatterEstimate {
  // Per-photon-kick convention: the z-momentum kick of one grazing photon,
  // hbar k theta, squared (times 2 for the two faces) over 2 m hbar omega_z.
  // Zero when no trap light or no misalignment. The geometric-flux
  // diffusion construction (multiply by the face photon flux) is kept as a
  // diagnostic; it is dominated by the kilowatt-scale trap power and is
  // not used in the budget.
  double rate = 0.0;           // 1/s, per-photon convention
  double photon_flux = 0.0;    // 1/s through the disk face
  double diffusion_rate = 0.0; // 1/s, flux-multiplied diagnostic
};

ScatterEstimate scattering_momentum_rate(const TrapBeams& beams, const DiskMirror& disk,
                                         double omega_z);

// Background-gas momentum exchange: 4 P A / (m v), v the rms thermal speed.
double gas_damping_rate(const Environment& env, const DiskMirror& disk);

// Residual occupation from the thermal contact: gamma_m n_R / (gamma_rp + gamma_m),
// n_R = kB T / (hbar omega_z).
double thermal_correction(double gamma_mechanical, double gamma_rp, double omega_z,
                          double temperature);

struct NoiseBudgetReport {
  // trap
  double omega_z = 0.0;
  double omega_x = 0.0;
  double omega_y = 0.0;
  double omega_wob = 0.0;
  double trap_depth = 0.0;
  double alpha_perp = 0.0;
  double alpha_z = 0.0;
  double moment_of_inertia = 0.0;
  // cavity
  double finesse = 0.0;
  double kappa = 0.0;
  double cavity_omega = 0.0;
  double detuning = 0.0;
  double n_min = 0.0;
  double gamma_rp = 0.0;
  double gamma_rp_monochromatic = 0.0;
  // noise channels
  double gamma_intensity = 0.0;  // enters gamma_mechanical
  double gamma_gas = 0.0;        // enters gamma_mechanical
  double gamma_mechanical = 0.0; // gamma_intensity + gamma_gas, nothing else
  double pointing_power = 0.0;
  double pointing_quanta_rate = 0.0;
  double scatter_rate = 0.0;
  double photon_flux = 0.0;
  double scatter_diffusion_rate = 0.0;
  // occupation
  double n_thermal = 0.0; // kB T / (hbar omega_z)
  double thermal_corr = 0.0;
  double n_final = 0.0; // n_min + thermal_corr; NaN when no_net_cooling

  bool no_net_cooling = false;

  std::vector<std::pair<std::string, std::string>> provenance;
  std::vector<std::string> warnings;
};

NoiseBudgetReport full_budget(const DiskMirror& disk, const TrapBeams& beams,
                              const CavityConfig& cavity, const Environment& env);

} // namespace optospring

#endif
