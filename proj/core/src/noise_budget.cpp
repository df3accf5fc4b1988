#include "optospring/noise_budget.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "optospring/constants.hpp"

namespace optospring {

namespace {
constexpr double pi = constants::pi;
constexpr double c0 = constants::speed_of_light;
constexpr double hbar = constants::hbar;
constexpr double kB = constants::boltzmann;
} // namespace

void Environment::validate() const {
  if (!(pressure >= 0.0)) throw std::invalid_argument("environment: pressure must be >= 0");
  if (!(gas_mass > 0.0)) throw std::invalid_argument("environment: gas mass must be > 0");
  if (!(temperature > 0.0))
    throw std::invalid_argument("environment: temperature must be > 0");
}

double intensity_heating_rate(double omega_z, double intensity_noise) {
  if (!(omega_z > 0.0))
    throw std::invalid_argument("intensity_heating_rate: omega_z must be > 0");
  if (!(intensity_noise >= 0.0))
    throw std::invalid_argument("intensity_heating_rate: noise PSD must be >= 0");
  return 0.25 * omega_z * omega_z * intensity_noise;
}

PointingHeating pointing_heating_rate(double omega_z, double mass, double pointing_noise) {
  if (!(omega_z >= 0.0 && mass >= 0.0 && pointing_noise >= 0.0))
    throw std::invalid_argument("pointing_heating_rate: arguments must be >= 0");
  const double w2 = omega_z * omega_z;
  const double power = 0.25 * w2 * w2 * mass * pointing_noise;
  const double quanta = omega_z > 0.0 ? power / (hbar * omega_z) : 0.0;
  return {power, quanta};
}

ScatterEstimate scattering_momentum_rate(const TrapBeams& beams, const DiskMirror& disk,
                                         double omega_z) {
  if (!(beams.beam_disk_angle >= 0.0))
    throw std::invalid_argument("scattering_momentum_rate: angle must be >= 0");
  if (!(omega_z > 0.0))
    throw std::invalid_argument("scattering_momentum_rate: omega_z must be > 0");

  ScatterEstimate estimate;
  const double total_intensity = beams.intensity_x + beams.intensity_y;
  const double photon_energy = hbar * 2.0 * pi * c0 / beams.wavelength;
  estimate.photon_flux = total_intensity * disk.face_area() / photon_energy;

  const double kick = hbar * (2.0 * pi / beams.wavelength) * beams.beam_disk_angle;
  const double per_quantum = 2.0 * kick * kick / (2.0 * disk.mass * hbar * omega_z);
  estimate.rate = estimate.photon_flux > 0.0 ? per_quantum : 0.0;
  estimate.diffusion_rate = estimate.photon_flux * per_quantum;
  return estimate;
}

double gas_damping_rate(const Environment& env, const DiskMirror& disk) {
  env.validate();
  const double rms_speed = std::sqrt(3.0 * kB * env.temperature / env.gas_mass);
  return 4.0 * env.pressure * disk.face_area() / (disk.mass * rms_speed);
}

double thermal_correction(double gamma_mechanical, double gamma_rp, double omega_z,
                          double temperature) {
  if (!(omega_z > 0.0))
    throw std::invalid_argument("thermal_correction: omega_z must be > 0");
  if (!(gamma_rp + gamma_mechanical > 0.0))
    throw std::domain_error("thermal_correction: gamma_rp + gamma_m must be > 0");
  const double n_thermal = kB * temperature / (hbar * omega_z);
  return gamma_mechanical * n_thermal / (gamma_rp + gamma_mechanical);
}

namespace {

// Tag sub-computation failures with the budget term they belong to.
template <typename Fn>
auto with_term(const char* term, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& error) {
    throw std::domain_error(std::string(term) + ": " + error.what());
  }
}

} // namespace

NoiseBudgetReport full_budget(const DiskMirror& disk, const TrapBeams& beams,
                              const CavityConfig& cavity, const Environment& env) {
  disk.validate();
  beams.validate();
  cavity.validate();
  env.validate();

  NoiseBudgetReport report;
  report.warnings = field_variation_warnings(beams, disk);

  const Polarizability pol = with_term("polarizability", [&] {
    return static_polarizability(disk);
  });
  report.alpha_perp = pol.perpendicular;
  report.alpha_z = pol.axial;
  report.moment_of_inertia = moment_of_inertia_x(disk);

  const TrapCharacterization trap = with_term("trap", [&] {
    return characterize_trap(beams, pol, disk);
  });
  report.omega_z = trap.omega_z;
  report.omega_x = trap.omega_x;
  report.omega_y = trap.omega_y;
  report.omega_wob = trap.omega_wob;
  report.trap_depth = trap.trap_depth;

  report.finesse = with_term("finesse", [&] { return cavity_finesse(cavity); });
  report.kappa = pi * c0 / (report.finesse * cavity.length);
  report.cavity_omega = cavity.resonance_frequency();
  report.detuning = cavity.detuning;
  report.n_min = with_term("n_min", [&] {
    return min_phonon_number(cavity.detuning, trap.omega_z, report.kappa);
  });
  report.gamma_rp = with_term("gamma_rp", [&] {
    return cooling_rate_phase_noise(cavity, trap.omega_z, report.kappa, disk.mass);
  });
  report.gamma_rp_monochromatic = with_term("gamma_rp", [&] {
    return cooling_rate(cavity.detuning, 0.0, trap.omega_z, report.kappa,
                        cavity.input_power, disk.mass, cavity.length,
                        cavity.resonance_frequency());
  });

  report.gamma_intensity = with_term("gamma_I", [&] {
    return intensity_heating_rate(trap.omega_z, beams.intensity_noise);
  });
  report.gamma_gas = with_term("gamma_bg", [&] {
    return gas_damping_rate(env, disk);
  });
  report.gamma_mechanical = report.gamma_intensity + report.gamma_gas;

  const PointingHeating pointing = with_term("pointing", [&] {
    return pointing_heating_rate(trap.omega_z, disk.mass, beams.pointing_noise);
  });
  report.pointing_power = pointing.power;
  report.pointing_quanta_rate = pointing.quanta_rate;

  const ScatterEstimate scatter = with_term("scattering", [&] {
    return scattering_momentum_rate(beams, disk, trap.omega_z);
  });
  report.scatter_rate = scatter.rate;
  report.photon_flux = scatter.photon_flux;
  report.scatter_diffusion_rate = scatter.diffusion_rate;

  report.n_thermal = kB * env.temperature / (hbar * trap.omega_z);

  if (report.gamma_rp <= 0.0) {
    report.no_net_cooling = true;
    report.thermal_corr = std::numeric_limits<double>::quiet_NaN();
    report.n_final = std::numeric_limits<double>::quiet_NaN();
  } else {
    report.thermal_corr = with_term("thermal_correction", [&] {
      return thermal_correction(report.gamma_mechanical, report.gamma_rp, trap.omega_z,
                                env.temperature);
    });
    report.n_final = report.n_min + report.thermal_corr;
  }

  report.provenance = {
      {"omega_z", "sqrt(2 alpha_perp (I0x+I0y) / (m c eps0 w0z^2)), axial gradient-force curvature"},
      {"omega_x", "Richardson central second difference of the optical potential along x"},
      {"omega_y", "Richardson central second difference of the optical potential along y"},
      {"omega_wob", "sqrt(12 I0y (alpha_perp - alpha_z) / (eps0 c I_x)), rocking torque of the y beam"},
      {"alpha_perp", "eps0 V (eps_r-1)/(1 + N_perp (eps_r-1)), oblate spheroid, cylinder volume"},
      {"alpha_z", "eps0 V (eps_r-1)/(1 + N_z (eps_r-1)), oblate spheroid, cylinder volume"},
      {"kappa", "pi c / (finesse L), finesse = pi (Rf Rm)^(1/4) / (1 - sqrt(Rf Rm))"},
      {"n_min", "-(4 (Delta+omega_z)^2 + kappa^2) / (16 omega_z Delta), backaction floor"},
      {"gamma_rp", "phase-noise-weighted sideband asymmetry; positive = net cooling; linear in input power"},
      {"gamma_I", "omega_z^2 S_I(2 omega_z) / 4, parametric heating from intensity noise"},
      {"gamma_bg", "4 P A / (m v), v = sqrt(3 kB T / m_gas) rms speed"},
      {"gamma_m", "gamma_I + gamma_bg; pointing and scattering are excluded by convention"},
      {"pointing_power", "omega_z^4 m S_x(omega_z) / 4; note: this expression has units of power"},
      {"pointing_quanta_rate", "pointing_power / (hbar omega_z); caveat: not commensurate with "
                               "the parametric rates, reported for transparency only"},
      {"scatter_rate", "per-photon grazing kick: 2 (hbar k theta)^2 / (2 m hbar omega_z); zero "
                       "without trap light; flux-multiplied diagnostic in scatter_diffusion_rate"},
      {"n_thermal", "kB T / (hbar omega_z), pre-cooling occupation (Rayleigh-Jeans form)"},
      {"thermal_corr", "gamma_m n_thermal / (gamma_rp + gamma_m)"},
      {"n_final", "n_min + thermal_corr; undefined when gamma_rp <= 0"},
  };
  return report;
}

} // namespace optospring
