#ifndef OPTOSPRING_LANGEVIN_HPP
#define OPTOSPRING_LANGEVIN_HPP

#include <cstdint>
#include <string>
#include <vector>

// Stochastic oracle for the analytic rates: 1-D axial motion of the
// trapped mirror as a damped/driven oscillator, integrated over a
// trajectory ensemble, with empirical rates fitted from the mean energy.

namespace optospring {

struct SdeConfig {
  double omega_z = 0.0;         // 1/s
  double gamma_bg = 0.0;        // 1/s momentum damping (gas run)
  double temperature = 0.0;     // K, sets the thermal force and equilibrium
  double mass = 0.0;            // kg
  double intensity_noise = 0.0; // one-sided relative intensity PSD, 1/Hz (parametric run)
  double dt = 0.0;              // s, requires dt * omega_z < 0.05
  std::int64_t n_steps = 0;
  int n_trajectories = 0;       // >= 100 for rate extraction
  std::uint64_t seed = 0;
  double initial_energy = 0.0;  // J; <= 0 picks the run-type default
  int n_bins = 400;             // recorded points of the energy series

  void validate() const; // throws std::invalid_argument
};

struct EnsembleStats {
  std::vector<double> time;          // s, recorded instants
  std::vector<double> mean_energy;   // J, ensemble mean
  std::vector<double> stderr_energy; // J, standard error of the mean
  double fitted_rate = 0.0;          // 1/s: relaxation (gas) or growth (parametric)
  double fitted_rate_stderr = 0.0;   // from trajectory-group subsampling
  double equilibrium_energy = 0.0;   // J, tail average (gas); NaN for parametric
  double predicted_rate = 0.0;       // analytic counterpart for side-by-side report
  std::string method;                // stepper, noise realization, fit window
};

// Damped oscillator with the thermal force fixed by fluctuation-dissipation
// (impulse variance q dt per step, q = 2 kB T gamma / m). Fits the
// ensemble-energy relaxation toward kB T; default start is 50 kB T.
EnsembleStats simulate_gas_langevin(const SdeConfig& config);

// Undamped oscillator with white modulation of the trap frequency,
// omega^2 (1 + eps(t)), eps flat to the step Nyquist with one-sided PSD
// equal to intensity_noise. Fits the exponential energy growth against
// the parametric prediction omega^2 S_I / 4.
EnsembleStats simulate_parametric_heating(const SdeConfig& config);

} // namespace optospring

#endif
