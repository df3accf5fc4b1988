#ifndef OPTOSPRING_CAVITY_HPP
#define OPTOSPRING_CAVITY_HPP

#include <cstdint>
#include <vector>

// Fabry-Perot side of the design: linewidth, backaction-limited phonon
// floor, and the dynamical cooling rate of a phase-diffusing drive laser.

namespace optospring {

struct CavityConfig {
  double length = 0.0;             // m
  double fixed_reflectivity = 0.0; // input/fixed mirror
  double moving_reflectivity = 0.0;// levitated disk
  double wavelength = 0.0;         // m, drive laser
  double input_power = 0.0;        // W
  double detuning = 0.0;           // 1/s, laser minus cavity; negative = red
  double linewidth = 0.0;          // 1/s, laser phase-diffusion linewidth

  double resonance_frequency() const; // 2 pi c / wavelength

  void validate() const; // throws std::invalid_argument
};

// Two-mirror finesse pi (Rf Rm)^{1/4} / (1 - sqrt(Rf Rm)); throws
// std::domain_error("lossless cavity ...") as Rf*Rm -> 1.
double cavity_finesse(const CavityConfig& cavity);

// kappa = pi c / (F L)
double cavity_linewidth(const CavityConfig& cavity);

// Backaction floor -(4 (Delta + omega_z)^2 + kappa^2) / (16 omega_z Delta).
// Requires red detuning; throws std::domain_error otherwise.
double min_phonon_number(double detuning, double omega_z, double kappa);

// argmin of the phonon floor over red detunings: -sqrt(omega_z^2 + kappa^2/4).
double optimal_detuning(double omega_z, double kappa);

// Dynamical backaction rate with laser phase noise of linewidth gamma_laser.
// Positive return value = net cooling. Linear in input_power.
double cooling_rate(double detuning, double laser_linewidth, double omega_z,
                    double kappa, double input_power, double mass, double length,
                    double cavity_omega);

// Convenience overload pulling detuning/linewidth/power/geometry from the config.
double cooling_rate_phase_noise(const CavityConfig& cavity, double omega_z,
                                double kappa, double mass);

struct CoolingResult {
  double kappa = 0.0;
  double n_min = 0.0;
  double gamma_rp = 0.0;               // at the configured laser linewidth
  double gamma_rp_monochromatic = 0.0; // linewidth -> 0 reference
};

CoolingResult cooling_result(const CavityConfig& cavity, double omega_z, double mass);

struct SurfaceGrid {
  // axes in units of kappa
  double detuning_lo = -3.0;
  double detuning_hi = -0.05;
  int n_detuning = 121;
  double linewidth_lo = 0.0;
  double linewidth_hi = 2.0;
  int n_linewidth = 81;

  void validate() const;
};

// Ratio of the phase-noise cooling rate to its monochromatic value on a
// (detuning x linewidth) grid, both axes normalized to kappa. Cells where
// the monochromatic rate vanishes are flagged undefined, never zeroed.
struct RatioSurface {
  std::vector<double> detunings;  // Delta / kappa
  std::vector<double> linewidths; // linewidth / kappa
  std::vector<double> ratios;     // row-major [linewidth][detuning]
  std::vector<std::uint8_t> defined;

  double at(int linewidth_index, int detuning_index) const;
  bool is_defined(int linewidth_index, int detuning_index) const;
};

RatioSurface cooling_ratio_surface(const CavityConfig& cavity, double omega_z,
                                   double kappa, double mass,
                                   const SurfaceGrid& grid = {});

} // namespace optospring

#endif
