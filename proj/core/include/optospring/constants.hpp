#ifndef OPTOSPRING_CONSTANTS_HPP
#define OPTOSPRING_CONSTANTS_HPP

#include <numbers>
#include <stdexcept>

// Single source of physical constants and unit conversions. Every other
// module consumes SI values only; all conversions from bench units
// (torr, mW/um^2, kHz, um, nm, cm, amu) happen here.

namespace optospring::constants {

inline constexpr double pi = std::numbers::pi;

// CODATA 2018, pinned so golden tests are bit-stable.
inline constexpr double speed_of_light = 2.99792458e8;          // m/s
inline constexpr double vacuum_permittivity = 8.8541878128e-12; // F/m
inline constexpr double hbar = 1.054571817e-34;                 // J s
inline constexpr double boltzmann = 1.380649e-23;               // J/K
inline constexpr double atomic_mass_unit = 1.66053906660e-27;   // kg

} // namespace optospring::constants

namespace optospring::units {

// Angular rate in 1/s. Quoted "X kHz" values for cavity linewidths,
// detunings and laser linewidths convert as X*1e3 with no 2*pi factor;
// that convention is what the golden rates are calibrated against.
struct AngularRate {
  double per_second = 0.0;

  static constexpr AngularRate from_khz(double khz) { return {khz * 1e3}; }
  constexpr double value() const { return per_second; }
};

inline constexpr double torr_to_pascal = 133.322;

inline double pascal_from_torr(double torr) {
  if (torr < 0.0) throw std::domain_error("pressure must be non-negative (torr)");
  return torr * torr_to_pascal;
}

inline double torr_from_pascal(double pascal) {
  if (pascal < 0.0) throw std::domain_error("pressure must be non-negative (Pa)");
  return pascal / torr_to_pascal;
}

inline double intensity_from_mw_per_um2(double mw_per_um2) {
  if (mw_per_um2 < 0.0) throw std::domain_error("intensity must be non-negative (mW/um^2)");
  return mw_per_um2 * 1e9; // W/m^2
}

inline double mw_per_um2_from_intensity(double w_per_m2) {
  if (w_per_m2 < 0.0) throw std::domain_error("intensity must be non-negative (W/m^2)");
  return w_per_m2 * 1e-9;
}

inline constexpr double meters_from_um(double um) { return um * 1e-6; }
inline constexpr double meters_from_nm(double nm) { return nm * 1e-9; }
inline constexpr double meters_from_cm(double cm) { return cm * 1e-2; }
inline constexpr double watts_from_mw(double mw) { return mw * 1e-3; }
inline constexpr double kg_from_amu(double amu) { return amu * constants::atomic_mass_unit; }
inline constexpr double m2_per_hz_from_um2_per_hz(double v) { return v * 1e-12; }

} // namespace optospring::units

#endif
