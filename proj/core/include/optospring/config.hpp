#ifndef OPTOSPRING_CONFIG_HPP
#define OPTOSPRING_CONFIG_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "optospring/cavity.hpp"
#include "optospring/geometry.hpp"
#include "optospring/langevin.hpp"
#include "optospring/noise_budget.hpp"
#include "optospring/trap.hpp"

// Run configuration: sectioned key = value text in bench units ([disk],
// [beams], [cavity], [environment], optional [oracle]). Parsing rejects
// unknown sections and keys, reports line numbers, and converts to SI
// immediately; everything downstream consumes SI structs only.

namespace optospring {

struct ConfigError : std::runtime_error {
  ConfigError(const std::string& message, int line_number = 0)
      : std::runtime_error(line_number > 0
                               ? message + " (line " + std::to_string(line_number) + ")"
                               : message),
        line(line_number) {}
  int line = 0;
};

// Numerical-run controls for the stochastic oracle. Negative values mean
// "derive from the physical configuration" (or the run-type default).
struct OracleSettings {
  std::string kind = "both";     // gas | parametric | both
  double gamma_bg = -1.0;        // 1/s; < 0 -> physical gas damping rate
  double intensity_noise = -1.0; // 1/Hz; < 0 -> the beams' value
  double temperature = -1.0;     // K; < 0 -> environment temperature
  double dt = -1.0;              // s; < 0 -> 0.04 / omega_z
  std::int64_t n_steps = -1;     // < 0 -> run-type default
  int n_trajectories = 400;
  std::uint64_t seed = 1;
  double initial_energy_kt = -1.0; // in units of kB T; < 0 -> run-type default
};

struct RunConfig {
  DiskMirror disk;
  TrapBeams beams;
  CavityConfig cavity;
  Environment environment;
  std::optional<OracleSettings> oracle;

  void validate() const; // throws ConfigError
};

RunConfig parse_config(std::istream& input, const std::string& source_name);
RunConfig parse_config_file(const std::string& path);

// Numeric sweep access. Keys are "<section>.<key>" with the same names and
// bench units as the config file, e.g. "cavity.detuning_khz".
std::vector<std::string> sweepable_keys();
void apply_config_value(RunConfig& config, const std::string& dotted_key, double value);

// Oracle run assembly: merges [oracle] overrides with the physical
// configuration. Throws ConfigError when the implied run is impractical.
SdeConfig gas_sde_config(const RunConfig& config, double omega_z,
                         double physical_gamma_bg);
SdeConfig parametric_sde_config(const RunConfig& config, double omega_z);

} // namespace optospring

#endif
