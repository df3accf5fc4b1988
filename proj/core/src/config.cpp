#include "optospring/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <set>
#include <sstream>

#include "optospring/constants.hpp"

namespace optospring {

namespace {

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

double parse_double(const std::string& value, int line) {
  const std::string t = trim(value);
  double parsed = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), parsed);
  if (ec != std::errc{} || ptr != t.data() + t.size())
    throw ConfigError("not a number: '" + t + "'", line);
  return parsed;
}

std::int64_t parse_int(const std::string& value, int line) {
  const std::string t = trim(value);
  std::int64_t parsed = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), parsed);
  if (ec != std::errc{} || ptr != t.data() + t.size())
    throw ConfigError("not an integer: '" + t + "'", line);
  return parsed;
}

std::uint64_t parse_uint(const std::string& value, int line) {
  const std::string t = trim(value);
  std::uint64_t parsed = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), parsed);
  if (ec != std::errc{} || ptr != t.data() + t.size())
    throw ConfigError("not an unsigned integer: '" + t + "'", line);
  return parsed;
}

// One row per numeric key: bench-unit name and the SI setter.
struct NumericKey {
  const char* section;
  const char* key;
  bool required;
  std::function<void(RunConfig&, double)> set;
};

const std::vector<NumericKey>& numeric_keys() {
  using namespace units;
  static const std::vector<NumericKey> keys = {
      {"disk", "diameter_um", true,
       [](RunConfig& c, double v) { c.disk.diameter = meters_from_um(v); }},
      {"disk", "height_um", true,
       [](RunConfig& c, double v) { c.disk.height = meters_from_um(v); }},
      {"disk", "mass_kg", true, [](RunConfig& c, double v) { c.disk.mass = v; }},
      {"disk", "relative_permittivity", true,
       [](RunConfig& c, double v) { c.disk.relative_permittivity = v; }},
      {"disk", "reflectivity", true,
       [](RunConfig& c, double v) {
         c.disk.reflectivity = v;
         c.cavity.moving_reflectivity = v;
       }},
      {"beams", "intensity_x_mw_um2", true,
       [](RunConfig& c, double v) { c.beams.intensity_x = intensity_from_mw_per_um2(v); }},
      {"beams", "intensity_y_mw_um2", true,
       [](RunConfig& c, double v) { c.beams.intensity_y = intensity_from_mw_per_um2(v); }},
      {"beams", "waist_x_um", true,
       [](RunConfig& c, double v) { c.beams.waist_x = meters_from_um(v); }},
      {"beams", "waist_y_um", true,
       [](RunConfig& c, double v) { c.beams.waist_y = meters_from_um(v); }},
      {"beams", "waist_z_um", true,
       [](RunConfig& c, double v) { c.beams.waist_z = meters_from_um(v); }},
      {"beams", "wavelength_um", true,
       [](RunConfig& c, double v) { c.beams.wavelength = meters_from_um(v); }},
      {"beams", "intensity_noise_per_hz", false,
       [](RunConfig& c, double v) { c.beams.intensity_noise = v; }},
      {"beams", "pointing_noise_um2_per_hz", false,
       [](RunConfig& c, double v) {
         c.beams.pointing_noise = m2_per_hz_from_um2_per_hz(v);
       }},
      {"beams", "beam_disk_angle_rad", false,
       [](RunConfig& c, double v) { c.beams.beam_disk_angle = v; }},
      {"cavity", "length_cm", true,
       [](RunConfig& c, double v) { c.cavity.length = meters_from_cm(v); }},
      {"cavity", "fixed_reflectivity", true,
       [](RunConfig& c, double v) { c.cavity.fixed_reflectivity = v; }},
      {"cavity", "wavelength_nm", true,
       [](RunConfig& c, double v) { c.cavity.wavelength = meters_from_nm(v); }},
      {"cavity", "input_power_mw", true,
       [](RunConfig& c, double v) { c.cavity.input_power = watts_from_mw(v); }},
      {"cavity", "detuning_khz", true,
       [](RunConfig& c, double v) { c.cavity.detuning = AngularRate::from_khz(v).value(); }},
      {"cavity", "linewidth_khz", true,
       [](RunConfig& c, double v) { c.cavity.linewidth = AngularRate::from_khz(v).value(); }},
      {"environment", "pressure_torr", true,
       [](RunConfig& c, double v) { c.environment.pressure = pascal_from_torr(v); }},
      {"environment", "gas_mass_amu", true,
       [](RunConfig& c, double v) { c.environment.gas_mass = kg_from_amu(v); }},
      {"environment", "temperature_k", true,
       [](RunConfig& c, double v) { c.environment.temperature = v; }},
  };
  return keys;
}

const NumericKey* find_numeric_key(const std::string& section, const std::string& key) {
  for (const NumericKey& row : numeric_keys())
    if (section == row.section && key == row.key) return &row;
  return nullptr;
}

// [oracle] keys that are not plain doubles in bench units.
void set_oracle_key(OracleSettings& oracle, const std::string& key,
                    const std::string& value, int line) {
  if (key == "kind") {
    const std::string kind = trim(value);
    if (kind != "gas" && kind != "parametric" && kind != "both")
      throw ConfigError("oracle.kind must be gas, parametric or both", line);
    oracle.kind = kind;
  } else if (key == "gamma_bg") {
    oracle.gamma_bg = parse_double(value, line);
  } else if (key == "intensity_noise_per_hz") {
    oracle.intensity_noise = parse_double(value, line);
  } else if (key == "temperature_k") {
    oracle.temperature = parse_double(value, line);
  } else if (key == "dt_s") {
    oracle.dt = parse_double(value, line);
  } else if (key == "n_steps") {
    oracle.n_steps = parse_int(value, line);
  } else if (key == "n_trajectories") {
    oracle.n_trajectories = static_cast<int>(parse_int(value, line));
  } else if (key == "seed") {
    oracle.seed = parse_uint(value, line);
  } else if (key == "initial_energy_kt") {
    oracle.initial_energy_kt = parse_double(value, line);
  } else {
    throw ConfigError("unknown key '" + key + "' in [oracle]", line);
  }
}

} // namespace

void RunConfig::validate() const {
  try {
    disk.validate();
    beams.validate();
    cavity.validate();
    environment.validate();
  } catch (const std::invalid_argument& error) {
    throw ConfigError(error.what());
  }
  if (!(cavity.detuning < 0.0))
    throw ConfigError("cavity: detuning_khz must be negative (red detuned)");
  if (cavity.moving_reflectivity != disk.reflectivity)
    throw ConfigError("disk.reflectivity and the cavity moving-mirror reflectivity must agree "
                      "(the levitated disk is the moving mirror)");
}

RunConfig parse_config(std::istream& input, const std::string& source_name) {
  RunConfig config;
  std::string section;
  std::set<std::string> seen;
  std::set<std::string> seen_sections;
  static const std::set<std::string> known_sections = {"disk", "beams", "cavity",
                                                       "environment", "oracle"};

  std::string raw;
  int line = 0;
  while (std::getline(input, raw)) {
    ++line;
    std::string text = raw;
    const auto comment = text.find_first_of("#;");
    if (comment != std::string::npos) text.erase(comment);
    text = trim(text);
    if (text.empty()) continue;

    if (text.front() == '[') {
      if (text.back() != ']') throw ConfigError("malformed section header", line);
      section = trim(text.substr(1, text.size() - 2));
      if (!known_sections.count(section))
        throw ConfigError("unknown section [" + section + "]", line);
      seen_sections.insert(section);
      if (section == "oracle" && !config.oracle) config.oracle.emplace();
      continue;
    }

    const auto equals = text.find('=');
    if (equals == std::string::npos)
      throw ConfigError("expected 'key = value'", line);
    if (section.empty()) throw ConfigError("key outside of any section", line);
    const std::string key = trim(text.substr(0, equals));
    const std::string value = text.substr(equals + 1);
    if (key.empty()) throw ConfigError("empty key", line);

    const std::string dotted = section + "." + key;
    if (!seen.insert(dotted).second)
      throw ConfigError("duplicate key '" + key + "' in [" + section + "]", line);

    if (section == "oracle") {
      set_oracle_key(*config.oracle, key, value, line);
      continue;
    }
    const NumericKey* row = find_numeric_key(section, key);
    if (row == nullptr)
      throw ConfigError("unknown key '" + key + "' in [" + section + "]", line);
    try {
      row->set(config, parse_double(value, line));
    } catch (const std::domain_error& error) {
      throw ConfigError(std::string(error.what()) + " for key '" + key + "'", line);
    }
  }

  for (const char* required : {"disk", "beams", "cavity", "environment"})
    if (!seen_sections.count(required))
      throw ConfigError(source_name + ": missing section [" + required + "]");
  for (const NumericKey& row : numeric_keys())
    if (row.required && !seen.count(std::string(row.section) + "." + row.key))
      throw ConfigError(source_name + ": missing required key '" +
                        std::string(row.section) + "." + row.key + "'");

  config.validate();
  return config;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream input(path);
  if (!input) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(input, path);
}

std::vector<std::string> sweepable_keys() {
  std::vector<std::string> keys;
  keys.reserve(numeric_keys().size());
  for (const NumericKey& row : numeric_keys())
    keys.push_back(std::string(row.section) + "." + row.key);
  return keys;
}

void apply_config_value(RunConfig& config, const std::string& dotted_key, double value) {
  const auto dot = dotted_key.find('.');
  if (dot == std::string::npos)
    throw ConfigError("parameter path '" + dotted_key + "' must be section.key");
  const NumericKey* row =
      find_numeric_key(dotted_key.substr(0, dot), dotted_key.substr(dot + 1));
  if (row == nullptr)
    throw ConfigError("parameter path '" + dotted_key + "' does not name a numeric config field");
  try {
    row->set(config, value);
  } catch (const std::domain_error& error) {
    throw ConfigError(std::string(error.what()) + " for '" + dotted_key + "'");
  }
  config.validate();
}

namespace {

constexpr double max_total_steps = 4e9; // n_steps * n_trajectories guard

SdeConfig base_sde(const RunConfig& config, double omega_z) {
  const OracleSettings& oracle = config.oracle.value();
  SdeConfig sde;
  sde.omega_z = omega_z;
  sde.mass = config.disk.mass;
  sde.temperature =
      oracle.temperature > 0.0 ? oracle.temperature : config.environment.temperature;
  sde.dt = oracle.dt > 0.0 ? oracle.dt : 0.04 / omega_z;
  sde.n_trajectories = oracle.n_trajectories;
  sde.seed = oracle.seed;
  return sde;
}

void check_run_size(const SdeConfig& sde, const char* label) {
  const double total =
      static_cast<double>(sde.n_steps) * static_cast<double>(sde.n_trajectories);
  if (!(total > 0.0) || total > max_total_steps)
    throw ConfigError(std::string(label) +
                      ": run size n_steps * n_trajectories is impractical (" +
                      std::to_string(total) +
                      " steps); scale up oracle.gamma_bg / intensity_noise_per_hz or set "
                      "oracle.n_steps explicitly");
}

} // namespace

SdeConfig gas_sde_config(const RunConfig& config, double omega_z,
                         double physical_gamma_bg) {
  if (!config.oracle) throw ConfigError("oracle section missing");
  const OracleSettings& oracle = *config.oracle;
  SdeConfig sde = base_sde(config, omega_z);
  sde.gamma_bg = oracle.gamma_bg >= 0.0 ? oracle.gamma_bg : physical_gamma_bg;
  if (!(sde.gamma_bg > 0.0))
    throw ConfigError("gas oracle: gamma_bg must be > 0");
  const double kb_t = constants::boltzmann * sde.temperature;
  sde.initial_energy =
      (oracle.initial_energy_kt > 0.0 ? oracle.initial_energy_kt : 50.0) * kb_t;
  sde.n_steps = oracle.n_steps > 0
                    ? oracle.n_steps
                    : static_cast<std::int64_t>(std::ceil(14.0 / sde.gamma_bg / sde.dt));
  check_run_size(sde, "gas oracle");
  return sde;
}

SdeConfig parametric_sde_config(const RunConfig& config, double omega_z) {
  if (!config.oracle) throw ConfigError("oracle section missing");
  const OracleSettings& oracle = *config.oracle;
  SdeConfig sde = base_sde(config, omega_z);
  sde.gamma_bg = 0.0;
  sde.intensity_noise =
      oracle.intensity_noise >= 0.0 ? oracle.intensity_noise : config.beams.intensity_noise;
  if (!(sde.intensity_noise > 0.0))
    throw ConfigError("parametric oracle: intensity noise PSD must be > 0");
  const double kb_t = constants::boltzmann * sde.temperature;
  sde.initial_energy =
      (oracle.initial_energy_kt > 0.0 ? oracle.initial_energy_kt : 1.0) * kb_t;
  const double predicted = 0.25 * omega_z * omega_z * sde.intensity_noise;
  sde.n_steps = oracle.n_steps > 0
                    ? oracle.n_steps
                    : static_cast<std::int64_t>(std::ceil(1.9 / predicted / sde.dt));
  check_run_size(sde, "parametric oracle");
  return sde;
}

} // namespace optospring
