// optospring: design and verification CLI for an optically levitated
// Bragg-disk cavity end-mirror. Subcommands compute the noise budget,
// the phase-noise cooling surface, parameter sweeps, stochastic-oracle
// runs and the detuning optimum from one sectioned config file.
//
// Exit codes: 0 ok, 1 config error, 2 no net cooling, 3 strict-mode
// oracle mismatch.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "optospring/cavity.hpp"
#include "optospring/config.hpp"
#include "optospring/constants.hpp"
#include "optospring/geometry.hpp"
#include "optospring/langevin.hpp"
#include "optospring/noise_budget.hpp"
#include "optospring/parallel.hpp"
#include "optospring/report_io.hpp"
#include "optospring/trap.hpp"

namespace {

using namespace optospring;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output file '" + path + "'");
  out << content;
  if (!out) throw ConfigError("failed writing output file '" + path + "'");
}

std::vector<double> split_numbers(const std::string& text, std::size_t expected,
                                  const char* what) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError(std::string(what) + ": bad number '" + item + "'");
    }
  }
  if (values.size() != expected)
    throw ConfigError(std::string(what) + ": expected " + std::to_string(expected) +
                      " comma-separated values");
  return values;
}

int run_budget(const std::string& config_path, const std::string& out_path) {
  const RunConfig config = parse_config_file(config_path);
  const NoiseBudgetReport report =
      full_budget(config.disk, config.beams, config.cavity, config.environment);

  std::ostringstream text, csv;
  write_report_key_values(text, report);
  write_report_csv(csv, report);

  std::cout << text.str();
  if (!out_path.empty()) write_file(out_path, csv.str());
  if (report.no_net_cooling) {
    std::cerr << "no net cooling at the configured drive (gamma_rp <= 0)\n";
    return 2;
  }
  return 0;
}

int run_fig2(const std::string& config_path, const std::string& out_path,
             const std::string& grid_spec) {
  const RunConfig config = parse_config_file(config_path);
  SurfaceGrid grid;
  if (!grid_spec.empty()) {
    const std::vector<double> g = split_numbers(grid_spec, 6, "--grid");
    grid.detuning_lo = g[0];
    grid.detuning_hi = g[1];
    grid.n_detuning = static_cast<int>(g[2]);
    grid.linewidth_lo = g[3];
    grid.linewidth_hi = g[4];
    grid.n_linewidth = static_cast<int>(g[5]);
  }

  const Polarizability pol = static_polarizability(config.disk);
  const double omega_z = axial_frequency(config.beams, pol, config.disk);
  const double kappa = cavity_linewidth(config.cavity);
  const RatioSurface surface =
      cooling_ratio_surface(config.cavity, omega_z, kappa, config.disk.mass, grid);

  std::ostringstream csv;
  write_surface_csv(csv, surface);
  if (out_path.empty())
    std::cout << csv.str();
  else
    write_file(out_path, csv.str());
  return 0;
}

int run_sweep(const std::string& config_path, const std::string& out_path,
              const std::string& param, const std::string& range_spec, int points,
              bool log_scale) {
  const RunConfig config = parse_config_file(config_path);
  const std::vector<double> range = split_numbers(range_spec, 2, "--range");
  const double lo = range[0], hi = range[1];
  if (points < 2) throw ConfigError("--points must be >= 2");
  if (!(lo < hi)) throw ConfigError("--range: need lo < hi");
  if (log_scale && !(lo > 0.0)) throw ConfigError("--range: log scale requires lo > 0");

  std::vector<double> values(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double f = static_cast<double>(i) / (points - 1);
    values[static_cast<std::size_t>(i)] =
        log_scale ? lo * std::pow(hi / lo, f) : lo + (hi - lo) * f;
  }

  // probe the parameter path once before spending time on the grid
  {
    RunConfig probe = config;
    apply_config_value(probe, param, values.front());
  }

  std::vector<std::string> rows(values.size());
  parallel_for(static_cast<std::int64_t>(values.size()),
               [&](std::int64_t begin, std::int64_t end) {
                 for (std::int64_t i = begin; i < end; ++i) {
                   RunConfig point = config;
                   apply_config_value(point, param, values[static_cast<std::size_t>(i)]);
                   const NoiseBudgetReport report = full_budget(
                       point.disk, point.beams, point.cavity, point.environment);
                   std::ostringstream row;
                   row << format_sci(values[static_cast<std::size_t>(i)]);
                   for (const auto& [key, value] : report_columns(report))
                     row << "," << format_sci(value);
                   row << "\n";
                   rows[static_cast<std::size_t>(i)] = row.str();
                 }
               });

  std::ostringstream csv;
  csv << param;
  for (const auto& [key, value] : report_columns(NoiseBudgetReport{})) csv << "," << key;
  csv << "\n";
  for (const std::string& row : rows) csv << row;

  if (out_path.empty())
    std::cout << csv.str();
  else
    write_file(out_path, csv.str());
  return 0;
}

std::string parametric_out_path(const std::string& base) {
  const auto slash = base.find_last_of('/');
  const auto dot = base.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return base + "_parametric";
  return base.substr(0, dot) + "_parametric" + base.substr(dot);
}

int run_simulate(const std::string& config_path, const std::string& out_path,
                 std::uint64_t seed, bool seed_set, bool strict) {
  RunConfig config = parse_config_file(config_path);
  if (!config.oracle) throw ConfigError("simulate requires an [oracle] section");
  if (seed_set) config.oracle->seed = seed;

  const Polarizability pol = static_polarizability(config.disk);
  const double omega_z = axial_frequency(config.beams, pol, config.disk);
  const double physical_gamma_bg = gas_damping_rate(config.environment, config.disk);

  const std::string kind = config.oracle->kind;
  bool strict_failure = false;
  std::ostringstream text;

  const auto report_block = [&](const EnsembleStats& stats, const std::string& label,
                                double analytic_equilibrium) {
    write_ensemble_key_values(text, stats, label);
    if (analytic_equilibrium > 0.0)
      text << "analytic_equilibrium = " << format_sci(analytic_equilibrium) << "\n";
    const double sigma =
        stats.fitted_rate_stderr > 0.0
            ? std::abs(stats.fitted_rate - stats.predicted_rate) / stats.fitted_rate_stderr
            : std::numeric_limits<double>::infinity();
    text << "mismatch_sigma = " << format_sci(sigma) << "\n\n";
    if (sigma > 3.0) strict_failure = true;
  };

  std::string gas_csv, parametric_csv;
  if (kind == "gas" || kind == "both") {
    const SdeConfig sde = gas_sde_config(config, omega_z, physical_gamma_bg);
    const EnsembleStats stats = simulate_gas_langevin(sde);
    report_block(stats, "gas", constants::boltzmann * sde.temperature);
    std::ostringstream csv;
    write_ensemble_csv(csv, stats);
    gas_csv = csv.str();
  }
  if (kind == "parametric" || kind == "both") {
    const SdeConfig sde = parametric_sde_config(config, omega_z);
    const EnsembleStats stats = simulate_parametric_heating(sde);
    report_block(stats, "parametric", 0.0);
    std::ostringstream csv;
    write_ensemble_csv(csv, stats);
    parametric_csv = csv.str();
  }

  std::cout << text.str();
  if (!out_path.empty()) {
    if (!gas_csv.empty()) write_file(out_path, gas_csv);
    if (!parametric_csv.empty())
      write_file(gas_csv.empty() ? out_path : parametric_out_path(out_path),
                 parametric_csv);
  }
  if (strict && strict_failure) {
    std::cerr << "strict mode: fitted rate differs from the analytic prediction by more "
                 "than 3 sigma\n";
    return 3;
  }
  return 0;
}

int run_optimize(const std::string& config_path) {
  const RunConfig config = parse_config_file(config_path);
  const Polarizability pol = static_polarizability(config.disk);
  const double omega_z = axial_frequency(config.beams, pol, config.disk);
  const double kappa = cavity_linewidth(config.cavity);
  const double best_detuning = optimal_detuning(omega_z, kappa);

  const NoiseBudgetReport configured =
      full_budget(config.disk, config.beams, config.cavity, config.environment);
  RunConfig tuned = config;
  tuned.cavity.detuning = best_detuning;
  const NoiseBudgetReport optimal =
      full_budget(tuned.disk, tuned.beams, tuned.cavity, tuned.environment);

  std::cout << "detuning_configured = " << format_sci(configured.detuning) << "\n"
            << "detuning_optimal = " << format_sci(best_detuning) << "\n"
            << "n_min_configured = " << format_sci(configured.n_min) << "\n"
            << "n_min_optimal = " << format_sci(optimal.n_min) << "\n"
            << "n_final_configured = " << format_sci(configured.n_final) << "\n"
            << "n_final_optimal = " << format_sci(optimal.n_final) << "\n"
            << "improvement_n_min = " << format_sci(configured.n_min - optimal.n_min)
            << "\n";
  if (optimal.no_net_cooling) {
    std::cerr << "no net cooling even at the optimal detuning (gamma_rp <= 0)\n";
    return 2;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"optospring: levitated Bragg-disk cavity end-mirror design toolkit"};
  app.require_subcommand(1);

  std::string config_path, out_path, grid_spec, param, range_spec;
  int points = 2;
  bool log_scale = false, strict = false;
  std::uint64_t seed = 0;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "run configuration file")->required();
    cmd->add_option("--out", out_path, "output file (default: stdout or none)");
  };

  CLI::App* budget = app.add_subcommand("budget", "noise budget report for one design");
  add_common(budget);

  CLI::App* fig2 = app.add_subcommand(
      "fig2", "cooling-rate ratio surface over detuning x laser linewidth");
  add_common(fig2);
  fig2->add_option("--grid", grid_spec,
                   "dlo,dhi,dn,llo,lhi,ln in units of kappa "
                   "(default -3,-0.05,121,0,2,81)");

  CLI::App* sweep = app.add_subcommand("sweep", "budget CSV over one config parameter");
  add_common(sweep);
  sweep->add_option("--param", param, "dotted config key, e.g. cavity.detuning_khz")
      ->required();
  sweep->add_option("--range", range_spec, "lo,hi in the key's config units")->required();
  sweep->add_option("--points", points, "number of sweep points (>= 2)")->required();
  sweep->add_flag("--log", log_scale, "logarithmic spacing");

  CLI::App* simulate =
      app.add_subcommand("simulate", "stochastic oracle runs vs the analytic rates");
  add_common(simulate);
  CLI::Option* seed_option =
      simulate->add_option("--seed", seed, "override the [oracle] seed");
  simulate->add_flag("--strict", strict, "exit 3 when a fit misses its prediction by > 3 sigma");

  CLI::App* optimize =
      app.add_subcommand("optimize", "re-run the budget at the optimal detuning");
  optimize->add_option("--config", config_path, "run configuration file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    std::cerr << error.what() << "\n";
    return 1;
  }

  try {
    if (budget->parsed()) return run_budget(config_path, out_path);
    if (fig2->parsed()) return run_fig2(config_path, out_path, grid_spec);
    if (sweep->parsed())
      return run_sweep(config_path, out_path, param, range_spec, points, log_scale);
    if (simulate->parsed())
      return run_simulate(config_path, out_path, seed, seed_option->count() > 0, strict);
    if (optimize->parsed()) return run_optimize(config_path);
  } catch (const std::exception& error) {
    std::cerr << "config error: " << error.what() << "\n";
    return 1;
  }
  return 1;
}
