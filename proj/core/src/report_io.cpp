#include "optospring/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace optospring {

std::string format_sci(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.8e", value);
  return buffer;
}

std::vector<std::pair<std::string, double>> report_columns(const NoiseBudgetReport& r) {
  return {
      {"omega_z", r.omega_z},
      {"omega_x", r.omega_x},
      {"omega_y", r.omega_y},
      {"omega_wob", r.omega_wob},
      {"trap_depth", r.trap_depth},
      {"alpha_perp", r.alpha_perp},
      {"alpha_z", r.alpha_z},
      {"moment_of_inertia", r.moment_of_inertia},
      {"finesse", r.finesse},
      {"kappa", r.kappa},
      {"cavity_omega", r.cavity_omega},
      {"detuning", r.detuning},
      {"n_min", r.n_min},
      {"gamma_rp", r.gamma_rp},
      {"gamma_rp_monochromatic", r.gamma_rp_monochromatic},
      {"gamma_I", r.gamma_intensity},
      {"gamma_bg", r.gamma_gas},
      {"gamma_m", r.gamma_mechanical},
      {"pointing_power", r.pointing_power},
      {"pointing_quanta_rate", r.pointing_quanta_rate},
      {"scatter_rate", r.scatter_rate},
      {"photon_flux", r.photon_flux},
      {"scatter_diffusion_rate", r.scatter_diffusion_rate},
      {"n_thermal", r.n_thermal},
      {"thermal_correction", r.thermal_corr},
      {"n_final", r.n_final},
      {"no_net_cooling", r.no_net_cooling ? 1.0 : 0.0},
  };
}

void write_report_key_values(std::ostream& out, const NoiseBudgetReport& report) {
  for (const auto& [key, value] : report_columns(report))
    out << key << " = " << format_sci(value) << "\n";
  for (const auto& [key, text] : report.provenance)
    out << "provenance." << key << " = " << text << "\n";
  for (const std::string& warning : report.warnings) out << "warning = " << warning << "\n";
}

void write_report_csv(std::ostream& out, const NoiseBudgetReport& report) {
  const auto columns = report_columns(report);
  for (std::size_t i = 0; i < columns.size(); ++i)
    out << columns[i].first << (i + 1 < columns.size() ? "," : "\n");
  for (std::size_t i = 0; i < columns.size(); ++i)
    out << format_sci(columns[i].second) << (i + 1 < columns.size() ? "," : "\n");
}

void write_surface_csv(std::ostream& out, const RatioSurface& surface) {
  out << "linewidth_over_kappa\\detuning_over_kappa";
  for (double detuning : surface.detunings) out << "," << format_sci(detuning);
  out << "\n";
  for (std::size_t i = 0; i < surface.linewidths.size(); ++i) {
    out << format_sci(surface.linewidths[i]);
    for (std::size_t j = 0; j < surface.detunings.size(); ++j) {
      const std::size_t cell = i * surface.detunings.size() + j;
      out << "," << (surface.defined[cell] ? format_sci(surface.ratios[cell]) : "nan");
    }
    out << "\n";
  }
}

void write_ensemble_csv(std::ostream& out, const EnsembleStats& stats) {
  out << "t,mean_energy,stderr_energy\n";
  for (std::size_t i = 0; i < stats.time.size(); ++i)
    out << format_sci(stats.time[i]) << "," << format_sci(stats.mean_energy[i]) << ","
        << format_sci(stats.stderr_energy[i]) << "\n";
}

void write_ensemble_key_values(std::ostream& out, const EnsembleStats& stats,
                               const std::string& label) {
  out << "oracle = " << label << "\n";
  out << "fitted_rate = " << format_sci(stats.fitted_rate) << "\n";
  out << "fitted_rate_stderr = " << format_sci(stats.fitted_rate_stderr) << "\n";
  out << "analytic_rate = " << format_sci(stats.predicted_rate) << "\n";
  out << "equilibrium_energy = " << format_sci(stats.equilibrium_energy) << "\n";
  out << "method = " << stats.method << "\n";
}

} // namespace optospring
