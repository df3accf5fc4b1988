#ifndef OPTOSPRING_REPORT_IO_HPP
#define OPTOSPRING_REPORT_IO_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "optospring/cavity.hpp"
#include "optospring/langevin.hpp"
#include "optospring/noise_budget.hpp"

// Serialization of reports and grids. All numeric output uses scientific
// notation with 9 significant digits and \n line endings, so files are
// byte-deterministic for a given configuration.

namespace optospring {

std::string format_sci(double value); // "%.8e"; nan/inf spelled out

// column schema of the budget CSV, in order
std::vector<std::pair<std::string, double>> report_columns(const NoiseBudgetReport& report);

void write_report_key_values(std::ostream& out, const NoiseBudgetReport& report);
void write_report_csv(std::ostream& out, const NoiseBudgetReport& report);

// header row of detunings, first column of linewidths, body of ratios;
// undefined cells are written as "nan"
void write_surface_csv(std::ostream& out, const RatioSurface& surface);

// columns: t, mean_energy, stderr_energy
void write_ensemble_csv(std::ostream& out, const EnsembleStats& stats);

void write_ensemble_key_values(std::ostream& out, const EnsembleStats& stats,
                               const std::string& label);

} // namespace optospring

#endif
