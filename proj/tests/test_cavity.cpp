#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "optospring/cavity.hpp"
#include "optospring/rng.hpp"

using namespace optospring;

namespace {

CavityConfig reference_cavity() {
  CavityConfig cavity;
  cavity.length = 0.15;
  cavity.fixed_reflectivity = 0.999998;
  cavity.moving_reflectivity = 0.9998;
  cavity.wavelength = 852e-9;
  cavity.input_power = 1e-4;
  cavity.detuning = -1.6e5;
  cavity.linewidth = 1e4;
  return cavity;
}

constexpr double reference_omega_z = 1.230095786350e5;
constexpr double reference_mass = 1.48e-10;

} // namespace

TEST_SUITE("cavity") {

TEST_CASE("linewidth from the mirror reflectivities") {
  const double kappa = cavity_linewidth(reference_cavity());
  CHECK(kappa == doctest::Approx(2.0e5).epsilon(0.03));
  CHECK(kappa == doctest::Approx(2.018802459668e5).epsilon(1e-10)); // frozen
  CHECK(cavity_finesse(reference_cavity()) ==
        doctest::Approx(3.110179764062e4).epsilon(1e-10));
}

TEST_CASE("lossless limit is guarded") {
  CavityConfig lossless = reference_cavity();
  lossless.fixed_reflectivity = 1.0 - 1e-16;
  lossless.moving_reflectivity = 1.0 - 1e-16;
  CHECK_THROWS_WITH_AS(cavity_finesse(lossless), doctest::Contains("lossless"),
                       std::domain_error);
}

TEST_CASE("halving the length doubles the linewidth") {
  CavityConfig half = reference_cavity();
  half.length *= 0.5;
  CHECK(cavity_linewidth(half) ==
        doctest::Approx(2.0 * cavity_linewidth(reference_cavity())).epsilon(1e-12));
}

TEST_CASE("phonon floor") {
  // with the quoted intermediate omega_z = 1.235e5 the floor sits near 0.146
  CHECK(min_phonon_number(-1.6e5, 1.235e5, 2.018802459668e5) ==
        doctest::Approx(1.457636440777e-1).epsilon(1e-10));
  const double omega = 1.235e5, kappa = 2.02e5;
  CHECK(min_phonon_number(-omega, omega, kappa) ==
        doctest::Approx(kappa * kappa / (16.0 * omega * omega)).epsilon(1e-12));
  CHECK(min_phonon_number(-omega, omega, 1e-30) == doctest::Approx(0.0).epsilon(1e-40));
  CHECK_THROWS_WITH_AS(min_phonon_number(1e5, omega, kappa),
                       doctest::Contains("not in cooling regime"), std::domain_error);
  CHECK_THROWS_AS(min_phonon_number(0.0, omega, kappa), std::domain_error);
}

TEST_CASE("phonon floor is scale invariant") {
  CounterRng rng(7, 0);
  for (int i = 0; i < 200; ++i) {
    const double omega = 1e3 * std::exp(6.0 * rng.uniform());
    const double kappa = 1e3 * std::exp(6.0 * rng.uniform());
    const double detuning = -1e3 * std::exp(6.0 * rng.uniform());
    const double scale = std::exp(4.0 * (rng.uniform() - 0.5));
    CHECK(min_phonon_number(scale * detuning, scale * omega, scale * kappa) ==
          doctest::Approx(min_phonon_number(detuning, omega, kappa)).epsilon(1e-12));
  }
}

TEST_CASE("optimal detuning") {
  const double kappa = 2.018802459668e5;
  CHECK(optimal_detuning(reference_omega_z, kappa) ==
        doctest::Approx(-1.591234265086e5).epsilon(1e-10)); // frozen
  CHECK(optimal_detuning(reference_omega_z, kappa) ==
        doctest::Approx(-1.59e5).epsilon(0.01));
  CHECK(optimal_detuning(1.0e5, 1e-6) == doctest::Approx(-1.0e5).epsilon(1e-10));
}

TEST_CASE("optimal detuning beats a brute-force grid search") {
  const double omega = reference_omega_z, kappa = 2.018802459668e5;
  const double best = optimal_detuning(omega, kappa);
  double grid_best = 0.0, grid_min = 1e300;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double detuning = -10.0 * omega + (10.0 * omega - 1e-3 * omega) * i / (n - 1.0);
    const double value = min_phonon_number(detuning, omega, kappa);
    if (value < grid_min) {
      grid_min = value;
      grid_best = detuning;
    }
  }
  CHECK(best == doctest::Approx(grid_best).epsilon(1e-3));
  // local-minimum property
  CHECK(min_phonon_number(best, omega, kappa) <
        min_phonon_number(best * 1.1, omega, kappa));
  CHECK(min_phonon_number(best, omega, kappa) <
        min_phonon_number(best * 0.9, omega, kappa));
}

TEST_CASE("phase-noise cooling rate at the design point") {
  const CavityConfig cavity = reference_cavity();
  const double kappa = cavity_linewidth(cavity);
  const double rate = cooling_rate_phase_noise(cavity, reference_omega_z, kappa,
                                               reference_mass);
  CHECK(rate == doctest::Approx(2.21e7).epsilon(0.03));
  CHECK(rate == doctest::Approx(2.203102428665e7).epsilon(1e-10)); // frozen
  const CoolingResult result = cooling_result(cavity, reference_omega_z, reference_mass);
  CHECK(result.gamma_rp == doctest::Approx(rate).epsilon(1e-14));
  CHECK(result.gamma_rp_monochromatic ==
        doctest::Approx(2.318706248072e7).epsilon(1e-10)); // frozen
  CHECK(result.n_min == doctest::Approx(1.468025883242e-1).epsilon(1e-10));
}

TEST_CASE("monochromatic laser is the linewidth-zero limit") {
  const CavityConfig cavity = reference_cavity();
  const double kappa = cavity_linewidth(cavity);
  CavityConfig narrow = cavity;
  narrow.linewidth = 0.0;
  const double mono = cooling_rate_phase_noise(narrow, reference_omega_z, kappa,
                                               reference_mass);
  CHECK(mono == doctest::Approx(cooling_rate(cavity.detuning, 0.0, reference_omega_z,
                                             kappa, cavity.input_power, reference_mass,
                                             cavity.length, cavity.resonance_frequency()))
                    .epsilon(1e-14));
}

TEST_CASE("cooling rate is exactly linear in the input power") {
  CounterRng rng(11, 0);
  const CavityConfig base = reference_cavity();
  const double kappa = cavity_linewidth(base);
  for (int i = 0; i < 100; ++i) {
    CavityConfig cavity = base;
    cavity.detuning = -1e4 * std::exp(4.0 * rng.uniform());
    cavity.linewidth = 1e3 * std::exp(4.0 * rng.uniform());
    cavity.input_power = 1e-5 * std::exp(4.0 * rng.uniform());
    const double omega = 1e4 * std::exp(3.0 * rng.uniform());
    const double one = cooling_rate_phase_noise(cavity, omega, kappa, reference_mass);
    cavity.input_power *= 2.0;
    const double two = cooling_rate_phase_noise(cavity, omega, kappa, reference_mass);
    CHECK(two == doctest::Approx(2.0 * one).epsilon(1e-12));
  }
}

TEST_CASE("no sideband asymmetry without a mechanical frequency") {
  const CavityConfig cavity = reference_cavity();
  // the asymmetry vanishes continuously as omega_z -> 0
  const double tiny = cooling_rate(cavity.detuning, cavity.linewidth, 1e-3,
                                   2.018802459668e5, cavity.input_power, reference_mass,
                                   cavity.length, cavity.resonance_frequency());
  const double small = cooling_rate(cavity.detuning, cavity.linewidth, 1.0,
                                    2.018802459668e5, cavity.input_power, reference_mass,
                                    cavity.length, cavity.resonance_frequency());
  CHECK(std::abs(small) < 1e-3 * 2.203102428665e7);
  CHECK(std::abs(tiny) < std::abs(small));
  CHECK_THROWS_AS(cooling_rate(-1e5, 0.0, 1e5, 2e5, 1e-4, 0.0, 0.15, 2.2e15),
                  std::domain_error);
  CHECK_THROWS_AS(cooling_rate(-1e5, 0.0, 1e5, 2e5, 1e-4, 1e-10, 0.0, 2.2e15),
                  std::domain_error);
}

TEST_CASE("ratio surface basics") {
  const CavityConfig cavity = reference_cavity();
  const double kappa = cavity_linewidth(cavity);
  SurfaceGrid grid;
  grid.n_detuning = 31;
  grid.n_linewidth = 21;
  const RatioSurface surface =
      cooling_ratio_surface(cavity, reference_omega_z, kappa, reference_mass, grid);

  REQUIRE(surface.detunings.size() == 31);
  REQUIRE(surface.linewidths.size() == 21);
  CHECK(surface.linewidths.front() == 0.0);
  for (std::size_t j = 0; j < surface.detunings.size(); ++j) {
    CHECK(surface.is_defined(0, static_cast<int>(j)));
    CHECK(std::abs(surface.at(0, static_cast<int>(j)) - 1.0) <= 1e-12);
  }
}

TEST_CASE("ratio surface converges to one as the linewidth vanishes") {
  const CavityConfig cavity = reference_cavity();
  const double kappa = cavity_linewidth(cavity);
  SurfaceGrid grid;
  grid.n_detuning = 121;
  grid.linewidth_lo = 1e-6;
  grid.linewidth_hi = 1e-6;
  grid.n_linewidth = 1;
  const RatioSurface surface =
      cooling_ratio_surface(cavity, reference_omega_z, kappa, reference_mass, grid);
  for (std::size_t j = 0; j < surface.detunings.size(); ++j)
    CHECK(std::abs(surface.at(0, static_cast<int>(j)) - 1.0) < 1e-4);
}

TEST_CASE("a broad laser at the sideband resonance cools more slowly") {
  const CavityConfig cavity = reference_cavity();
  const double kappa = cavity_linewidth(cavity);
  const double at_resonance_mono =
      cooling_rate(-reference_omega_z, 0.0, reference_omega_z, kappa, cavity.input_power,
                   reference_mass, cavity.length, cavity.resonance_frequency());
  const double at_resonance_broad =
      cooling_rate(-reference_omega_z, kappa, reference_omega_z, kappa, cavity.input_power,
                   reference_mass, cavity.length, cavity.resonance_frequency());
  CHECK(at_resonance_broad / at_resonance_mono < 1.0);
}

TEST_CASE("a modest linewidth leaves some detuning nearly unaffected") {
  const CavityConfig cavity = reference_cavity();
  const double kappa = cavity_linewidth(cavity);
  SurfaceGrid grid; // default
  const RatioSurface surface =
      cooling_ratio_surface(cavity, reference_omega_z, kappa, reference_mass, grid);
  // linewidth = 0.05 kappa sits on the default grid
  int row = -1;
  for (std::size_t i = 0; i < surface.linewidths.size(); ++i)
    if (std::abs(surface.linewidths[i] - 0.05) < 1e-12) row = static_cast<int>(i);
  REQUIRE(row >= 0);
  double best = 0.0;
  for (std::size_t j = 0; j < surface.detunings.size(); ++j)
    best = std::max(best, surface.at(row, static_cast<int>(j)));
  CHECK(best >= 0.95);
}

TEST_CASE("degenerate one-cell grid") {
  const CavityConfig cavity = reference_cavity();
  const double kappa = cavity_linewidth(cavity);
  SurfaceGrid grid;
  grid.detuning_lo = grid.detuning_hi = -1.0;
  grid.n_detuning = 1;
  grid.linewidth_lo = grid.linewidth_hi = 0.5;
  grid.n_linewidth = 1;
  const RatioSurface surface =
      cooling_ratio_surface(cavity, reference_omega_z, kappa, reference_mass, grid);
  REQUIRE(surface.ratios.size() == 1);
  CHECK(surface.is_defined(0, 0));
  CHECK(surface.at(0, 0) > 0.0);
}

TEST_CASE("grid validation") {
  SurfaceGrid grid;
  grid.detuning_hi = 0.0; // must stay strictly negative
  CHECK_THROWS_AS(grid.validate(), std::invalid_argument);
  grid = {};
  grid.n_detuning = 0;
  CHECK_THROWS_AS(grid.validate(), std::invalid_argument);
  grid = {};
  grid.linewidth_lo = -0.1;
  CHECK_THROWS_AS(grid.validate(), std::invalid_argument);
}

TEST_CASE("cavity validation") {
  CavityConfig bad = reference_cavity();
  bad.fixed_reflectivity = 1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = reference_cavity();
  bad.input_power = -1e-5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = reference_cavity();
  bad.length = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

} // TEST_SUITE
