#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "optospring/constants.hpp"
#include "optospring/geometry.hpp"
#include "optospring/trap.hpp"

using namespace optospring;

namespace {

DiskMirror reference_disk() { return {100e-6, 4e-6, 1.48e-10, 5.9, 0.9998}; }

TrapBeams reference_beams() {
  TrapBeams beams;
  beams.intensity_x = 8e10;
  beams.intensity_y = 8e10;
  beams.waist_x = 200e-6;
  beams.waist_y = 200e-6;
  beams.waist_z = 8e-6;
  beams.wavelength = 1.064e-6;
  beams.intensity_noise = 1e-12;
  beams.pointing_noise = 1e-22;
  beams.beam_disk_angle = 1e-2;
  return beams;
}

} // namespace

TEST_SUITE("trap") {

TEST_CASE("on-axis intensity is the sum of the beam peaks") {
  const TrapBeams beams = reference_beams();
  CHECK(beam_intensity({0.0, 0.0, 0.0}, beams) ==
        doctest::Approx(beams.intensity_x + beams.intensity_y).epsilon(1e-14));
}

TEST_CASE("one waist away along z the single beam drops by e^-2") {
  TrapBeams beams = reference_beams();
  beams.intensity_y = 0.0;
  CHECK(beam_intensity({0.0, 0.0, beams.waist_z}, beams) ==
        doctest::Approx(beams.intensity_x * std::exp(-2.0)).epsilon(1e-12));
}

TEST_CASE("off-axis point matches the independently evaluated field") {
  // frozen from a symbolic evaluation of the two-beam expression at (0, w0y, 0)
  CHECK(beam_intensity({0.0, 200e-6, 0.0}, reference_beams()) ==
        doctest::Approx(6.57687794575e10).epsilon(1e-9));
}

TEST_CASE("intensity decays along every axis") {
  const TrapBeams beams = reference_beams();
  for (int axis = 0; axis < 3; ++axis) {
    Vec3 far{0.0, 0.0, 0.0};
    far[static_cast<std::size_t>(axis)] = 0.5; // m
    CHECK(beam_intensity(far, beams) >= 0.0);
    CHECK(beam_intensity(far, beams) < 1e-3 * beam_intensity({0, 0, 0}, beams));
  }
}

TEST_CASE("potential at the origin and trap depth") {
  const TrapBeams beams = reference_beams();
  const Polarizability pol = static_polarizability(reference_disk());
  const double expected = -pol.perpendicular * (beams.intensity_x + beams.intensity_y) /
                          (2.0 * constants::vacuum_permittivity * constants::speed_of_light);
  CHECK(optical_potential({0, 0, 0}, beams, pol) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(trap_depth_z(beams, pol) == doctest::Approx(-expected).epsilon(1e-14));
  TrapBeams dark = beams;
  dark.intensity_x = 0.0;
  dark.intensity_y = 0.0;
  CHECK(optical_potential({0, 0, 0}, dark, pol) == 0.0);
}

TEST_CASE("origin is a strict local minimum with vanishing gradient") {
  const TrapBeams beams = reference_beams();
  const Polarizability pol = static_polarizability(reference_disk());
  const double v0 = optical_potential({0, 0, 0}, beams, pol);
  const double steps[3] = {1e-6, 1e-6, 1e-7};
  for (int axis = 0; axis < 3; ++axis) {
    Vec3 plus{0, 0, 0}, minus{0, 0, 0};
    plus[static_cast<std::size_t>(axis)] = steps[axis];
    minus[static_cast<std::size_t>(axis)] = -steps[axis];
    const double vp = optical_potential(plus, beams, pol);
    const double vm = optical_potential(minus, beams, pol);
    CHECK(vp > v0);
    CHECK(vm > v0);
    // central-difference gradient, scaled by the local curvature energy
    CHECK(std::abs(vp - vm) / (vp - v0) < 1e-6);
  }
}

TEST_CASE("axial frequency hits the reference design value") {
  const TrapBeams beams = reference_beams();
  const DiskMirror disk = reference_disk();
  const Polarizability pol = static_polarizability(disk);
  const double omega = axial_frequency(beams, pol, disk);
  CHECK(omega == doctest::Approx(1.24e5).epsilon(0.01));
  CHECK(omega == doctest::Approx(1.230095786350e5).epsilon(1e-10)); // frozen
}

TEST_CASE("axial frequency scales as the square root of intensity") {
  TrapBeams beams = reference_beams();
  const DiskMirror disk = reference_disk();
  const Polarizability pol = static_polarizability(disk);
  const double base = axial_frequency(beams, pol, disk);
  beams.intensity_x *= 4.0;
  beams.intensity_y *= 4.0;
  CHECK(axial_frequency(beams, pol, disk) == doctest::Approx(2.0 * base).epsilon(1e-12));
  beams.intensity_x = 0.0;
  beams.intensity_y = 0.0;
  CHECK(axial_frequency(beams, pol, disk) == 0.0);
}

TEST_CASE("finite-difference curvature reproduces the analytic axial frequency") {
  const TrapBeams beams = reference_beams();
  const DiskMirror disk = reference_disk();
  const Polarizability pol = static_polarizability(disk);
  // independent check of the curvature route against the closed form
  const auto second = [&](double h) {
    const double v0 = optical_potential({0, 0, 0}, beams, pol);
    return (optical_potential({0, 0, h}, beams, pol) - 2.0 * v0 +
            optical_potential({0, 0, -h}, beams, pol)) /
           (h * h);
  };
  const double h = 1e-3 * beams.waist_z;
  const double curvature = (4.0 * second(h / 2.0) - second(h)) / 3.0;
  const double omega_fd = std::sqrt(curvature / disk.mass);
  CHECK(omega_fd == doctest::Approx(axial_frequency(beams, pol, disk)).epsilon(1e-4));
}

TEST_CASE("transverse frequencies at the design point") {
  const TrapBeams beams = reference_beams();
  const DiskMirror disk = reference_disk();
  const Polarizability pol = static_polarizability(disk);
  const TransverseFrequencies t = transverse_frequencies(beams, pol, disk);
  // quoted as 4e3; the curvature route must land within a factor of two
  CHECK(t.x > 2e3);
  CHECK(t.x < 8e3);
  CHECK(t.x == doctest::Approx(t.y).epsilon(1e-12)); // symmetric beams
  CHECK(t.x == doctest::Approx(3.936372e3).epsilon(1e-6)); // frozen
}

TEST_CASE("single-beam transverse frequency matches the Gaussian closed form") {
  TrapBeams beams = reference_beams();
  beams.intensity_y = 0.0;
  const DiskMirror disk = reference_disk();
  const Polarizability pol = static_polarizability(disk);
  const TransverseFrequencies t = transverse_frequencies(beams, pol, disk);
  const double analytic = std::sqrt(
      2.0 * pol.perpendicular * beams.intensity_x /
      (disk.mass * constants::speed_of_light * constants::vacuum_permittivity *
       beams.waist_y * beams.waist_y));
  CHECK(t.y == doctest::Approx(analytic).epsilon(0.01));
}

TEST_CASE("negative curvature reports an untrapped axis") {
  const TrapBeams beams = reference_beams();
  const Polarizability inverted{-1e-24, -2e-24}; // repulsive response
  CHECK_THROWS_WITH_AS(transverse_frequencies(beams, inverted, reference_disk()),
                       doctest::Contains("untrapped axis"), std::domain_error);
}

TEST_CASE("wobble frequency") {
  const TrapBeams beams = reference_beams();
  const DiskMirror disk = reference_disk();
  const Polarizability pol = static_polarizability(disk);
  const double wobble = wobble_frequency(beams, pol, disk);
  CHECK(wobble == doctest::Approx(1.8e4).epsilon(0.05));
  CHECK(wobble == doctest::Approx(1.753581607192e4).epsilon(1e-10)); // frozen

  CHECK(wobble_frequency(beams, {1e-24, 1e-24}, disk) == 0.0); // isotropic response

  TrapBeams brighter = beams;
  brighter.intensity_y *= 4.0;
  CHECK(wobble_frequency(brighter, pol, disk) == doctest::Approx(2.0 * wobble).epsilon(1e-12));

  CHECK_THROWS_AS(wobble_frequency(beams, {1e-25, 2e-25}, disk), std::domain_error);
}

TEST_CASE("axial motion is far faster than the wobble at the design point") {
  const TrapBeams beams = reference_beams();
  const DiskMirror disk = reference_disk();
  const Polarizability pol = static_polarizability(disk);
  const TrapCharacterization trap = characterize_trap(beams, pol, disk);
  CHECK(trap.omega_z / trap.omega_wob > 5.0);
}

TEST_CASE("field-variation warnings") {
  CHECK(field_variation_warnings(reference_beams(), reference_disk()).empty());
  TrapBeams tight = reference_beams();
  tight.waist_z = 2e-6; // disk thicker than the axial waist
  CHECK_FALSE(field_variation_warnings(tight, reference_disk()).empty());
}

TEST_CASE("beam validation") {
  TrapBeams bad = reference_beams();
  bad.waist_x = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = reference_beams();
  bad.intensity_x = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = reference_beams();
  bad.intensity_noise = -1e-12;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

} // TEST_SUITE
