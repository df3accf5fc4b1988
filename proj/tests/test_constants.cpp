#include <doctest.h>

#include <cmath>

#include "optospring/constants.hpp"

using namespace optospring;

TEST_SUITE("units") {

TEST_CASE("pressure conversion") {
  CHECK(units::pascal_from_torr(1e-6) == doctest::Approx(1.33322e-4).epsilon(1e-12));
  CHECK(units::pascal_from_torr(0.0) == 0.0);
  // standard atmosphere identity: 760 torr = 101325 Pa
  CHECK(units::pascal_from_torr(760.0) == doctest::Approx(1.01325e5).epsilon(1e-3));
  CHECK_THROWS_AS(units::pascal_from_torr(-1.0), std::domain_error);
  CHECK_THROWS_AS(units::torr_from_pascal(-1.0), std::domain_error);
}

TEST_CASE("intensity conversion") {
  CHECK(units::intensity_from_mw_per_um2(80.0) == doctest::Approx(8.0e10).epsilon(1e-12));
  CHECK(units::intensity_from_mw_per_um2(0.0) == 0.0);
  CHECK(units::intensity_from_mw_per_um2(1.0) == doctest::Approx(1e9).epsilon(1e-12));
  CHECK_THROWS_AS(units::intensity_from_mw_per_um2(-0.1), std::domain_error);
}

TEST_CASE("kHz rates carry no 2 pi factor") {
  CHECK(units::AngularRate::from_khz(10.0).value() == 1.0e4);
  CHECK(units::AngularRate::from_khz(-160.0).value() == -1.6e5);
}

TEST_CASE("round trips are identity") {
  const double values[] = {1e-9, 1e-6, 0.37, 1.0, 760.0, 8e4};
  for (double v : values) {
    CHECK(units::torr_from_pascal(units::pascal_from_torr(v)) ==
          doctest::Approx(v).epsilon(1e-12));
    CHECK(units::mw_per_um2_from_intensity(units::intensity_from_mw_per_um2(v)) ==
          doctest::Approx(v).epsilon(1e-12));
  }
}

TEST_CASE("pinned constants") {
  CHECK(constants::speed_of_light == 2.99792458e8);
  CHECK(constants::vacuum_permittivity == 8.8541878128e-12);
  CHECK(constants::hbar == 1.054571817e-34);
  CHECK(constants::boltzmann == 1.380649e-23);
}

} // TEST_SUITE
