#include <doctest.h>

#include <cmath>

#include "nli/parameters.hpp"

using namespace nli;

TEST_CASE("squeezing parameters enforce the gain range") {
  CHECK_THROWS_AS(SqueezingParams(-0.1, 0.0), InvalidParameter);
  CHECK_THROWS_AS(SqueezingParams(20.5, 0.0), InvalidParameter);
  CHECK_THROWS_AS(SqueezingParams(std::nan(""), 0.0), InvalidParameter);
  CHECK_NOTHROW(SqueezingParams(0.0, 0.0));
  CHECK_NOTHROW(SqueezingParams(20.0, -3.0));
}

TEST_CASE("cosh^2 - sinh^2 = 1 up to round-off across the gain range") {
  for (double g : {0.0, 1e-6, 1e-3, 0.1, 1.0, 3.0, 10.0, 20.0}) {
    SqueezingParams p(g, 0.4);
    CHECK(p.cosh_sq() >= 1.0);
    CHECK(p.sinh_sq() >= 0.0);
    CHECK(std::abs(p.cosh_sq() - p.sinh_sq() - 1.0) <= 1e-12 * p.cosh_sq());
  }
}

TEST_CASE("loss channel and detector efficiency ranges") {
  CHECK_THROWS_AS(LossChannel(-0.01), InvalidParameter);
  CHECK_THROWS_AS(LossChannel(1.01), InvalidParameter);
  CHECK_THROWS_AS(DetectorEfficiency(2.0), InvalidParameter);
  // 0 and 1 are both legal endpoints
  CHECK_NOTHROW(LossChannel(0.0));
  CHECK_NOTHROW(DetectorEfficiency(1.0));

  for (double t : {0.0, 0.25, 0.6, 1.0}) {
    LossChannel lc(t);
    CHECK(lc.transmission + lc.reflection() == 1.0);
  }
}

TEST_CASE("seed mean photon accessor") {
  CHECK(Seed::vacuum().mean_photons() == 0.0);
  CHECK(Seed::number(7).mean_photons() == 7.0);
  CHECK(Seed::coherent({3.0, 4.0}).mean_photons() == doctest::Approx(25.0).epsilon(1e-15));
  CHECK_THROWS_AS(Seed::number(-1), InvalidParameter);

  CHECK(Seed::vacuum().is_gaussian());
  CHECK(Seed::coherent(1.5).is_gaussian());
  CHECK(Seed::number(0).is_gaussian());
  CHECK(!Seed::number(1).is_gaussian());
}

TEST_CASE("relative phase is the OPA phase difference") {
  InterferometerConfig cfg;
  cfg.opa_a = SqueezingParams(0.1, 2.0);
  cfg.opa_b = SqueezingParams(0.1, 0.7);
  CHECK(cfg.relative_phase() == doctest::Approx(1.3).epsilon(1e-15));

  const InterferometerConfig shifted = with_relative_phase(cfg, 0.25);
  CHECK(shifted.relative_phase() == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(shifted.opa_a.phase == cfg.opa_a.phase);
}
