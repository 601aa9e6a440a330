#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "nli/fock.hpp"
#include "nli/moments.hpp"
#include "nli/transfer.hpp"
#include "test_helpers.hpp"

using namespace nli;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

TEST_CASE("zero gain, no loss: the interferometer is the identity on a1") {
  InterferometerConfig cfg;  // all gains 0, T = eta = 1
  const TransferCoefficients tc = build_transfer(cfg);
  CHECK(tc.a1 == std::complex<double>(1.0, 0.0));
  CHECK(std::abs(tc.alpha1) == 0.0);
  CHECK(std::abs(tc.b1) == 0.0);
  CHECK(std::abs(tc.beta1) == 0.0);
  CHECK(tc.ineff1 == 0.0);
}

TEST_CASE("zero gain reduces to pure loss") {
  InterferometerConfig cfg;
  cfg.loss1 = LossChannel(0.6);
  cfg.eta1 = DetectorEfficiency(0.3);
  const TransferCoefficients tc = build_transfer(cfg);
  CHECK(std::norm(tc.a1) == approx_rel(0.18, 1e-14));
  CHECK(std::norm(tc.b1) == approx_rel(0.12, 1e-14));
  CHECK(std::abs(tc.alpha1) == 0.0);
  CHECK(std::abs(tc.beta1) == 0.0);
}

TEST_CASE("zero-gain collapse kills every pair coefficient exactly") {
  InterferometerConfig cfg;
  cfg.loss1 = LossChannel(0.37);
  cfg.loss2 = LossChannel(0.81);
  cfg.eta1 = DetectorEfficiency(0.5);
  cfg.eta2 = DetectorEfficiency(0.9);
  cfg.opa_a.phase = 1.1;
  cfg.opa_b.phase = -0.3;
  const TransferCoefficients tc = build_transfer(cfg);
  CHECK(std::abs(tc.alpha1) == 0.0);
  CHECK(std::abs(tc.beta1) == 0.0);
  CHECK(std::abs(tc.alpha2) == 0.0);
  CHECK(std::abs(tc.beta2) == 0.0);
}

TEST_CASE("row-1 moduli match the Fock circuit's single-excitation response") {
  // Reference operating point; the oracle knows nothing about the coefficient
  // algebra, it just simulates the circuit element by element.
  const InterferometerConfig cfg = reference_point();
  const CoefficientModuli mod = coefficient_moduli(cfg, 0.0);
  const double base = fock_simulate(cfg, 0.0).mean_n1;

  InterferometerConfig seeded1 = cfg;
  seeded1.seed_a1 = Seed::number(1);
  const double a1_sq = fock_simulate(seeded1, 0.0).mean_n1 - base;

  InterferometerConfig seeded2 = cfg;
  seeded2.seed_a2 = Seed::number(1);
  const double alpha1_sq = fock_simulate(seeded2, 0.0).mean_n1 - base;

  const double beta1_sq = base - alpha1_sq;

  CHECK(mod.a1_sq == approx_rel(a1_sq, 1e-8));
  CHECK(mod.alpha1_sq == approx_rel(alpha1_sq, 1e-8));
  CHECK(mod.beta1_sq == approx_rel(beta1_sq, 1e-8));
}

TEST_CASE("cross term vanishes at phi = pi/2") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 32; ++k) {
    const InterferometerConfig cfg = random_interferometer(rng);
    const CoefficientModuli mod = coefficient_moduli(cfg, kPi / 2.0);
    const double ua = cfg.opa_a.cosh_sq(), va = cfg.opa_a.sinh_sq();
    const double ub = cfg.opa_b.cosh_sq(), vb = cfg.opa_b.sinh_sq();
    const double expected =
        cfg.eta1.eta * (cfg.loss1.transmission * ua * ub + cfg.loss2.transmission * va * vb);
    if (expected == 0.0)
      CHECK(mod.a1_sq <= 1e-30);
    else
      CHECK(mod.a1_sq == approx_rel(expected, 1e-12));
  }
}

TEST_CASE("balanced lossless |A1|^2 at phi = 0 equals cosh^2(2G)") {
  InterferometerConfig cfg;
  cfg.opa_a = SqueezingParams(0.1, 0.0);
  cfg.opa_b = SqueezingParams(0.1, 0.0);
  const CoefficientModuli mod = coefficient_moduli(cfg, 0.0);
  // frozen from the Fock oracle's single-excitation response at G = 0.1
  CHECK(mod.a1_sq == approx_rel(1.0405361859192273, 1e-12));
  const double c2 = std::cosh(0.2);
  CHECK(mod.a1_sq == approx_rel(c2 * c2, 1e-13));

  InterferometerConfig seeded = cfg;
  seeded.seed_a1 = Seed::number(1);
  FockOptions opt;
  opt.cutoffs = std::array<int, 6>{9, 9, 0, 0, 0, 0};
  const double oracle =
      fock_simulate(seeded, 0.0, opt).mean_n1 - fock_simulate(cfg, 0.0, opt).mean_n1;
  CHECK(mod.a1_sq == approx_rel(oracle, 1e-8));
}

TEST_CASE("|A1|^2 at the reference point, phi = pi, against the moment oracle") {
  InterferometerConfig cfg = reference_point();
  cfg.opa_a.phase = kPi;  // relative phase pi

  const double u = std::cosh(1e-3) * std::cosh(1e-3);
  const double v = std::sinh(1e-3) * std::sinh(1e-3);
  const double direct = 0.3 * (0.6 * u * u + 0.4 * v * v - 2.0 * std::sqrt(0.24) * u * v);

  const CoefficientModuli mod = coefficient_moduli(cfg, kPi);
  CHECK(mod.a1_sq == approx_rel(direct, 1e-12));

  const TransferCoefficients tc = build_transfer(cfg);
  const double oracle = moment_expectation(tc, Seed::number(1), Seed::vacuum(), 1) -
                        moment_expectation(tc, Seed::vacuum(), Seed::vacuum(), 1);
  CHECK(mod.a1_sq == approx_rel(oracle, 1e-12));
}

TEST_CASE("commutator preservation over 10^4 random configs") {
  std::mt19937_64 rng(42);
  double worst1 = 0.0, worst2 = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const TransferCoefficients tc = build_transfer(random_interferometer(rng));
    worst1 = std::max(worst1, std::abs(tc.row1_commutator_defect()));
    worst2 = std::max(worst2, std::abs(tc.row2_commutator_defect()));
  }
  CHECK(worst1 <= 1e-10);
  CHECK(worst2 <= 1e-10);
}

TEST_CASE("every modulus is a + b cos(phi) with b >= 0") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> phase(0.0, kTwoPi);
  for (int k = 0; k < 100; ++k) {
    const InterferometerConfig cfg = random_interferometer(rng);
    const auto pick = [&](const CoefficientModuli& m, int which) {
      switch (which) {
        case 0: return m.a1_sq;
        case 1: return m.alpha1_sq;
        case 2: return m.b1_sq;
        default: return m.beta1_sq;
      }
    };
    for (int which = 0; which < 4; ++which) {
      const double f0 = pick(coefficient_moduli(cfg, 0.0), which);
      const double f90 = pick(coefficient_moduli(cfg, kPi / 2.0), which);
      const double f180 = pick(coefficient_moduli(cfg, kPi), which);
      const double a = f90;
      const double b = 0.5 * (f0 - f180);
      CHECK(b >= -1e-12 * (a + std::abs(b)));
      for (int j = 0; j < 17; ++j) {
        const double phi = phase(rng);
        const double fitted = a + b * std::cos(phi);
        CHECK(std::abs(pick(coefficient_moduli(cfg, phi), which) - fitted) <=
              1e-12 * (a + std::abs(b)) + 1e-300);
      }
    }
  }
}

TEST_CASE("global pump phase shifts leave the moduli invariant") {
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> shift(-10.0, 10.0);
  for (int k = 0; k < 200; ++k) {
    InterferometerConfig cfg = random_interferometer(rng, 0.01);
    const double phi = cfg.relative_phase();
    const double delta = shift(rng);
    InterferometerConfig shifted = cfg;
    shifted.opa_a.phase += delta;
    shifted.opa_b.phase += delta;

    const TransferCoefficients a = build_transfer(cfg);
    const TransferCoefficients b = build_transfer(shifted);
    const auto close = [](double x, double y) {
      return std::abs(x - y) <= 1e-12 * (std::abs(x) + std::abs(y)) + 1e-300;
    };
    CHECK(close(std::norm(a.a1), std::norm(b.a1)));
    CHECK(close(std::norm(a.alpha1), std::norm(b.alpha1)));
    CHECK(close(std::norm(a.b1), std::norm(b.b1)));
    CHECK(close(std::norm(a.beta1), std::norm(b.beta1)));

    // and the closed-form moduli track the complex construction
    const CoefficientModuli mod = coefficient_moduli(cfg, phi);
    CHECK(close(mod.a1_sq, std::norm(a.a1)));
    CHECK(close(mod.alpha1_sq, std::norm(a.alpha1)));
    CHECK(close(mod.b1_sq, std::norm(a.b1)));
    CHECK(close(mod.beta1_sq, std::norm(a.beta1)));
  }
}
