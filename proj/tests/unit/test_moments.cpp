#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nli/moments.hpp"
#include "nli/observables.hpp"
#include "test_helpers.hpp"

using namespace nli;

TEST_CASE("normal ordering rewrites single-mode words correctly") {
  // a a^dag = a^dag a + 1
  const auto terms = normal_order({false, true});
  double n_coeff = 0.0, id_coeff = 0.0;
  for (const auto& t : terms) {
    if (t.creators == 1 && t.annihilators == 1) n_coeff += t.coeff;
    if (t.creators == 0 && t.annihilators == 0) id_coeff += t.coeff;
  }
  CHECK(n_coeff == 1.0);
  CHECK(id_coeff == 1.0);

  // <0| a a a^dag a^dag |0> = 2
  std::complex<double> val = 0.0;
  for (const auto& t : normal_order({false, false, true, true}))
    val += t.coeff * single_mode_moment(Seed::vacuum(), t.creators, t.annihilators);
  CHECK(val.real() == 2.0);
  CHECK(val.imag() == 0.0);
}

TEST_CASE("single-mode moments of number and coherent states") {
  CHECK(single_mode_moment(Seed::number(5), 1, 1).real() == 5.0);
  CHECK(single_mode_moment(Seed::number(5), 2, 2).real() == 20.0);
  CHECK(single_mode_moment(Seed::number(5), 6, 6).real() == 0.0);  // falls off the ladder
  CHECK(single_mode_moment(Seed::number(5), 1, 2) == std::complex<double>(0.0, 0.0));

  const std::complex<double> mu = std::polar(1.7, 0.9);
  const std::complex<double> expect = std::conj(mu) * mu * mu;
  CHECK(single_mode_moment(Seed::coherent(mu), 1, 2).real() ==
        approx_rel(expect.real(), 1e-14));

  CHECK(single_mode_moment(Seed::vacuum(), 0, 0).real() == 1.0);
  CHECK(single_mode_moment(Seed::vacuum(), 0, 1).real() == 0.0);
}

TEST_CASE("term counts multiply exactly under products") {
  InterferometerConfig cfg = reference_point();
  const TransferCoefficients tc = build_transfer(cfg);
  const MonomialExpansion b1 = b1_expansion(tc);
  CHECK(b1.terms.size() == 6);
  const MonomialExpansion n1 = product(adjoint(b1), b1);
  CHECK(n1.terms.size() == 36);
  CHECK(product(n1, n1).terms.size() == 1296);
}

TEST_CASE("first moment on vacuum is |alpha1|^2 + |beta1|^2") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    const InterferometerConfig cfg = random_interferometer(rng, 0.01, 2.0);
    const TransferCoefficients tc = build_transfer(cfg);
    const double expect = std::norm(tc.alpha1) + std::norm(tc.beta1);
    const double got = moment_expectation(tc, Seed::vacuum(), Seed::vacuum(), 1);
    CHECK(got == approx_rel(expect, 1e-13));
  }
}

TEST_CASE("first moment with m = 7 is 8|alpha1|^2 + |beta1|^2") {
  InterferometerConfig cfg = reference_point();
  cfg.opa_a.phase = 0.35;
  const TransferCoefficients tc = build_transfer(cfg);
  const double expect = 8.0 * std::norm(tc.alpha1) + std::norm(tc.beta1);
  const double got = moment_expectation(tc, Seed::vacuum(), Seed::number(7), 1);
  CHECK(got == approx_rel(expect, 1e-13));
}

TEST_CASE("second moment at the reference point reproduces the expanded inner product") {
  // All eight groups of the expanded <N1^2>, assembled from the moduli.
  InterferometerConfig cfg = reference_point();
  const double phi = 2.0;
  const double m = 2.0;
  const CoefficientModuli mod = coefficient_moduli(cfg, phi);
  const double ie = 1.0 - cfg.eta1.eta;
  const double mean = mod.alpha1_sq * (m + 1.0) + mod.beta1_sq;
  const double expect = mean * mean + mod.a1_sq * mod.alpha1_sq * (m + 1.0) +
                        mod.alpha1_sq * mod.b1_sq * (m + 1.0) +
                        mod.alpha1_sq * (m + 1.0) * ie + mod.a1_sq * mod.beta1_sq +
                        m * mod.alpha1_sq * mod.beta1_sq + mod.b1_sq * mod.beta1_sq +
                        mod.beta1_sq * ie;

  const TransferCoefficients tc = build_transfer(with_relative_phase(cfg, phi));
  const double got = moment_expectation(tc, Seed::vacuum(), Seed::number(2), 2);
  CHECK(got == approx_rel(expect, 1e-12));
}

TEST_CASE("moment stats stay exact for large seeds and gains") {
  InterferometerConfig cfg;
  cfg.opa_a = SqueezingParams(2.0, 0.8);
  cfg.opa_b = SqueezingParams(1.7, 0.1);
  cfg.loss1 = LossChannel(0.55);
  cfg.loss2 = LossChannel(0.71);
  cfg.eta1 = DetectorEfficiency(0.4);
  const double phi = cfg.relative_phase();
  const TransferCoefficients tc = build_transfer(cfg);

  const MomentStats big = moment_stats(tc, Seed::vacuum(), Seed::number(10000));
  CHECK(big.mean_n1 == approx_rel(mean_n1_number(cfg, 0.0, 10000.0, phi), 1e-11));
  CHECK(big.var_n1 == approx_rel(var_n1_number(cfg, 10000.0, phi), 1e-10));

  const std::complex<double> mu = std::polar(std::sqrt(5000.0), 2.2);
  const MomentStats coh = moment_stats(tc, Seed::vacuum(), Seed::coherent(mu));
  CHECK(coh.mean_n1 == approx_rel(mean_n1_coherent(cfg, mu, phi), 1e-11));
  CHECK(coh.var_n1 == approx_rel(var_n1_coherent(cfg, mu, phi), 1e-10));
}
