#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "nli/gaussian.hpp"
#include "nli/observables.hpp"
#include "test_helpers.hpp"

using namespace nli;

namespace {

Eigen::Matrix4d omega4() {
  Eigen::Matrix4d w = Eigen::Matrix4d::Zero();
  w.block<2, 2>(0, 0) << 0, 1, -1, 0;
  w.block<2, 2>(2, 2) << 0, 1, -1, 0;
  return w;
}

}  // namespace

TEST_CASE("gate matrices are symplectic") {
  const Eigen::Matrix4d w = omega4();
  for (double g : {0.0, 0.3, 1.5}) {
    for (double ph : {0.0, 0.9, 4.0}) {
      const Eigen::Matrix4d s = two_mode_squeeze_symplectic(g, ph);
      CHECK((s * w * s.transpose() - w).norm() < 1e-12);
    }
  }
  for (double th : {0.0, 0.4, 1.2}) {
    const Eigen::Matrix4d s = beam_splitter_symplectic(th);
    CHECK((s * w * s.transpose() - w).norm() < 1e-14);
  }
}

TEST_CASE("vacuum in, zero gain: nothing at either detector") {
  InterferometerConfig cfg;
  cfg.loss1 = LossChannel(0.5);
  cfg.eta1 = DetectorEfficiency(0.7);
  const GaussianResult r = gaussian_simulate(cfg, 0.0);
  CHECK(std::abs(r.mean_n1) < 1e-15);
  CHECK(std::abs(r.var_n1) < 1e-15);
  CHECK(std::abs(r.mean_n2) < 1e-15);
}

TEST_CASE("coherent light through loss is pure attenuation") {
  InterferometerConfig cfg;
  cfg.seed_a2 = Seed::coherent(2.0);  // |mu|^2 = 4 on the undetected arm
  cfg.loss2 = LossChannel(0.7);
  cfg.eta2 = DetectorEfficiency(0.5);
  const GaussianResult r = gaussian_simulate(cfg, 0.0);
  CHECK(r.mean_n2 == approx_rel(4.0 * 0.7 * 0.5, 1e-13));
  CHECK(std::abs(r.mean_n1) < 1e-14);
}

TEST_CASE("reference point with |mu|^2 = 10 matches the closed forms to 1e-10") {
  InterferometerConfig cfg = reference_point();
  const std::complex<double> mu = std::sqrt(10.0);
  cfg.seed_a2 = Seed::coherent(mu);
  const GaussianResult r = gaussian_simulate(cfg, 1.0);
  CHECK(r.mean_n1 == approx_rel(mean_n1_coherent(cfg, mu, 1.0), 1e-10));
  CHECK(r.var_n1 == approx_rel(var_n1_coherent(cfg, mu, 1.0), 1e-10));
}

TEST_CASE("number seeds are rejected") {
  InterferometerConfig cfg = reference_point();
  cfg.seed_a2 = Seed::number(1);
  CHECK_THROWS_AS(gaussian_simulate(cfg, 0.0), NonGaussianSeed);
  cfg.seed_a2 = Seed::number(0);  // |0> is vacuum, fine
  CHECK_NOTHROW(gaussian_simulate(cfg, 0.0));
}

TEST_CASE("lossless circuits keep the state pure: symplectic spectrum 1/2") {
  InterferometerConfig cfg;
  cfg.opa_a = SqueezingParams(0.8, 0.3);
  cfg.opa_b = SqueezingParams(1.1, 1.9);
  cfg.seed_a2 = Seed::coherent({0.4, -1.2});
  const GaussianState st = gaussian_output_state(cfg, 0.6);
  const auto nu = symplectic_eigenvalues(st.cov);
  for (int k = 0; k < 6; ++k) CHECK(std::abs(nu[k] - 0.5) < 1e-12);
}

TEST_CASE("output covariance always satisfies the uncertainty relation") {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 100; ++k) {
    InterferometerConfig cfg = random_interferometer(rng, 0.0, 2.0);
    if (k % 2 == 0)
      cfg.seed_a2 = Seed::coherent(std::polar(2.0, 0.3 * k));
    const GaussianState st = gaussian_output_state(cfg, cfg.relative_phase());
    CHECK((st.cov - st.cov.transpose()).norm() < 1e-12);
    const auto nu = symplectic_eigenvalues(st.cov);
    for (int j = 0; j < 6; ++j) CHECK(nu[j] >= 0.5 - 1e-10);
  }
}

TEST_CASE("results depend on the seed phase not at all") {
  InterferometerConfig cfg = reference_point();
  cfg.opa_a = SqueezingParams(0.4, 1.1);
  cfg.opa_b = SqueezingParams(0.6, 0.2);
  const double msq = 7.3;
  GaussianResult ref;
  for (int k = 0; k < 8; ++k) {
    InterferometerConfig c = cfg;
    c.seed_a2 = Seed::coherent(std::polar(std::sqrt(msq), 0.7 * k));
    const GaussianResult r = gaussian_simulate(c, 2.2);
    if (k == 0) {
      ref = r;
      continue;
    }
    CHECK(r.mean_n1 == approx_rel(ref.mean_n1, 1e-12));
    CHECK(r.var_n1 == approx_rel(ref.var_n1, 1e-12));
  }
}
