#include "nli/gaussian.hpp"

#include <algorithm>
#include <cmath>

namespace nli {

Eigen::Matrix4d two_mode_squeeze_symplectic(double gain, double phase) {
  // From c1' = u c1 + v c2^dag with u = cosh G, v = e^{i phase} sinh G,
  // written on (x1, p1, x2, p2).
  const double u = std::cosh(gain);
  const double w = std::sinh(gain);
  const double c = std::cos(phase), s = std::sin(phase);
  Eigen::Matrix4d m;
  m << u, 0, w * c, w * s,
       0, u, w * s, -w * c,
       w * c, w * s, u, 0,
       w * s, -w * c, 0, u;
  return m;
}

Eigen::Matrix4d beam_splitter_symplectic(double theta) {
  const double t = std::cos(theta), r = std::sin(theta);
  Eigen::Matrix4d m;
  m << t, 0, r, 0,
       0, t, 0, r,
       -r, 0, t, 0,
       0, -r, 0, t;
  return m;
}

void apply_symplectic(GaussianState& st, int i, int j, const Eigen::Matrix4d& s) {
  Eigen::Matrix<double, 12, 12> full = Eigen::Matrix<double, 12, 12>::Identity();
  full.block<2, 2>(2 * i, 2 * i) = s.block<2, 2>(0, 0);
  full.block<2, 2>(2 * i, 2 * j) = s.block<2, 2>(0, 2);
  full.block<2, 2>(2 * j, 2 * i) = s.block<2, 2>(2, 0);
  full.block<2, 2>(2 * j, 2 * j) = s.block<2, 2>(2, 2);
  st.mean = full * st.mean;
  st.cov = full * st.cov * full.transpose();
}

Eigen::Matrix<double, 6, 1> symplectic_eigenvalues(const Eigen::Matrix<double, 12, 12>& cov) {
  Eigen::Matrix<double, 12, 12> omega = Eigen::Matrix<double, 12, 12>::Zero();
  for (int k = 0; k < 6; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  // Eigenvalues of Omega * cov come in pairs +- i nu_k.
  Eigen::EigenSolver<Eigen::Matrix<double, 12, 12>> es(omega * cov);
  Eigen::Matrix<double, 12, 1> mags = es.eigenvalues().cwiseAbs();
  std::sort(mags.data(), mags.data() + 12);
  Eigen::Matrix<double, 6, 1> nu;
  for (int k = 0; k < 6; ++k) nu[k] = 0.5 * (mags[2 * k] + mags[2 * k + 1]);
  return nu;
}

namespace {

void seed_to_mean(GaussianState& st, int mode, const Seed& seed) {
  if (seed.is_number() && seed.number_count() > 0)
    throw NonGaussianSeed("Gaussian engine cannot propagate a number-state seed");
  if (seed.is_coherent()) {
    const std::complex<double> mu = seed.amplitude();
    st.mean[2 * mode] = std::sqrt(2.0) * mu.real();
    st.mean[2 * mode + 1] = std::sqrt(2.0) * mu.imag();
  }
}

}  // namespace

GaussianState gaussian_output_state(const InterferometerConfig& cfg, double phi) {
  const InterferometerConfig eff = with_relative_phase(cfg, phi);

  GaussianState st;
  seed_to_mean(st, 0, eff.seed_a1);
  seed_to_mean(st, 1, eff.seed_a2);

  const auto bs_angle = [](double transmission) {
    return std::acos(std::sqrt(std::min(1.0, std::max(0.0, transmission))));
  };

  apply_symplectic(st, 0, 1, two_mode_squeeze_symplectic(eff.opa_a.gain, eff.opa_a.phase));
  apply_symplectic(st, 0, 2, beam_splitter_symplectic(bs_angle(eff.loss1.transmission)));
  apply_symplectic(st, 1, 3, beam_splitter_symplectic(bs_angle(eff.loss2.transmission)));
  apply_symplectic(st, 0, 1, two_mode_squeeze_symplectic(eff.opa_b.gain, eff.opa_b.phase));
  apply_symplectic(st, 0, 4, beam_splitter_symplectic(bs_angle(eff.eta1.eta)));
  apply_symplectic(st, 1, 5, beam_splitter_symplectic(bs_angle(eff.eta2.eta)));
  return st;
}

namespace {

double mode_mean_photons(const GaussianState& st, int mode) {
  const auto s = st.cov.block<2, 2>(2 * mode, 2 * mode);
  const auto d = st.mean.segment<2>(2 * mode);
  return 0.5 * (s(0, 0) + s(1, 1) - 1.0) + 0.5 * d.squaredNorm();
}

double mode_var_photons(const GaussianState& st, int mode) {
  const auto s = st.cov.block<2, 2>(2 * mode, 2 * mode);
  const auto d = st.mean.segment<2>(2 * mode);
  return 0.5 * (s * s).trace() - 0.25 + d.dot(s * d);
}

}  // namespace

GaussianResult gaussian_simulate(const InterferometerConfig& cfg, double phi) {
  const GaussianState st = gaussian_output_state(cfg, phi);
  GaussianResult res;
  res.mean_n1 = mode_mean_photons(st, 0);
  res.var_n1 = mode_var_photons(st, 0);
  res.mean_n2 = mode_mean_photons(st, 1);
  return res;
}

}  // namespace nli
