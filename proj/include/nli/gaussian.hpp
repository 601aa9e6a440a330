#pragma once

#include <complex>

#include <Eigen/Dense>

#include "nli/parameters.hpp"

namespace nli {

/// Six-mode Gaussian state in the quadrature convention
///   x = (a + a^dag)/sqrt(2),  p = (a - a^dag)/(i sqrt(2)),
/// vacuum covariance = I/2.  Component order (x0, p0, x1, p1, ..., x5, p5).
struct GaussianState {
  Eigen::Matrix<double, 12, 1> mean = Eigen::Matrix<double, 12, 1>::Zero();
  Eigen::Matrix<double, 12, 12> cov =
      0.5 * Eigen::Matrix<double, 12, 12>::Identity();
};

/// 4x4 symplectic matrix of the two-mode squeezer with gain G and phase.
Eigen::Matrix4d two_mode_squeeze_symplectic(double gain, double phase);

/// 4x4 symplectic matrix of the beam splitter, first mode transmitted with
/// amplitude cos(theta).
Eigen::Matrix4d beam_splitter_symplectic(double theta);

/// Apply a two-mode symplectic to modes (i, j) of the state.
void apply_symplectic(GaussianState& st, int i, int j, const Eigen::Matrix4d& s);

/// Symplectic spectrum of a covariance matrix (six values, each >= 1/2 for a
/// physical state, all exactly 1/2 for a pure one).
Eigen::Matrix<double, 6, 1> symplectic_eigenvalues(const Eigen::Matrix<double, 12, 12>& cov);

struct GaussianResult {
  double mean_n1 = 0.0;
  double var_n1 = 0.0;
  double mean_n2 = 0.0;
};

/// Propagate the (vacuum/coherent-seeded) input through the circuit at
/// relative phase `phi`.  Photon moments come from the quadrature moments by
/// Wick expansion:
///   <n>     = (s_xx + s_pp - 1)/2 + (xbar^2 + pbar^2)/2
///   Var(n)  = Tr(s^2)/2 - 1/4 + d^T s d
/// with s the mode's 2x2 covariance block and d its mean.  Exact for any mu
/// and gain; throws NonGaussianSeed for number seeds with count >= 1.
GaussianResult gaussian_simulate(const InterferometerConfig& cfg, double phi);

/// Final Gaussian state of the circuit (for invariant checks).
GaussianState gaussian_output_state(const InterferometerConfig& cfg, double phi);

}  // namespace nli
