#pragma once

#include <complex>

#include "nli/parameters.hpp"

namespace nli {

/// Entries of the overall input->output Bogoliubov transfer matrix.  Row 1
/// maps (a1, a2^dag, l1, l2^dag, d1, d2^dag) onto b1 with coefficients
/// (a1, alpha1, b1, beta1, ineff1, 0); row 2 maps the conjugate set onto
/// b2^dag.  Commutator preservation ties each row's moduli together:
///   |A_k|^2 + |B_k|^2 + (1 - eta_k) - |alpha_k|^2 - |beta_k|^2 = 1.
struct TransferCoefficients {
  std::complex<double> a1, alpha1, b1, beta1;
  std::complex<double> a2, alpha2, b2, beta2;
  double ineff1 = 0.0;  // sqrt(1 - eta1)
  double ineff2 = 0.0;  // sqrt(1 - eta2)

  double row1_commutator_defect() const;
  double row2_commutator_defect() const;
};

/// Exact complex transfer coefficients for the configured interferometer.
TransferCoefficients build_transfer(const InterferometerConfig& cfg);

/// Squared moduli of the row-1 coefficients at relative phase `phi`.  These
/// are the only combinations the closed-form observables need; each one is of
/// the form a + b cos(phi) with b >= 0.
struct CoefficientModuli {
  double a1_sq = 0.0;
  double alpha1_sq = 0.0;
  double b1_sq = 0.0;
  double beta1_sq = 0.0;
};

CoefficientModuli coefficient_moduli(const InterferometerConfig& cfg, double phi);

}  // namespace nli
