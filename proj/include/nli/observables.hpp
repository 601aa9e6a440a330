#pragma once

#include <complex>
#include <optional>

#include "nli/parameters.hpp"
#include "nli/transfer.hpp"

namespace nli {

/// All detector-D1 figures of merit evaluated at one relative phase.
/// var_n1, delta_phi_sq and snr have closed forms only for an unseeded or
/// a2-seeded interferometer; with a number seed on the detected mode they are
/// reported absent.  delta_phi_sq is also absent where sin(phi) = 0.
struct ObservableReport {
  double phi = 0.0;
  double mean_n1 = 0.0;
  std::optional<double> var_n1;
  std::optional<double> visibility;
  double contrast = 0.0;
  std::optional<double> delta_phi_sq;
  std::optional<double> snr;
};

/// Result of minimizing the phase variance over phi in (0, pi).
/// ql_value is the ideal-interferometer benchmark for the same mean seed
/// photon number; ratio_db compares `value` against the *unseeded* benchmark,
/// which is the normalization used for sensitivity plots.
struct SensitivityOptimum {
  double phi_min = 0.0;
  double value = 0.0;
  double ql_value = 0.0;
  double ratio_db = 0.0;
};

/// Expected photon number at D1 with number seeds |n> on a1 and |m> on a2.
/// m is accepted as a real "effective" seed so the coherent path can share it.
double mean_n1_number(const InterferometerConfig& cfg, double n, double m, double phi);

/// Expected photon number at D1 with a coherent seed |mu> on a2 (a1 vacuum).
/// Depends on mu only through |mu|^2.
double mean_n1_coherent(const InterferometerConfig& cfg, std::complex<double> mu, double phi);

/// Closed-form derivative d<N1>/dphi for an a2 seed of mean photon number m.
double mean_n1_dphi(const InterferometerConfig& cfg, double m, double phi);

/// Fringe visibility for number seeding.  Throws DarkInterferometer when the
/// fringe denominator vanishes (no light at D1 for any phase).
double visibility_number(const InterferometerConfig& cfg, double n, double m);

/// Visibility from the fringe extrema (max - min)/(max + min); agrees with
/// visibility_number to round-off and is kept as the independent route.
double visibility_from_extrema(const InterferometerConfig& cfg, double n, double m);

/// Balance-parameter form of the visibility (a2 seeding only):
///   V = 2 gamma / (1 + gamma^2 + R2 / ((m+1) T2 U_A)).
/// Throws Degenerate when gamma is undefined (T2 = 0 or G_B = 0).
struct GammaVisibility {
  double gamma = 0.0;
  double visibility = 0.0;
};
GammaVisibility visibility_gamma_form(const InterferometerConfig& cfg, double m);

/// Fringe contrast <N1>(0) - <N1>(pi); n and m contribute symmetrically.
double contrast(const InterferometerConfig& cfg, double n, double m);

/// Photon-number variance at D1, a2 seeded with |m> (a1 vacuum).
double var_n1_number(const InterferometerConfig& cfg, double m, double phi);

/// Photon-number variance at D1, a2 seeded with |mu>; exceeds the matched
/// number-state variance by exactly |mu|^2 |alpha1|^4.
double var_n1_coherent(const InterferometerConfig& cfg, std::complex<double> mu, double phi);

/// Error-propagation phase variance Var(N1) / (d<N1>/dphi)^2 for the given
/// a2 seed.  Throws DivergentSensitivity where |sin phi| <= 1e-12 and
/// Degenerate when any of G_A, G_B, T1, T2, eta1 vanishes.
double phase_variance(const InterferometerConfig& cfg, const Seed& seed_a2, double phi);

/// Quantum-limited phase variance of the ideal (lossless, unit-efficiency,
/// gain-balanced) interferometer: 1 / (4 (m+1) sinh^2 G (sinh^2 G + 1)).
double ql_phase_variance(double mean_seed, double gain);

/// Numerical minimum of the phase variance over phi in (0, pi): 512-point
/// coarse scan with 1e-6 end margins, then golden-section refinement to an
/// interval below 1e-10 rad.
SensitivityOptimum minimize_phase_variance(const InterferometerConfig& cfg, const Seed& seed_a2);

/// Signal-to-noise ratio <N1>^2 / Var(N1) for the given a2 seed.  Throws
/// Degenerate when the variance vanishes (no light).
double snr(const InterferometerConfig& cfg, const Seed& seed_a2, double phi);

/// 10 log10(value / reference).  Phase variance and SNR are power-like
/// quantities, hence the factor 10 rather than 20.  Throws Degenerate on
/// nonpositive input.
double ratio_db(double value, double reference);

/// Assemble the full report at one phase from the config's embedded seeds.
/// Lenient: fields without a closed form (or degenerate here) come back
/// absent instead of throwing.
ObservableReport observe(const InterferometerConfig& cfg, double phi);

}  // namespace nli
