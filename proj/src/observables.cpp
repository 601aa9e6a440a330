#include "nli/observables.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "nli/golden.hpp"

namespace nli {

namespace {

constexpr double kPi = std::numbers::pi;

// Threshold standing in for "sin phi = 0": pi itself rounds to a double whose
// sine is ~1.2e-16, so an exact-zero test would let the division through.
constexpr double kSinPhiFloor = 1e-12;

double interference_amplitude(const InterferometerConfig& cfg) {
  return std::sqrt(cfg.loss1.transmission * cfg.loss2.transmission *
                   cfg.opa_a.cosh_sq() * cfg.opa_b.cosh_sq() *
                   cfg.opa_a.sinh_sq() * cfg.opa_b.sinh_sq());
}

// Shared variance kernel for an a2 seed with mean photon number m; the
// coherent case adds m |alpha1|^4 on top.
double variance_kernel(const CoefficientModuli& mod, double m, double eta1) {
  const double bath = mod.a1_sq + mod.b1_sq + (1.0 - eta1);
  return mod.alpha1_sq * (m + 1.0) * bath +
         mod.beta1_sq * (bath + m * mod.alpha1_sq);
}

double seed_mean_photons_checked(const Seed& seed_a2) {
  if (seed_a2.is_number() || seed_a2.is_vacuum() || seed_a2.is_coherent())
    return seed_a2.mean_photons();
  return 0.0;
}

}  // namespace

double mean_n1_number(const InterferometerConfig& cfg, double n, double m, double phi) {
  if (n < 0.0 || m < 0.0) throw InvalidParameter("seed photon numbers must be >= 0");
  const CoefficientModuli mod = coefficient_moduli(cfg, phi);
  return n * mod.a1_sq + (m + 1.0) * mod.alpha1_sq + mod.beta1_sq;
}

double mean_n1_coherent(const InterferometerConfig& cfg, std::complex<double> mu, double phi) {
  return mean_n1_number(cfg, 0.0, std::norm(mu), phi);
}

double mean_n1_dphi(const InterferometerConfig& cfg, double m, double phi) {
  return -2.0 * cfg.eta1.eta * (m + 1.0) * interference_amplitude(cfg) * std::sin(phi);
}

double visibility_number(const InterferometerConfig& cfg, double n, double m) {
  const double ua = cfg.opa_a.cosh_sq(), va = cfg.opa_a.sinh_sq();
  const double ub = cfg.opa_b.cosh_sq(), vb = cfg.opa_b.sinh_sq();
  const double t1 = cfg.loss1.transmission, t2 = cfg.loss2.transmission;
  const double r2 = cfg.loss2.reflection();

  const double num = 2.0 * (n + m + 1.0) * std::sqrt(t1 * t2 * ua * ub * va * vb);
  const double den = n * (t1 * ua * ub + t2 * va * vb) +
                     (m + 1.0) * (t1 * va * ub + t2 * ua * vb) + r2 * vb;
  if (den == 0.0)
    throw DarkInterferometer("no light at D1 for any phase (both gains zero, detected mode unseeded)");
  return num / den;
}

double visibility_from_extrema(const InterferometerConfig& cfg, double n, double m) {
  const double bright = mean_n1_number(cfg, n, m, 0.0);
  const double dark = mean_n1_number(cfg, n, m, kPi);
  const double sum = bright + dark;
  if (sum == 0.0)
    throw DarkInterferometer("no light at D1 for any phase (both gains zero, detected mode unseeded)");
  return (bright - dark) / sum;
}

GammaVisibility visibility_gamma_form(const InterferometerConfig& cfg, double m) {
  const double ua = cfg.opa_a.cosh_sq(), va = cfg.opa_a.sinh_sq();
  const double ub = cfg.opa_b.cosh_sq(), vb = cfg.opa_b.sinh_sq();
  const double t1 = cfg.loss1.transmission, t2 = cfg.loss2.transmission;
  const double r2 = cfg.loss2.reflection();

  if (t2 == 0.0 || vb == 0.0)
    throw Degenerate("balance parameter gamma undefined (T2 = 0 or G_B = 0)");

  GammaVisibility out;
  out.gamma = std::sqrt((t1 * va * ub) / (t2 * ua * vb));
  out.visibility =
      2.0 * out.gamma / (1.0 + out.gamma * out.gamma + r2 / ((m + 1.0) * t2 * ua));
  return out;
}

double contrast(const InterferometerConfig& cfg, double n, double m) {
  return 4.0 * cfg.eta1.eta * (n + m + 1.0) * interference_amplitude(cfg);
}

double var_n1_number(const InterferometerConfig& cfg, double m, double phi) {
  if (m < 0.0) throw InvalidParameter("seed photon number must be >= 0");
  return variance_kernel(coefficient_moduli(cfg, phi), m, cfg.eta1.eta);
}

double var_n1_coherent(const InterferometerConfig& cfg, std::complex<double> mu, double phi) {
  const CoefficientModuli mod = coefficient_moduli(cfg, phi);
  const double msq = std::norm(mu);
  return variance_kernel(mod, msq, cfg.eta1.eta) +
         msq * mod.alpha1_sq * mod.alpha1_sq;
}

double phase_variance(const InterferometerConfig& cfg, const Seed& seed_a2, double phi) {
  if (cfg.opa_a.gain == 0.0 || cfg.opa_b.gain == 0.0 ||
      cfg.loss1.transmission == 0.0 || cfg.loss2.transmission == 0.0 ||
      cfg.eta1.eta == 0.0)
    throw Degenerate("phase variance undefined: a gain, transmission or eta1 is zero");

  const double s = std::sin(phi);
  if (std::abs(s) <= kSinPhiFloor)
    throw DivergentSensitivity("d<N1>/dphi vanishes at sin(phi) = 0");

  const double m = seed_mean_photons_checked(seed_a2);
  const double variance = seed_a2.is_coherent()
                              ? var_n1_coherent(cfg, seed_a2.amplitude(), phi)
                              : var_n1_number(cfg, m, phi);
  const double deriv = mean_n1_dphi(cfg, m, phi);
  return variance / (deriv * deriv);
}

double ql_phase_variance(double mean_seed, double gain) {
  if (mean_seed < 0.0) throw InvalidParameter("mean seed photons must be >= 0");
  if (gain <= 0.0) throw Degenerate("quantum-limited phase variance undefined at zero gain");
  const double s2 = std::sinh(gain) * std::sinh(gain);
  return 1.0 / (4.0 * (mean_seed + 1.0) * s2 * (s2 + 1.0));
}

namespace {

// Ideal-interferometer benchmark extended off balance through the
// sqrt(U_A V_A U_B V_B) combination; identical to the balanced formula when
// G_A = G_B.
double ql_benchmark(const InterferometerConfig& cfg, double mean_seed) {
  const double g = std::sqrt(cfg.opa_a.cosh_sq() * cfg.opa_a.sinh_sq() *
                             cfg.opa_b.cosh_sq() * cfg.opa_b.sinh_sq());
  if (g == 0.0) throw Degenerate("quantum-limited phase variance undefined at zero gain");
  return 1.0 / (4.0 * (mean_seed + 1.0) * g);
}

// Sign of d(phase variance)/dphi up to a positive factor.  With
// K = |A1|^2 + |B1|^2 + 1 - eta1 and N the variance numerator,
//   N = K ((m+1) alpha + beta) + m alpha beta  (+ m alpha^2 for coherent)
// and A1', alpha1', K' all equal -2 eta1 S sin(phi), the stationarity
// condition of N / (C sin^2 phi) reduces to N' sin(phi) = 2 N cos(phi).
double stationarity_residual(const InterferometerConfig& cfg, const Seed& seed_a2, double phi) {
  const CoefficientModuli mod = coefficient_moduli(cfg, phi);
  const double eta = cfg.eta1.eta;
  const double m = seed_a2.mean_photons();
  const double k = mod.a1_sq + mod.b1_sq + (1.0 - eta);
  const double alpha = mod.alpha1_sq;
  const double beta = mod.beta1_sq;

  double n = k * ((m + 1.0) * alpha + beta) + m * alpha * beta;
  const double s = std::sqrt(cfg.loss1.transmission * cfg.loss2.transmission *
                             cfg.opa_a.cosh_sq() * cfg.opa_b.cosh_sq() *
                             cfg.opa_a.sinh_sq() * cfg.opa_b.sinh_sq());
  const double dcross = -2.0 * eta * s * std::sin(phi);  // A1', alpha1' and K'
  double dn = dcross * ((m + 1.0) * alpha + beta + (m + 1.0) * k + m * beta);
  if (seed_a2.is_coherent()) {
    n += m * alpha * alpha;
    dn += dcross * 2.0 * m * alpha;
  }
  return dn * std::sin(phi) - 2.0 * n * std::cos(phi);
}

}  // namespace

SensitivityOptimum minimize_phase_variance(const InterferometerConfig& cfg, const Seed& seed_a2) {
  const auto objective = [&](double phi) { return phase_variance(cfg, seed_a2, phi); };

  // Coarse scan, then golden-section refinement of the best bracket.  The
  // objective is smooth with a single interior minimum on (0, pi) for this
  // model; the scan guards against that assumption failing quietly.
  constexpr int kScanPoints = 512;
  constexpr double kMargin = 1e-6;
  const double lo = kMargin;
  const double hi = kPi - kMargin;

  int best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  std::array<double, kScanPoints> xs{};
  for (int i = 0; i < kScanPoints; ++i) {
    xs[i] = lo + (hi - lo) * static_cast<double>(i) / (kScanPoints - 1);
    const double v = objective(xs[i]);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }

  const double bl = xs[std::max(0, best - 1)];
  const double bh = xs[std::min(kScanPoints - 1, best + 1)];
  auto [phi_min, value] = golden_section_minimize(objective, bl, bh, 1e-10);
  if (best_val < value) {  // scan point can win when the min hugs a bracket edge
    phi_min = xs[best];
    value = best_val;
  }

  // Golden section alone cannot localize the argmin below the sqrt(eps)
  // rounding floor of the objective.  Interior minima are polished by
  // bisecting the closed-form stationarity residual, which is noise-free.
  {
    double a = std::max(lo, phi_min - 1e-4);
    double b = std::min(hi, phi_min + 1e-4);
    double ra = stationarity_residual(cfg, seed_a2, a);
    double rb = stationarity_residual(cfg, seed_a2, b);
    if (ra < 0.0 && rb > 0.0) {
      for (int it = 0; it < 80 && (b - a) > 1e-14; ++it) {
        const double mid = 0.5 * (a + b);
        (stationarity_residual(cfg, seed_a2, mid) < 0.0 ? a : b) = mid;
      }
      const double polished = 0.5 * (a + b);
      phi_min = polished;
      value = objective(polished);
    }
  }

  SensitivityOptimum opt;
  opt.phi_min = phi_min;
  opt.value = value;
  const double m = seed_mean_photons_checked(seed_a2);
  opt.ql_value = ql_benchmark(cfg, m);
  opt.ratio_db = ratio_db(value, ql_benchmark(cfg, 0.0));
  return opt;
}

double snr(const InterferometerConfig& cfg, const Seed& seed_a2, double phi) {
  const double m = seed_mean_photons_checked(seed_a2);
  const double mean = mean_n1_number(cfg, 0.0, m, phi);
  const double variance = seed_a2.is_coherent()
                              ? var_n1_coherent(cfg, seed_a2.amplitude(), phi)
                              : var_n1_number(cfg, m, phi);
  if (variance <= 0.0) throw Degenerate("SNR undefined: photon-number variance is zero");
  return mean * mean / variance;
}

double ratio_db(double value, double reference) {
  if (!(value > 0.0) || !(reference > 0.0))
    throw Degenerate("dB ratio needs positive value and reference");
  return 10.0 * std::log10(value / reference);
}

ObservableReport observe(const InterferometerConfig& cfg, double phi) {
  if (cfg.seed_a1.is_coherent())
    throw InvalidParameter("coherent seeding of the detected mode a1 is not modelled");

  const double n = static_cast<double>(cfg.seed_a1.number_count());
  const Seed& a2 = cfg.seed_a2;
  const double m = a2.mean_photons();

  ObservableReport rep;
  rep.phi = phi;
  rep.mean_n1 = a2.is_coherent() ? mean_n1_coherent(cfg, a2.amplitude(), phi)
                                 : mean_n1_number(cfg, n, m, phi);
  rep.contrast = contrast(cfg, n, m);

  try {
    rep.visibility = visibility_number(cfg, n, m);
  } catch (const DarkInterferometer&) {
  }

  if (n == 0.0) {  // the second-moment closed forms assume a1 unseeded
    rep.var_n1 = a2.is_coherent() ? var_n1_coherent(cfg, a2.amplitude(), phi)
                                  : var_n1_number(cfg, m, phi);
    try {
      rep.delta_phi_sq = phase_variance(cfg, a2, phi);
    } catch (const Error&) {
    }
    if (*rep.var_n1 > 0.0) rep.snr = snr(cfg, a2, phi);
  }
  return rep;
}

}  // namespace nli
