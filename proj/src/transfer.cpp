#include "nli/transfer.hpp"

#include <cmath>

namespace nli {

namespace {
std::complex<double> phase_factor(double phi) {
  return {std::cos(phi), std::sin(phi)};
}
}  // namespace

double TransferCoefficients::row1_commutator_defect() const {
  const double lhs = std::norm(a1) + std::norm(b1) + ineff1 * ineff1 -
                     std::norm(alpha1) - std::norm(beta1);
  return lhs - 1.0;
}

double TransferCoefficients::row2_commutator_defect() const {
  const double lhs = std::norm(a2) + std::norm(b2) + ineff2 * ineff2 -
                     std::norm(alpha2) - std::norm(beta2);
  return lhs - 1.0;
}

TransferCoefficients build_transfer(const InterferometerConfig& cfg) {
  const double ua = cfg.opa_a.cosh_sq(), va = cfg.opa_a.sinh_sq();
  const double ub = cfg.opa_b.cosh_sq(), vb = cfg.opa_b.sinh_sq();
  const double t1 = cfg.loss1.transmission, r1 = cfg.loss1.reflection();
  const double t2 = cfg.loss2.transmission, r2 = cfg.loss2.reflection();
  const double se1 = std::sqrt(cfg.eta1.eta), se2 = std::sqrt(cfg.eta2.eta);

  const double phi = cfg.relative_phase();
  const std::complex<double> eip = phase_factor(phi);
  const std::complex<double> eim = phase_factor(-phi);
  const std::complex<double> eib = phase_factor(cfg.opa_b.phase);

  TransferCoefficients tc;
  tc.a1 = se1 * (std::sqrt(t1 * ua * ub) + std::sqrt(t2 * va * vb) * eim);
  tc.alpha1 = se1 * (std::sqrt(t1 * va * ub) * eip + std::sqrt(t2 * ua * vb)) * eib;
  tc.b1 = se1 * std::sqrt(r1 * ub);
  tc.beta1 = se1 * std::sqrt(r2 * vb) * eib;

  tc.a2 = se2 * (std::sqrt(t1 * va * vb) * eim + std::sqrt(t2 * ua * ub));
  tc.alpha2 = se2 * (std::sqrt(t1 * ua * vb) + std::sqrt(t2 * va * ub) * eip) * eib;
  tc.b2 = se2 * std::sqrt(r2 * ub);
  tc.beta2 = se2 * std::sqrt(r1 * vb) * eib;

  tc.ineff1 = std::sqrt(1.0 - cfg.eta1.eta);
  tc.ineff2 = std::sqrt(1.0 - cfg.eta2.eta);
  return tc;
}

CoefficientModuli coefficient_moduli(const InterferometerConfig& cfg, double phi) {
  const double ua = cfg.opa_a.cosh_sq(), va = cfg.opa_a.sinh_sq();
  const double ub = cfg.opa_b.cosh_sq(), vb = cfg.opa_b.sinh_sq();
  const double t1 = cfg.loss1.transmission, r1 = cfg.loss1.reflection();
  const double t2 = cfg.loss2.transmission, r2 = cfg.loss2.reflection();
  const double e1 = cfg.eta1.eta;

  // Each modulus is x + y + 2 sqrt(x y) cos(phi); evaluated in the half-angle
  // form (sqrt x - sqrt y)^2 + 4 sqrt(x y) cos^2(phi/2), which has no
  // cancellation at the dark fringe.
  const double ch = std::cos(0.5 * phi);
  const double interference = 4.0 * ch * ch;
  const auto fringe = [&](double x, double y) {
    const double sx = std::sqrt(x), sy = std::sqrt(y);
    return (sx - sy) * (sx - sy) + sx * sy * interference;
  };

  CoefficientModuli mod;
  mod.a1_sq = e1 * fringe(t1 * ua * ub, t2 * va * vb);
  mod.alpha1_sq = e1 * fringe(t1 * va * ub, t2 * ua * vb);
  mod.b1_sq = e1 * r1 * ub;
  mod.beta1_sq = e1 * r2 * vb;
  return mod;
}

}  // namespace nli
