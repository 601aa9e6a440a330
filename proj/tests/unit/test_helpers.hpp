#pragma once

#include <doctest.h>

#include <numbers>
#include <random>

#include "nli/parameters.hpp"

// Strictly relative comparison: doctest's Approx defaults to scale = 1.0,
// which silently turns epsilon into an absolute tolerance for values far
// below 1 (photon means here are often ~1e-7).  Never use against exactly 0.
inline doctest::Approx approx_rel(double value, double eps) {
  return doctest::Approx(value).epsilon(eps).scale(0.0);
}

inline nli::InterferometerConfig random_interferometer(std::mt19937_64& rng,
                                                       double gain_lo = 0.0,
                                                       double gain_hi = 3.0,
                                                       double t_lo = 0.0,
                                                       double eta_lo = 0.0) {
  auto u = [&](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };
  nli::InterferometerConfig cfg;
  cfg.opa_a = nli::SqueezingParams(u(gain_lo, gain_hi), u(0.0, 2.0 * std::numbers::pi));
  cfg.opa_b = nli::SqueezingParams(u(gain_lo, gain_hi), u(0.0, 2.0 * std::numbers::pi));
  cfg.loss1 = nli::LossChannel(u(t_lo, 1.0));
  cfg.loss2 = nli::LossChannel(u(t_lo, 1.0));
  cfg.eta1 = nli::DetectorEfficiency(u(eta_lo, 1.0));
  cfg.eta2 = nli::DetectorEfficiency(u(eta_lo, 1.0));
  return cfg;
}

inline nli::InterferometerConfig reference_point() {
  nli::InterferometerConfig cfg;
  cfg.opa_a = nli::SqueezingParams(1e-3, 0.0);
  cfg.opa_b = nli::SqueezingParams(1e-3, 0.0);
  cfg.loss1 = nli::LossChannel(0.6);
  cfg.loss2 = nli::LossChannel(0.4);
  cfg.eta1 = nli::DetectorEfficiency(0.3);
  cfg.eta2 = nli::DetectorEfficiency(1.0);
  return cfg;
}
