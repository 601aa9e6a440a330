#pragma once

#include <cmath>
#include <complex>

#include "nli/errors.hpp"

namespace nli {

/// Largest accepted parametric gain. cosh overflows double precision near
/// G ~ 355 and the model assumes an undepleted pump, so anything beyond this
/// is a parameter error rather than a physical regime.
inline constexpr double kMaxGain = 20.0;

/// One optical parametric amplifier: real gain G >= 0 and pump phase (rad).
struct SqueezingParams {
  double gain = 0.0;
  double phase = 0.0;

  SqueezingParams() = default;
  SqueezingParams(double gain_, double phase_) : gain(gain_), phase(phase_) {
    if (!(gain >= 0.0) || gain > kMaxGain)
      throw InvalidParameter("OPA gain must lie in [0, 20], got " + std::to_string(gain_));
    if (!std::isfinite(phase))
      throw InvalidParameter("OPA phase must be finite");
  }

  // cosh^2 G and sinh^2 G; they differ by exactly 1 and sinh^2 G is the mean
  // pair number of the unseeded amplifier.
  double cosh_sq() const { double c = std::cosh(gain); return c * c; }
  double sinh_sq() const { double s = std::sinh(gain); return s * s; }
};

/// Internal loss channel modelled as a beam splitter with transmission T.
struct LossChannel {
  double transmission = 1.0;

  LossChannel() = default;
  explicit LossChannel(double t) : transmission(t) {
    if (!(t >= 0.0 && t <= 1.0))
      throw InvalidParameter("transmission must lie in [0, 1], got " + std::to_string(t));
  }

  double reflection() const { return 1.0 - transmission; }
};

/// Detector efficiency, also a beam-splitter transmission.
struct DetectorEfficiency {
  double eta = 1.0;

  DetectorEfficiency() = default;
  explicit DetectorEfficiency(double e) : eta(e) {
    if (!(e >= 0.0 && e <= 1.0))
      throw InvalidParameter("detector efficiency must lie in [0, 1], got " + std::to_string(e));
  }
};

/// Input state of one interferometer mode: vacuum, a number state |n>, or a
/// coherent state |mu>.
class Seed {
public:
  enum class Kind { Vacuum, Number, Coherent };

  Seed() = default;

  static Seed vacuum() { return Seed(); }

  static Seed number(long count) {
    if (count < 0) throw InvalidParameter("number-state seed needs count >= 0");
    Seed s;
    s.kind_ = Kind::Number;
    s.count_ = count;
    return s;
  }

  static Seed coherent(std::complex<double> amplitude) {
    if (!std::isfinite(amplitude.real()) || !std::isfinite(amplitude.imag()))
      throw InvalidParameter("coherent seed amplitude must be finite");
    Seed s;
    s.kind_ = Kind::Coherent;
    s.amplitude_ = amplitude;
    return s;
  }

  Kind kind() const { return kind_; }
  bool is_vacuum() const { return kind_ == Kind::Vacuum; }
  bool is_number() const { return kind_ == Kind::Number; }
  bool is_coherent() const { return kind_ == Kind::Coherent; }

  /// Vacuum and |0> both behave as Gaussian inputs for the covariance engine.
  bool is_gaussian() const { return !is_number() || count_ == 0; }

  long number_count() const { return is_number() ? count_ : 0; }
  std::complex<double> amplitude() const { return is_coherent() ? amplitude_ : 0.0; }

  double mean_photons() const {
    switch (kind_) {
      case Kind::Number: return static_cast<double>(count_);
      case Kind::Coherent: return std::norm(amplitude_);
      default: return 0.0;
    }
  }

private:
  Kind kind_ = Kind::Vacuum;
  long count_ = 0;
  std::complex<double> amplitude_{0.0, 0.0};
};

/// Full physical description of the interferometer: two OPAs, the two
/// internal loss channels, the two detector efficiencies and the input seeds.
struct InterferometerConfig {
  SqueezingParams opa_a;
  SqueezingParams opa_b;
  LossChannel loss1;  // detected arm, T1
  LossChannel loss2;  // undetected arm, T2
  DetectorEfficiency eta1;
  DetectorEfficiency eta2;
  Seed seed_a1;
  Seed seed_a2;

  /// Observables depend on the pump phases only through this difference.
  double relative_phase() const { return opa_a.phase - opa_b.phase; }
};

/// Copy of `cfg` whose relative phase equals `phi`; the A phase is kept and
/// the B phase is adjusted, so global-phase invariance stays testable.
inline InterferometerConfig with_relative_phase(InterferometerConfig cfg, double phi) {
  cfg.opa_b.phase = cfg.opa_a.phase - phi;
  return cfg;
}

}  // namespace nli
