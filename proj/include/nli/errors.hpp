#pragma once

#include <stdexcept>
#include <string>

namespace nli {

/// Base class for every domain error raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A physical parameter is outside its admissible range (gain cap,
/// transmission/efficiency outside [0,1], negative photon count, ...).
class InvalidParameter : public Error {
public:
  using Error::Error;
};

/// The fringe carries no light at D1 for any phase, so visibility is 0/0.
/// Happens when both gains vanish and the detected mode is unseeded.
class DarkInterferometer : public Error {
public:
  using Error::Error;
};

/// The error-propagation denominator vanishes (sin phi = 0): the phase
/// variance diverges at phi in {0, pi, 2pi, ...}.
class DivergentSensitivity : public Error {
public:
  using Error::Error;
};

/// A quantity is undefined for this parameter combination (division by a
/// vanishing gain, transmission or efficiency; zero variance; ...).
class Degenerate : public Error {
public:
  using Error::Error;
};

/// The truncated Fock state leaked more probability than the budget allows,
/// even after cutoff escalation.
class TruncationBudgetExceeded : public Error {
public:
  using Error::Error;
};

/// The Gaussian engine was asked to propagate a number-state seed.
class NonGaussianSeed : public Error {
public:
  using Error::Error;
};

/// A simulation precondition was violated (gain or seed too large for the
/// Fock engine's truncation budget to be attainable).
class PreconditionViolated : public Error {
public:
  using Error::Error;
};

}  // namespace nli
