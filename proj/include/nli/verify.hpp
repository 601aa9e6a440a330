#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nli {

/// One oracle comparison: `max_rel` is the worst relative deviation seen over
/// `trials` random configurations, compared against `tolerance`.
struct VerifyCheck {
  std::string name;
  int trials = 0;
  double max_rel = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

enum class VerifyEngine { Moment, Fock, Gaussian, All };

struct VerifyOptions {
  VerifyEngine engine = VerifyEngine::All;
  int trials = 200;           // per-check trial count for the simulators
  int moment_trials = 1000;   // the exact-algebra engine is cheap, use more
  double rel_tol_override = 0.0;  // > 0 replaces every check's tolerance
  std::uint64_t rng_seed = 20240817;
};

/// Relative deviation used throughout the verification suite.
double rel_diff(double a, double b);

/// Run the oracle cross-checks:
///  - moment expansion vs the closed-form mean/variance for number and
///    coherent seeding (tolerance 1e-10, gains up to 2, seeds up to 1e4),
///  - Fock circuit simulation vs the same closed forms within its
///    preconditions (tolerance 1e-7),
///  - three-way Fock vs Gaussian vs moment agreement on Gaussian-compatible
///    seeds (tolerance 1e-7),
///  - Gaussian covariance engine vs the coherent-seeding closed forms
///    (tolerance 1e-10).
std::vector<VerifyCheck> run_verification(const VerifyOptions& opt);

bool all_passed(const std::vector<VerifyCheck>& checks);

/// Fixed-width text table, one line per check plus a header.
std::string format_check_table(const std::vector<VerifyCheck>& checks);

}  // namespace nli
