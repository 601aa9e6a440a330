#pragma once

#include <array>
#include <complex>
#include <optional>

#include <Eigen/Dense>

#include "nli/parameters.hpp"

namespace nli {

/// Truncated six-mode Fock-space state.  Mode order is
/// (a1, a2, l1, l2, d1, d2); `cutoffs` holds the per-mode maximum occupation
/// and `amp` the dense amplitude tensor of shape prod(cutoff_i + 1), mode 5
/// varying fastest.  The state is never renormalized, so
/// norm_deficit() = 1 - ||amp||^2 measures everything lost to truncation.
struct FockState {
  std::array<int, 6> cutoffs{};
  Eigen::VectorXcd amp;

  explicit FockState(const std::array<int, 6>& cutoffs_in);

  int dim(int mode) const { return cutoffs[mode] + 1; }
  long stride(int mode) const { return strides_[mode]; }
  long size() const { return amp.size(); }
  double norm_deficit() const { return 1.0 - amp.squaredNorm(); }

private:
  std::array<long, 6> strides_{};
};

/// Prepare the product input state; coherent components are truncated at the
/// mode cutoff, so their Poisson tail shows up immediately in the deficit.
void prepare_input(FockState& st, const Seed& seed_a1, const Seed& seed_a2);

/// Two-mode squeezer exp(xi ai^dag aj^dag - xi* ai aj) applied to modes
/// (i, j).  The unitary is evaluated exactly on a working space padded by
/// `pad` levels per mode and the result is projected back to the declared
/// cutoffs; the projected-out probability accumulates in the norm deficit.
void apply_two_mode_squeezer(FockState& st, int i, int j, std::complex<double> xi, int pad = 6);

/// Beam splitter exp(theta (ai^dag aj - aj^dag ai)) on modes (i, j), same
/// working-space treatment.  theta = acos(sqrt(T)).
void apply_beam_splitter(FockState& st, int i, int j, double theta, int pad = 6);

/// Mean and variance of the number operator of one mode, taken on the
/// unnormalized truncated state.
struct NumberMoments {
  double mean = 0.0;
  double variance = 0.0;
};
NumberMoments number_moments(const FockState& st, int mode);

struct FockOptions {
  double budget = 1e-10;                         // allowed norm deficit
  std::optional<std::array<int, 6>> cutoffs;     // override the default rule
  bool allow_escalation = true;                  // double cutoffs once on overflow
};

struct FockResult {
  double mean_n1 = 0.0;
  double var_n1 = 0.0;
  double mean_n2 = 0.0;
  double norm_deficit = 0.0;
  std::array<int, 6> cutoffs_used{};
};

/// Default per-mode cutoffs for the configured seeds: number seeds get
/// count + 4 on their chain and 4 elsewhere; a coherent seed's chain gets a
/// cutoff whose Poisson tail is below budget/20, plus the same +4 headroom.
std::array<int, 6> default_cutoffs(const InterferometerConfig& cfg, double budget);

/// Simulate the full circuit (OPA A, internal losses, OPA B, detector
/// inefficiencies) at relative phase `phi` and read out the D1 moments and
/// the D2 mean.  Enforces the engine preconditions (G <= 0.3, mean seed
/// photons <= 5 per mode); escalates cutoffs once if the truncation budget is
/// exceeded and throws TruncationBudgetExceeded if it still is.
FockResult fock_simulate(const InterferometerConfig& cfg, double phi, const FockOptions& opt = {});

}  // namespace nli
