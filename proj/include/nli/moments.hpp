#pragma once

#include <complex>
#include <vector>

#include "nli/parameters.hpp"
#include "nli/transfer.hpp"

namespace nli {

/// One ladder operator acting on one of the six input modes
/// (0: a1, 1: a2, 2: l1, 3: l2, 4: d1, 5: d2).
struct LadderOp {
  int mode = 0;
  bool create = false;
};

/// A sum of coefficient-weighted ladder-operator products, kept in the exact
/// order the operators act.  Multiplication concatenates words, so a product
/// of sums has exactly the product of the factors' term counts before any
/// simplification.
struct MonomialExpansion {
  struct Term {
    std::complex<double> coeff;
    std::vector<LadderOp> ops;
  };
  std::vector<Term> terms;
};

/// b1 written over the six input-mode operators using the row-1 transfer
/// coefficients (the d2 entry is the structural zero of the matrix).
MonomialExpansion b1_expansion(const TransferCoefficients& tc);

MonomialExpansion adjoint(const MonomialExpansion& e);
MonomialExpansion product(const MonomialExpansion& lhs, const MonomialExpansion& rhs);

/// Normal-ordered form of a single-mode ladder word: sum_k c_k a^dag^{p_k} a^{q_k}.
struct NormalTerm {
  int creators = 0;
  int annihilators = 0;
  double coeff = 0.0;
};
std::vector<NormalTerm> normal_order(const std::vector<bool>& creators_in_order);

/// <seed| a^dag^p a^q |seed> for a single-mode vacuum/number/coherent state.
std::complex<double> single_mode_moment(const Seed& seed, int creators, int annihilators);

/// Exact expectation of (b1^dag b1)^power on the product input state
/// |seed_a1>|seed_a2>|0,0,0,0>, power in {1, 2}.  Works for arbitrary seed
/// sizes: the expansion is normal-ordered per mode with [a, a^dag] = 1 and
/// evaluated term by term, no truncation anywhere.
double moment_expectation(const TransferCoefficients& tc, const Seed& seed_a1,
                          const Seed& seed_a2, int power);

/// Convenience pair: mean and variance of N1 from the first two moments.
struct MomentStats {
  double mean_n1 = 0.0;
  double var_n1 = 0.0;
};
MomentStats moment_stats(const TransferCoefficients& tc, const Seed& seed_a1,
                         const Seed& seed_a2);

}  // namespace nli
