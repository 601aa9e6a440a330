#include "nli/moments.hpp"

#include <array>
#include <cmath>

namespace nli {

MonomialExpansion b1_expansion(const TransferCoefficients& tc) {
  // b1 = A1 a1 + alpha1 a2^dag + B1 l1 + beta1 l2^dag + sqrt(1-eta1) d1 + 0 d2^dag.
  // The structural zero is kept so term counts multiply exactly under products.
  MonomialExpansion e;
  e.terms = {
      {tc.a1, {{0, false}}},
      {tc.alpha1, {{1, true}}},
      {tc.b1, {{2, false}}},
      {tc.beta1, {{3, true}}},
      {{tc.ineff1, 0.0}, {{4, false}}},
      {{0.0, 0.0}, {{5, true}}},
  };
  return e;
}

MonomialExpansion adjoint(const MonomialExpansion& e) {
  MonomialExpansion out;
  out.terms.reserve(e.terms.size());
  for (const auto& t : e.terms) {
    MonomialExpansion::Term a;
    a.coeff = std::conj(t.coeff);
    a.ops.assign(t.ops.rbegin(), t.ops.rend());
    for (auto& op : a.ops) op.create = !op.create;
    out.terms.push_back(std::move(a));
  }
  return out;
}

MonomialExpansion product(const MonomialExpansion& lhs, const MonomialExpansion& rhs) {
  MonomialExpansion out;
  out.terms.reserve(lhs.terms.size() * rhs.terms.size());
  for (const auto& l : lhs.terms) {
    for (const auto& r : rhs.terms) {
      MonomialExpansion::Term t;
      t.coeff = l.coeff * r.coeff;
      t.ops = l.ops;
      t.ops.insert(t.ops.end(), r.ops.begin(), r.ops.end());
      out.terms.push_back(std::move(t));
    }
  }
  return out;
}

namespace {

// Rewrite one word recursively with a a^dag = a^dag a + 1 until every creator
// sits left of every annihilator.
void normal_order_rec(std::vector<bool>& word, double coeff, std::vector<NormalTerm>& out) {
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (!word[i] && word[i + 1]) {  // annihilator directly left of a creator
      std::vector<bool> swapped = word;
      std::swap(swapped[i], swapped[i + 1]);
      std::vector<bool> contracted;
      contracted.reserve(word.size() - 2);
      contracted.insert(contracted.end(), word.begin(), word.begin() + i);
      contracted.insert(contracted.end(), word.begin() + i + 2, word.end());
      normal_order_rec(swapped, coeff, out);
      normal_order_rec(contracted, coeff, out);
      return;
    }
  }
  NormalTerm t;
  for (bool c : word) (c ? t.creators : t.annihilators) += 1;
  t.coeff = coeff;
  out.push_back(t);
}

}  // namespace

std::vector<NormalTerm> normal_order(const std::vector<bool>& creators_in_order) {
  std::vector<NormalTerm> out;
  std::vector<bool> word = creators_in_order;
  normal_order_rec(word, 1.0, out);
  return out;
}

std::complex<double> single_mode_moment(const Seed& seed, int creators, int annihilators) {
  switch (seed.kind()) {
    case Seed::Kind::Number: {
      // <n| a^dag^p a^q |n> = delta_pq * n (n-1) ... (n-p+1)
      if (creators != annihilators) return 0.0;
      const long n = seed.number_count();
      if (creators > n) return 0.0;
      double f = 1.0;
      for (int k = 0; k < creators; ++k) f *= static_cast<double>(n - k);
      return f;
    }
    case Seed::Kind::Coherent: {
      const std::complex<double> mu = seed.amplitude();
      std::complex<double> f = 1.0;
      for (int k = 0; k < creators; ++k) f *= std::conj(mu);
      for (int k = 0; k < annihilators; ++k) f *= mu;
      return f;
    }
    case Seed::Kind::Vacuum:
    default:
      return (creators == 0 && annihilators == 0) ? 1.0 : 0.0;
  }
}

double moment_expectation(const TransferCoefficients& tc, const Seed& seed_a1,
                          const Seed& seed_a2, int power) {
  if (power != 1 && power != 2) throw InvalidParameter("moment power must be 1 or 2");

  const MonomialExpansion b1 = b1_expansion(tc);
  const MonomialExpansion n1 = product(adjoint(b1), b1);
  const MonomialExpansion expansion = (power == 1) ? n1 : product(n1, n1);

  const std::array<Seed, 6> inputs = {seed_a1, seed_a2, Seed::vacuum(),
                                      Seed::vacuum(), Seed::vacuum(), Seed::vacuum()};

  std::complex<double> total = 0.0;
  for (const auto& term : expansion.terms) {
    if (term.coeff == std::complex<double>(0.0, 0.0)) continue;

    // Split the word by mode, preserving the within-mode operator order.
    std::array<std::vector<bool>, 6> words;
    for (const auto& op : term.ops) words[op.mode].push_back(op.create);

    std::complex<double> value = term.coeff;
    for (int mode = 0; mode < 6 && value != std::complex<double>(0.0, 0.0); ++mode) {
      if (words[mode].empty()) continue;
      std::complex<double> mode_val = 0.0;
      for (const NormalTerm& nt : normal_order(words[mode]))
        mode_val += nt.coeff * single_mode_moment(inputs[mode], nt.creators, nt.annihilators);
      value *= mode_val;
    }
    total += value;
  }
  return total.real();
}

MomentStats moment_stats(const TransferCoefficients& tc, const Seed& seed_a1,
                         const Seed& seed_a2) {
  MomentStats st;
  st.mean_n1 = moment_expectation(tc, seed_a1, seed_a2, 1);
  const double second = moment_expectation(tc, seed_a1, seed_a2, 2);
  st.var_n1 = second - st.mean_n1 * st.mean_n1;
  return st;
}

}  // namespace nli
