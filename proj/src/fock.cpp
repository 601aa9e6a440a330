#include "nli/fock.hpp"

#include <cmath>
#include <vector>

namespace nli {

FockState::FockState(const std::array<int, 6>& cutoffs_in) : cutoffs(cutoffs_in) {
  long sz = 1;
  for (int m = 5; m >= 0; --m) {
    if (cutoffs[m] < 0) throw InvalidParameter("Fock cutoffs must be >= 0");
    strides_[m] = sz;
    sz *= cutoffs[m] + 1;
  }
  amp = Eigen::VectorXcd::Zero(sz);
}

namespace {

// Amplitudes of a single-mode seed truncated at `dim` levels.  The coherent
// tail beyond the cutoff is simply absent, which is exactly the input's
// contribution to the norm deficit.
std::vector<std::complex<double>> seed_amplitudes(const Seed& seed, int dim) {
  std::vector<std::complex<double>> v(dim, 0.0);
  switch (seed.kind()) {
    case Seed::Kind::Vacuum:
      v[0] = 1.0;
      break;
    case Seed::Kind::Number: {
      const long n = seed.number_count();
      if (n >= dim)
        throw InvalidParameter("number seed exceeds the mode cutoff");
      v[static_cast<std::size_t>(n)] = 1.0;
      break;
    }
    case Seed::Kind::Coherent: {
      const std::complex<double> mu = seed.amplitude();
      std::complex<double> a = std::exp(-0.5 * std::norm(mu));
      for (int q = 0; q < dim; ++q) {
        v[q] = a;
        a *= mu / std::sqrt(static_cast<double>(q + 1));
      }
      break;
    }
  }
  return v;
}

// Base offsets of every index combination that has n_i = n_j = 0.
std::vector<long> fiber_offsets(const FockState& st, int i, int j) {
  std::vector<long> offs{0};
  for (int m = 0; m < 6; ++m) {
    if (m == i || m == j) continue;
    const int d = st.dim(m);
    const long s = st.stride(m);
    std::vector<long> next;
    next.reserve(offs.size() * d);
    for (long base : offs)
      for (int n = 0; n < d; ++n) next.push_back(base + n * s);
    offs.swap(next);
  }
  return offs;
}

// One ladder chain of a two-mode gate: the working-space pair cells it
// couples (as column indices p*Wj + q) and the raising couplings g_k of the
// anti-Hermitian generator K (K[k+1,k] = g_k, K[k,k+1] = -conj(g_k)).
struct Chain {
  std::vector<int> cells;
  std::vector<std::complex<double>> couplings;
};

// exp(K) for one chain via the spectral decomposition of H = iK.
Eigen::MatrixXcd chain_unitary(const Chain& c) {
  const int L = static_cast<int>(c.cells.size());
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(L, L);
  const std::complex<double> im(0.0, 1.0);
  for (int k = 0; k + 1 < L; ++k) {
    h(k + 1, k) = im * c.couplings[k];
    h(k, k + 1) = std::conj(h(k + 1, k));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  Eigen::VectorXcd phases(L);
  for (int k = 0; k < L; ++k) phases[k] = std::polar(1.0, -es.eigenvalues()[k]);
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

// Evolve modes (i, j) by the block-diagonal gate given as chains over the
// padded working space, then project back to the declared cutoffs.  Whatever
// probability the exact gate pushes past the cutoffs is dropped here and
// shows up in the norm deficit.
void apply_pair_gate(FockState& st, int i, int j, int wi, int wj,
                     const std::vector<Chain>& chains) {
  const int di = st.dim(i), dj = st.dim(j);
  const long si = st.stride(i), sj = st.stride(j);
  const std::vector<long> fibers = fiber_offsets(st, i, j);
  const long nf = static_cast<long>(fibers.size());

  Eigen::MatrixXcd work = Eigen::MatrixXcd::Zero(nf, static_cast<long>(wi) * wj);
  for (int p = 0; p < di; ++p)
    for (int q = 0; q < dj; ++q) {
      const long col = static_cast<long>(p) * wj + q;
      const long base = p * si + q * sj;
      for (long f = 0; f < nf; ++f) work(f, col) = st.amp[fibers[f] + base];
    }

  Eigen::MatrixXcd sub, rotated;
  for (const Chain& c : chains) {
    const int L = static_cast<int>(c.cells.size());
    if (L < 2) continue;
    const Eigen::MatrixXcd u = chain_unitary(c);
    sub.resize(nf, L);
    for (int k = 0; k < L; ++k) sub.col(k) = work.col(c.cells[k]);
    rotated.noalias() = sub * u.transpose();
    for (int k = 0; k < L; ++k) work.col(c.cells[k]) = rotated.col(k);
  }

  st.amp.setZero();
  for (int p = 0; p < di; ++p)
    for (int q = 0; q < dj; ++q) {
      const long col = static_cast<long>(p) * wj + q;
      const long base = p * si + q * sj;
      for (long f = 0; f < nf; ++f) st.amp[fibers[f] + base] = work(f, col);
    }
}

}  // namespace

void prepare_input(FockState& st, const Seed& seed_a1, const Seed& seed_a2) {
  const std::array<Seed, 6> seeds = {seed_a1, seed_a2, Seed::vacuum(),
                                     Seed::vacuum(), Seed::vacuum(), Seed::vacuum()};
  std::array<std::vector<std::complex<double>>, 6> mode_amps;
  for (int m = 0; m < 6; ++m) mode_amps[m] = seed_amplitudes(seeds[m], st.dim(m));

  // Outer product over the six modes, odometer over the flat index.
  std::array<int, 6> n{};
  for (long idx = 0; idx < st.size(); ++idx) {
    std::complex<double> a = 1.0;
    for (int m = 0; m < 6; ++m) a *= mode_amps[m][n[m]];
    st.amp[idx] = a;
    for (int m = 5; m >= 0; --m) {
      if (++n[m] <= st.cutoffs[m]) break;
      n[m] = 0;
    }
  }
}

void apply_two_mode_squeezer(FockState& st, int i, int j, std::complex<double> xi, int pad) {
  if (xi == std::complex<double>(0.0, 0.0)) return;
  const int wi = st.dim(i) + pad, wj = st.dim(j) + pad;

  // ai^dag aj^dag conserves n_i - n_j: chains run along the grid diagonals.
  std::vector<Chain> chains;
  for (int d = -(wj - 1); d <= wi - 1; ++d) {
    Chain c;
    const int p0 = std::max(d, 0), q0 = std::max(-d, 0);
    const int len = std::min(wi - p0, wj - q0);
    for (int k = 0; k < len; ++k) c.cells.push_back((p0 + k) * wj + (q0 + k));
    for (int k = 0; k + 1 < len; ++k)
      c.couplings.push_back(xi * std::sqrt(double(p0 + k + 1) * double(q0 + k + 1)));
    chains.push_back(std::move(c));
  }
  apply_pair_gate(st, i, j, wi, wj, chains);
}

void apply_beam_splitter(FockState& st, int i, int j, double theta, int pad) {
  if (theta == 0.0) return;
  const int wi = st.dim(i) + pad, wj = st.dim(j) + pad;

  // ai^dag aj conserves n_i + n_j: chains run along the grid anti-diagonals.
  std::vector<Chain> chains;
  for (int total = 1; total <= wi + wj - 2; ++total) {
    Chain c;
    const int pmin = std::max(0, total - (wj - 1));
    const int pmax = std::min(total, wi - 1);
    for (int p = pmin; p <= pmax; ++p) c.cells.push_back(p * wj + (total - p));
    for (int p = pmin; p + 1 <= pmax; ++p)
      c.couplings.push_back(theta * std::sqrt(double(p + 1) * double(total - p)));
    chains.push_back(std::move(c));
  }
  apply_pair_gate(st, i, j, wi, wj, chains);
}

NumberMoments number_moments(const FockState& st, int mode) {
  const int d = st.dim(mode);
  const long s = st.stride(mode);
  const long block = s * d;
  NumberMoments out;
  for (long base = 0; base < st.size(); base += block) {
    for (int n = 1; n < d; ++n) {
      const double w = st.amp.segment(base + n * s, s).squaredNorm();
      out.mean += n * w;
      out.variance += double(n) * n * w;  // second moment for now
    }
  }
  out.variance -= out.mean * out.mean;
  return out;
}

namespace {

// Smallest cutoff whose Poisson(lambda) tail is below `tail_budget`.
int poisson_cover(double lambda, double tail_budget) {
  if (lambda <= 0.0) return 0;
  double p = std::exp(-lambda);
  double tail = 1.0 - p;
  int c = 0;
  while (tail > tail_budget && c < 512) {
    ++c;
    p *= lambda / c;
    tail -= p;
  }
  return c;
}

}  // namespace

std::array<int, 6> default_cutoffs(const InterferometerConfig& cfg, double budget) {
  std::array<int, 6> cut = {4, 4, 4, 4, 4, 4};
  const double amplification = cfg.opa_a.cosh_sq() * cfg.opa_b.cosh_sq();

  const auto seed_level = [&](const Seed& s) {
    if (s.is_number()) return static_cast<int>(s.number_count());
    if (s.is_coherent())
      return poisson_cover(std::norm(s.amplitude()) * amplification, budget / 1000.0);
    return 0;
  };

  // The seed's photons travel the whole chain (a1 feeds l1 and d1, a2 feeds
  // l2 and d2), so every mode on a seeded chain shares the raised cutoff.
  const int lvl1 = seed_level(cfg.seed_a1);
  const int lvl2 = seed_level(cfg.seed_a2);
  if (lvl1 > 0) cut[0] = cut[2] = cut[4] = lvl1 + 4;
  if (lvl2 > 0) cut[1] = cut[3] = cut[5] = lvl2 + 4;
  return cut;
}

namespace {

FockResult simulate_once(const InterferometerConfig& cfg, double phi,
                         const std::array<int, 6>& cutoffs) {
  const InterferometerConfig eff = with_relative_phase(cfg, phi);

  FockState st(cutoffs);
  prepare_input(st, eff.seed_a1, eff.seed_a2);

  const auto bs_angle = [](double transmission) {
    return std::acos(std::sqrt(std::min(1.0, std::max(0.0, transmission))));
  };

  if (eff.opa_a.gain > 0.0)
    apply_two_mode_squeezer(st, 0, 1, std::polar(eff.opa_a.gain, eff.opa_a.phase));
  apply_beam_splitter(st, 0, 2, bs_angle(eff.loss1.transmission));
  apply_beam_splitter(st, 1, 3, bs_angle(eff.loss2.transmission));
  if (eff.opa_b.gain > 0.0)
    apply_two_mode_squeezer(st, 0, 1, std::polar(eff.opa_b.gain, eff.opa_b.phase));
  apply_beam_splitter(st, 0, 4, bs_angle(eff.eta1.eta));
  apply_beam_splitter(st, 1, 5, bs_angle(eff.eta2.eta));

  const NumberMoments d1 = number_moments(st, 0);
  const NumberMoments d2 = number_moments(st, 1);

  FockResult res;
  res.mean_n1 = d1.mean;
  res.var_n1 = d1.variance;
  res.mean_n2 = d2.mean;
  res.norm_deficit = std::max(0.0, st.norm_deficit());
  res.cutoffs_used = cutoffs;
  return res;
}

}  // namespace

FockResult fock_simulate(const InterferometerConfig& cfg, double phi, const FockOptions& opt) {
  constexpr double kMaxSimGain = 0.3;
  constexpr double kMaxSeedPhotons = 5.0;
  if (cfg.opa_a.gain > kMaxSimGain || cfg.opa_b.gain > kMaxSimGain)
    throw PreconditionViolated("Fock engine accepts gains up to 0.3");
  if (cfg.seed_a1.mean_photons() > kMaxSeedPhotons ||
      cfg.seed_a2.mean_photons() > kMaxSeedPhotons)
    throw PreconditionViolated("Fock engine accepts seeds up to 5 mean photons");

  std::array<int, 6> cut = opt.cutoffs ? *opt.cutoffs : default_cutoffs(cfg, opt.budget);

  FockResult res = simulate_once(cfg, phi, cut);
  if (res.norm_deficit <= opt.budget) return res;

  if (opt.allow_escalation) {
    for (int& c : cut) c *= 2;
    res = simulate_once(cfg, phi, cut);
    if (res.norm_deficit <= opt.budget) return res;
  }
  throw TruncationBudgetExceeded(
      "norm deficit " + std::to_string(res.norm_deficit) + " exceeds budget " +
      std::to_string(opt.budget) + " after cutoff escalation");
}

}  // namespace nli
