#include "nli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "nli/fock.hpp"
#include "nli/gaussian.hpp"
#include "nli/moments.hpp"
#include "nli/observables.hpp"

namespace nli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Draw {
  std::mt19937_64 rng;
  explicit Draw(std::uint64_t seed) : rng(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }
  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
  }

  InterferometerConfig config(double gain_lo, double gain_hi, double t_lo = 0.0,
                              double eta_lo = 0.0) {
    InterferometerConfig cfg;
    cfg.opa_a = SqueezingParams(uniform(gain_lo, gain_hi), uniform(0.0, kTwoPi));
    cfg.opa_b = SqueezingParams(uniform(gain_lo, gain_hi), uniform(0.0, kTwoPi));
    cfg.loss1 = LossChannel(uniform(t_lo, 1.0));
    cfg.loss2 = LossChannel(uniform(t_lo, 1.0));
    cfg.eta1 = DetectorEfficiency(uniform(eta_lo, 1.0));
    cfg.eta2 = DetectorEfficiency(uniform(eta_lo, 1.0));
    return cfg;
  }

  // Seed photon numbers spanning 0 .. `cap` with a log-uniform body.
  long log_count(long cap) {
    if (integer(0, 7) == 0) return 0;
    const double x = uniform(0.0, std::log(static_cast<double>(cap)));
    return std::min<long>(cap, std::llround(std::exp(x)));
  }
};

struct CheckAccumulator {
  VerifyCheck check;

  CheckAccumulator(std::string name, int trials, double tol) {
    check.name = std::move(name);
    check.trials = trials;
    check.tolerance = tol;
  }

  void record(double a, double b) { check.max_rel = std::max(check.max_rel, rel_diff(a, b)); }

  VerifyCheck finish() {
    check.pass = check.max_rel <= check.tolerance;
    return check;
  }
};

bool wants(VerifyEngine selected, VerifyEngine e) {
  return selected == VerifyEngine::All || selected == e;
}

double tol_or(double override_tol, double spec_tol) {
  return override_tol > 0.0 ? override_tol : spec_tol;
}

}  // namespace

double rel_diff(double a, double b) {
  const double denom = std::max(std::abs(a), std::abs(b));
  if (denom < 1e-18) return 0.0;
  return std::abs(a - b) / denom;
}

std::vector<VerifyCheck> run_verification(const VerifyOptions& opt) {
  std::vector<VerifyCheck> out;
  Draw draw(opt.rng_seed);

  if (wants(opt.engine, VerifyEngine::Moment)) {
    const double tol = tol_or(opt.rel_tol_override, 1e-10);

    // Exact ladder algebra vs the number-seeded mean/variance closed forms,
    // unrestricted gains and seeds (no truncation in either route).
    CheckAccumulator mean_num("moment vs closed form: number seed mean", opt.moment_trials, tol);
    CheckAccumulator var_num("moment vs closed form: number seed variance", opt.moment_trials, tol);
    for (int k = 0; k < opt.moment_trials; ++k) {
      InterferometerConfig cfg = draw.config(0.0, 2.0);
      const double phi = cfg.relative_phase();
      const long m = draw.log_count(10000);
      const long n = (k % 4 == 0) ? draw.integer(0, 3) : 0;
      cfg.seed_a1 = Seed::number(n);
      cfg.seed_a2 = Seed::number(m);
      const TransferCoefficients tc = build_transfer(cfg);
      mean_num.record(moment_expectation(tc, cfg.seed_a1, cfg.seed_a2, 1),
                      mean_n1_number(cfg, double(n), double(m), phi));
      if (n == 0) {
        const MomentStats st = moment_stats(tc, cfg.seed_a1, cfg.seed_a2);
        var_num.record(st.var_n1, var_n1_number(cfg, double(m), phi));
      }
    }
    out.push_back(mean_num.finish());
    out.push_back(var_num.finish());

    CheckAccumulator mean_coh("moment vs closed form: coherent seed mean", opt.moment_trials, tol);
    CheckAccumulator var_coh("moment vs closed form: coherent seed variance", opt.moment_trials, tol);
    for (int k = 0; k < opt.moment_trials; ++k) {
      InterferometerConfig cfg = draw.config(0.0, 2.0);
      const double phi = cfg.relative_phase();
      const double msq = draw.uniform(0.0, 1.0) * double(draw.log_count(10000));
      const std::complex<double> mu = std::polar(std::sqrt(msq), draw.uniform(0.0, kTwoPi));
      cfg.seed_a2 = Seed::coherent(mu);
      const TransferCoefficients tc = build_transfer(cfg);
      const MomentStats st = moment_stats(tc, cfg.seed_a1, cfg.seed_a2);
      mean_coh.record(st.mean_n1, mean_n1_coherent(cfg, mu, phi));
      var_coh.record(st.var_n1, var_n1_coherent(cfg, mu, phi));
    }
    out.push_back(mean_coh.finish());
    out.push_back(var_coh.finish());
  }

  if (wants(opt.engine, VerifyEngine::Fock)) {
    const double tol = tol_or(opt.rel_tol_override, 1e-7);

    // Number-seeded circuits vs the closed forms, inside the engine's
    // gain/seed preconditions.
    CheckAccumulator num_mean("fock vs closed forms: number seed mean", opt.trials, tol);
    CheckAccumulator num_var("fock vs closed forms: number seed variance", opt.trials, tol);
    for (int k = 0; k < opt.trials; ++k) {
      InterferometerConfig cfg = draw.config(0.002, 0.04, 0.02, 0.02);
      const double phi = cfg.relative_phase();
      const long m = draw.integer(0, 2);
      cfg.seed_a2 = Seed::number(m);
      const FockResult fk = fock_simulate(cfg, phi);
      num_mean.record(fk.mean_n1, mean_n1_number(cfg, 0.0, double(m), phi));
      num_var.record(fk.var_n1, var_n1_number(cfg, double(m), phi));
    }
    out.push_back(num_mean.finish());
    out.push_back(num_var.finish());

    // Gaussian-compatible circuits, each simulated once and held against the
    // coherent closed forms and both independent engines.
    CheckAccumulator coh_chk("fock vs closed forms: coherent mean, variance", opt.trials, tol);
    CheckAccumulator fg("three-way: fock vs gaussian (mean, variance)", opt.trials, tol);
    CheckAccumulator fm("three-way: fock vs moment (mean, variance)", opt.trials, tol);
    for (int k = 0; k < opt.trials; ++k) {
      InterferometerConfig cfg = draw.config(0.002, 0.04, 0.02, 0.02);
      const double phi = cfg.relative_phase();
      std::complex<double> mu = 0.0;
      if (k % 2 == 0) {
        mu = std::polar(std::sqrt(draw.uniform(0.0, 0.8)), draw.uniform(0.0, kTwoPi));
        cfg.seed_a2 = Seed::coherent(mu);
      }
      const FockResult fk = fock_simulate(cfg, phi);
      const GaussianResult gs = gaussian_simulate(cfg, phi);
      const MomentStats mo = moment_stats(build_transfer(cfg), cfg.seed_a1, cfg.seed_a2);
      coh_chk.record(fk.mean_n1, mean_n1_coherent(cfg, mu, phi));
      coh_chk.record(fk.var_n1, var_n1_coherent(cfg, mu, phi));
      fg.record(fk.mean_n1, gs.mean_n1);
      fg.record(fk.var_n1, gs.var_n1);
      fm.record(fk.mean_n1, mo.mean_n1);
      fm.record(fk.var_n1, mo.var_n1);
    }
    out.push_back(coh_chk.finish());
    out.push_back(fg.finish());
    out.push_back(fm.finish());
  }

  if (wants(opt.engine, VerifyEngine::Gaussian)) {
    const double tol = tol_or(opt.rel_tol_override, 1e-10);

    // Symplectic covariance propagation vs the coherent-seeding closed forms;
    // both routes are truncation-free, so gains and seeds run large.
    CheckAccumulator mean_chk("gaussian vs closed forms: coherent mean", opt.trials, tol);
    CheckAccumulator var_chk("gaussian vs closed forms: coherent variance", opt.trials, tol);
    for (int k = 0; k < opt.trials; ++k) {
      InterferometerConfig cfg = draw.config(0.0, 2.0);
      const double phi = cfg.relative_phase();
      const std::complex<double> mu =
          std::polar(std::sqrt(draw.uniform(0.0, 50.0)), draw.uniform(0.0, kTwoPi));
      cfg.seed_a2 = Seed::coherent(mu);
      const GaussianResult gs = gaussian_simulate(cfg, phi);
      mean_chk.record(gs.mean_n1, mean_n1_coherent(cfg, mu, phi));
      var_chk.record(gs.var_n1, var_n1_coherent(cfg, mu, phi));
    }
    out.push_back(mean_chk.finish());
    out.push_back(var_chk.finish());
  }

  return out;
}

bool all_passed(const std::vector<VerifyCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return c.pass; });
}

std::string format_check_table(const std::vector<VerifyCheck>& checks) {
  std::ostringstream os;
  os << "check                                                 trials   max rel dev   tolerance   result\n";
  for (const auto& c : checks) {
    os << c.name;
    for (std::size_t k = c.name.size(); k < 54; ++k) os << ' ';
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%6d   %11.3e   %9.1e   %s\n", c.trials,
                  c.max_rel, c.tolerance, c.pass ? "pass" : "FAIL");
    os << buf;
  }
  return os.str();
}

}  // namespace nli
