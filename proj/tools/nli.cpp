// nli: closed-form observables, figure-data sweeps and oracle verification
// for a seeded, lossy, detection-inefficient nonlinear (SU(1,1))
// interferometer.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nli/config_json.hpp"
#include "nli/observables.hpp"
#include "nli/sweep.hpp"
#include "nli/verify.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

struct CommonFlags {
  std::optional<double> gain, gain_a, gain_b, phase_a, phase_b;
  std::optional<double> t1, t2, eta1, eta2, phi;
  std::optional<long> seed_m, seed_n;
  std::optional<double> seed_mu_sq;
  std::string config_path;
  std::string output = "pretty";
  std::string out_path;
  bool meta = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common_options(CLI::App* cmd, CommonFlags& f, bool with_phi) {
  cmd->add_option("--config", f.config_path, "JSON config file (flags override it)");
  auto* g = cmd->add_option("--gain", f.gain, "parametric gain for both OPAs");
  auto* ga = cmd->add_option("--gain-a", f.gain_a, "gain of OPA A");
  auto* gb = cmd->add_option("--gain-b", f.gain_b, "gain of OPA B");
  g->excludes(ga);
  g->excludes(gb);
  cmd->add_option("--phase-a", f.phase_a, "pump phase of OPA A (rad)");
  cmd->add_option("--phase-b", f.phase_b, "pump phase of OPA B (rad)");
  cmd->add_option("--t1", f.t1, "internal transmission of the detected arm");
  cmd->add_option("--t2", f.t2, "internal transmission of the undetected arm");
  cmd->add_option("--eta1", f.eta1, "efficiency of detector D1");
  cmd->add_option("--eta2", f.eta2, "efficiency of detector D2");
  if (with_phi) cmd->add_option("--phi", f.phi, "relative phase phi_A - phi_B (rad)");
  auto* sm = cmd->add_option("--seed-m", f.seed_m, "number-state seed |m> on mode a2");
  auto* smu = cmd->add_option("--seed-mu-sq", f.seed_mu_sq,
                              "coherent seed on a2 with this mean photon number (phase 0)");
  auto* sn = cmd->add_option("--seed-n", f.seed_n, "number-state seed |n> on mode a1");
  sm->excludes(smu);
  sn->excludes(smu);  // no closed forms mix a1 number seeding with coherent light
  cmd->add_option("--output", f.output, "pretty | csv | json")
      ->check(CLI::IsMember({"pretty", "csv", "json"}));
  cmd->add_option("--out", f.out_path, "write the result to this file");
  cmd->add_flag("--meta", f.meta, "also write a <out>.meta.json provenance sidecar");
}

nli::PartialConfig resolve_params(const CommonFlags& f) {
  nli::PartialConfig pc;
  if (!f.config_path.empty()) pc = nli::load_config_file(f.config_path);

  nli::PartialConfig over;
  if (f.gain) over.gain_a = over.gain_b = f.gain;
  if (f.gain_a) over.gain_a = f.gain_a;
  if (f.gain_b) over.gain_b = f.gain_b;
  over.phase_a = f.phase_a;
  over.phase_b = f.phase_b;
  over.t1 = f.t1;
  over.t2 = f.t2;
  over.eta1 = f.eta1;
  over.eta2 = f.eta2;
  if (f.seed_n) over.seed_a1 = nli::Seed::number(*f.seed_n);
  if (f.seed_m) over.seed_a2 = nli::Seed::number(*f.seed_m);
  if (f.seed_mu_sq) {
    if (*f.seed_mu_sq < 0.0) throw UsageError("--seed-mu-sq must be >= 0");
    over.seed_a2 = nli::Seed::coherent(std::sqrt(*f.seed_mu_sq));
  }
  pc.merge_from(over);
  return pc;
}

struct Requirement {
  const std::optional<double>* slot;
  const char* name;
};

void require_all(const std::vector<Requirement>& reqs) {
  std::string missing;
  for (const auto& r : reqs)
    if (!r.slot->has_value()) missing += std::string(missing.empty() ? "" : ", ") + r.name;
  if (!missing.empty()) throw UsageError("missing required parameter(s): " + missing);
}

// Build the full config; parameters the command does not use are filled with
// neutral values that provably cannot change its output.
nli::InterferometerConfig make_config(const nli::PartialConfig& pc) {
  nli::InterferometerConfig cfg;
  cfg.opa_a = nli::SqueezingParams(pc.gain_a.value_or(0.0), pc.phase_a.value_or(0.0));
  cfg.opa_b = nli::SqueezingParams(pc.gain_b.value_or(0.0), pc.phase_b.value_or(0.0));
  cfg.loss1 = nli::LossChannel(pc.t1.value_or(1.0));
  cfg.loss2 = nli::LossChannel(pc.t2.value_or(1.0));
  cfg.eta1 = nli::DetectorEfficiency(pc.eta1.value_or(1.0));
  cfg.eta2 = nli::DetectorEfficiency(pc.eta2.value_or(1.0));
  if (pc.seed_a1) cfg.seed_a1 = *pc.seed_a1;
  if (pc.seed_a2) cfg.seed_a2 = *pc.seed_a2;
  return cfg;
}

void require_gains(const nli::PartialConfig& pc) {
  require_all({{&pc.gain_a, "--gain/--gain-a"}, {&pc.gain_b, "--gain/--gain-b"}});
}

double require_phi(const CommonFlags& f, const nli::PartialConfig& pc) {
  if (f.phi) return *f.phi;
  if (pc.phase_a && pc.phase_b) return *pc.phase_a - *pc.phase_b;
  throw UsageError("missing required parameter(s): --phi (or phase_a and phase_b)");
}

void emit(const CommonFlags& f, const std::string& text) {
  if (f.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(f.out_path, std::ios::binary);
  if (!out) throw UsageError("cannot write output file: " + f.out_path);
  out << text;
}

void emit_meta(const CommonFlags& f, const nlohmann::json& meta) {
  if (!f.meta) return;
  if (f.out_path.empty())
    throw UsageError("--meta needs --out (the sidecar sits next to the data file)");
  std::ofstream out(f.out_path + ".meta.json", std::ios::binary);
  out << meta.dump(2) << "\n";
}

std::string pretty_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// A single named scalar in the three output modes.
std::string scalar_output(const CommonFlags& f, const char* name, double value) {
  if (f.output == "json")
    return nlohmann::json{{name, value}}.dump(2) + "\n";
  if (f.output == "csv")
    return std::string(name) + "\n" + nli::format_value(value) + "\n";
  return pretty_double(value) + "\n";
}

std::string optional_cell(const std::optional<double>& v) {
  return v ? nli::format_value(*v) : "";
}

int cmd_coeffs(const CommonFlags& f) {
  const nli::PartialConfig pc = resolve_params(f);
  require_gains(pc);
  require_all({{&pc.phase_a, "--phase-a"},
               {&pc.phase_b, "--phase-b"},
               {&pc.t1, "--t1"},
               {&pc.t2, "--t2"},
               {&pc.eta1, "--eta1"},
               {&pc.eta2, "--eta2"}});
  const nli::InterferometerConfig cfg = make_config(pc);
  const nli::TransferCoefficients tc = nli::build_transfer(cfg);

  const std::pair<const char*, std::complex<double>> entries[] = {
      {"a1", tc.a1},     {"alpha1", tc.alpha1}, {"b1", tc.b1}, {"beta1", tc.beta1},
      {"a2", tc.a2},     {"alpha2", tc.alpha2}, {"b2", tc.b2}, {"beta2", tc.beta2},
  };

  if (f.output == "json") {
    nlohmann::json j;
    for (const auto& [name, c] : entries) j[name] = {c.real(), c.imag()};
    j["ineff1"] = tc.ineff1;
    j["ineff2"] = tc.ineff2;
    emit(f, j.dump(2) + "\n");
  } else if (f.output == "csv") {
    std::string head, row;
    for (const auto& [name, c] : entries) {
      head += std::string(name) + "_re," + name + "_im,";
      row += nli::format_value(c.real()) + "," + nli::format_value(c.imag()) + ",";
    }
    head += "ineff1,ineff2";
    row += nli::format_value(tc.ineff1) + "," + nli::format_value(tc.ineff2);
    emit(f, head + "\n" + row + "\n");
  } else {
    std::ostringstream os;
    for (const auto& [name, c] : entries) {
      os << name;
      os << std::string(7 - std::string(name).size(), ' ') << "= "
         << pretty_double(c.real()) << (c.imag() < 0 ? " - " : " + ")
         << pretty_double(std::abs(c.imag())) << "i   |.|^2 = "
         << pretty_double(std::norm(c)) << "\n";
    }
    os << "ineff1  = " << pretty_double(tc.ineff1) << "\n";
    os << "ineff2  = " << pretty_double(tc.ineff2) << "\n";
    emit(f, os.str());
  }
  return 0;
}

int cmd_observe(const CommonFlags& f) {
  const nli::PartialConfig pc = resolve_params(f);
  require_gains(pc);
  require_all({{&pc.t1, "--t1"}, {&pc.t2, "--t2"}, {&pc.eta1, "--eta1"}});
  const double phi = require_phi(f, pc);
  const nli::InterferometerConfig cfg = make_config(pc);
  const nli::ObservableReport rep = nli::observe(cfg, phi);

  if (f.output == "json") {
    nlohmann::json j{{"phi", rep.phi}, {"mean_n1", rep.mean_n1}, {"contrast", rep.contrast}};
    j["var_n1"] = rep.var_n1 ? nlohmann::json(*rep.var_n1) : nlohmann::json();
    j["visibility"] = rep.visibility ? nlohmann::json(*rep.visibility) : nlohmann::json();
    j["delta_phi_sq"] = rep.delta_phi_sq ? nlohmann::json(*rep.delta_phi_sq) : nlohmann::json();
    j["snr"] = rep.snr ? nlohmann::json(*rep.snr) : nlohmann::json();
    emit(f, j.dump(2) + "\n");
  } else if (f.output == "csv") {
    emit(f, "phi,mean_n1,var_n1,visibility,contrast,delta_phi_sq,snr\n" +
                nli::format_value(rep.phi) + "," + nli::format_value(rep.mean_n1) + "," +
                optional_cell(rep.var_n1) + "," + optional_cell(rep.visibility) + "," +
                nli::format_value(rep.contrast) + "," + optional_cell(rep.delta_phi_sq) +
                "," + optional_cell(rep.snr) + "\n");
  } else {
    const auto opt_str = [](const std::optional<double>& v, const char* unit) {
      return v ? pretty_double(*v) + std::string(unit) : std::string("n/a");
    };
    std::ostringstream os;
    os << "phi          = " << pretty_double(rep.phi) << " rad\n";
    os << "mean_n1      = " << pretty_double(rep.mean_n1) << " photons\n";
    os << "var_n1       = " << opt_str(rep.var_n1, " photons^2") << "\n";
    os << "visibility   = " << opt_str(rep.visibility, "") << "\n";
    os << "contrast     = " << pretty_double(rep.contrast) << " photons\n";
    os << "delta_phi_sq = " << opt_str(rep.delta_phi_sq, " rad^2") << "\n";
    os << "snr          = " << opt_str(rep.snr, "") << "\n";
    emit(f, os.str());
  }
  return 0;
}

int cmd_visibility(const CommonFlags& f) {
  const nli::PartialConfig pc = resolve_params(f);
  require_gains(pc);
  require_all({{&pc.t1, "--t1"}, {&pc.t2, "--t2"}});
  const nli::InterferometerConfig cfg = make_config(pc);
  const double n = double(cfg.seed_a1.number_count());
  const double m = cfg.seed_a2.mean_photons();
  emit(f, scalar_output(f, "visibility", nli::visibility_number(cfg, n, m)));
  return 0;
}

int cmd_contrast(const CommonFlags& f) {
  const nli::PartialConfig pc = resolve_params(f);
  require_gains(pc);
  require_all({{&pc.t1, "--t1"}, {&pc.t2, "--t2"}, {&pc.eta1, "--eta1"}});
  const nli::InterferometerConfig cfg = make_config(pc);
  const double n = double(cfg.seed_a1.number_count());
  const double m = cfg.seed_a2.mean_photons();
  emit(f, scalar_output(f, "contrast", nli::contrast(cfg, n, m)));
  return 0;
}

void reject_detected_number_seed(const nli::InterferometerConfig& cfg) {
  if (cfg.seed_a1.number_count() > 0)
    throw UsageError("phase sensitivity and SNR have no closed form with a number seed on a1");
}

int cmd_sensitivity(const CommonFlags& f) {
  const nli::PartialConfig pc = resolve_params(f);
  require_gains(pc);
  require_all({{&pc.t1, "--t1"}, {&pc.t2, "--t2"}, {&pc.eta1, "--eta1"}});
  const nli::InterferometerConfig cfg = make_config(pc);
  reject_detected_number_seed(cfg);

  if (f.phi) {
    emit(f, scalar_output(f, "delta_phi_sq", nli::phase_variance(cfg, cfg.seed_a2, *f.phi)));
    return 0;
  }

  const nli::SensitivityOptimum opt = nli::minimize_phase_variance(cfg, cfg.seed_a2);
  if (f.output == "json") {
    emit(f, nlohmann::json{{"phi_min", opt.phi_min},
                           {"delta_phi_sq_min", opt.value},
                           {"delta_phi_sq_ql", opt.ql_value},
                           {"ratio_db", opt.ratio_db}}
                    .dump(2) +
                "\n");
  } else if (f.output == "csv") {
    emit(f, "phi_min,delta_phi_sq_min,delta_phi_sq_ql,ratio_db\n" +
                nli::format_value(opt.phi_min) + "," + nli::format_value(opt.value) + "," +
                nli::format_value(opt.ql_value) + "," + nli::format_value(opt.ratio_db) + "\n");
  } else {
    std::ostringstream os;
    os << "phi_min          = " << pretty_double(opt.phi_min) << " rad\n";
    os << "delta_phi_sq_min = " << pretty_double(opt.value) << " rad^2\n";
    os << "delta_phi_sq_ql  = " << pretty_double(opt.ql_value) << " rad^2\n";
    os << "vs unseeded QL   = " << pretty_double(opt.ratio_db) << " dB\n";
    emit(f, os.str());
  }
  return 0;
}

int cmd_snr(const CommonFlags& f) {
  const nli::PartialConfig pc = resolve_params(f);
  require_gains(pc);
  require_all({{&pc.t1, "--t1"}, {&pc.t2, "--t2"}, {&pc.eta1, "--eta1"}});
  const nli::InterferometerConfig cfg = make_config(pc);
  reject_detected_number_seed(cfg);
  // Without --phi this is the fringe minimum, which sits at phi = pi.
  const double phi = f.phi ? *f.phi : kPi;
  emit(f, scalar_output(f, "snr", nli::snr(cfg, cfg.seed_a2, phi)));
  return 0;
}

int sweep_threads() {
  const char* env = std::getenv("NLI_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1)
    throw UsageError("NLI_THREADS must be a positive integer");
  return static_cast<int>(v);
}

struct SweepFlags {
  std::string figure;
  std::string seed_kind = "number";
  std::optional<long> m_max;
  std::string m_values;
  std::string t_values;
};

std::vector<double> parse_value_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw UsageError(std::string("cannot parse ") + what + " entry: " + item);
    }
  }
  if (out.empty()) throw UsageError(std::string(what) + " list is empty");
  return out;
}

int cmd_sweep(const CommonFlags& f, const SweepFlags& sf) {
  if (f.output == "pretty")
    throw UsageError("sweep emits tables; choose --output csv or json");
  if (f.seed_m || f.seed_mu_sq || f.seed_n)
    throw UsageError("sweep scans the seed photon number itself; use --m-values/--m-max "
                     "and --seed-kind instead of seed flags");

  nli::PartialConfig pc = resolve_params(f);
  const bool custom = sf.figure == "custom";
  nli::InterferometerConfig base;
  if (custom) {
    require_gains(pc);
    require_all({{&pc.t1, "--t1"}, {&pc.t2, "--t2"}, {&pc.eta1, "--eta1"}});
    base = make_config(pc);
  } else {
    // The figure presets pin their own parameter point; explicit
    // parameters act as overrides on top of it.
    base = nli::default_figure_config();
    nli::PartialConfig defaults;
    defaults.gain_a = base.opa_a.gain;
    defaults.gain_b = base.opa_b.gain;
    defaults.phase_a = defaults.phase_b = 0.0;
    defaults.t1 = base.loss1.transmission;
    defaults.t2 = base.loss2.transmission;
    defaults.eta1 = base.eta1.eta;
    defaults.eta2 = base.eta2.eta;
    defaults.merge_from(pc);
    base = make_config(defaults);
  }

  const nli::SeedKind kind =
      sf.seed_kind == "coherent" ? nli::SeedKind::Coherent : nli::SeedKind::Number;

  std::vector<double> m_values;
  if (!sf.m_values.empty())
    m_values = parse_value_list(sf.m_values, "--m-values");
  else if (sf.m_max) {
    if (*sf.m_max < 0) throw UsageError("--m-max must be >= 0");
    for (long k = 0; k <= *sf.m_max; ++k) m_values.push_back(double(k));
  } else {
    m_values = nli::default_m_values();
  }

  std::vector<double> t_values = sf.t_values.empty()
                                     ? nli::default_t_values()
                                     : parse_value_list(sf.t_values, "--t-values");

  const int threads = sweep_threads();
  const bool json_mode = f.output == "json";

  std::string data;
  nlohmann::json meta{{"command", "sweep"},
                      {"figure", sf.figure},
                      {"seed_kind", sf.seed_kind},
                      {"format", f.output},
                      {"config", nlohmann::json::parse(nli::config_to_json(base))},
                      {"m_values", m_values}};

  if (sf.figure == "fig2") {
    const auto rows = nli::run_fig2(base, m_values, kind, threads);
    data = json_mode ? nli::to_json(rows) : nli::to_csv(rows);
  } else if (sf.figure == "fig3") {
    const auto rows = nli::run_fig3(base, m_values, kind, threads);
    data = json_mode ? nli::to_json(rows) : nli::to_csv(rows);
  } else if (sf.figure == "fig4a" || sf.figure == "fig4b" || sf.figure == "fig4c") {
    const nli::TransmissionAxis axis = sf.figure == "fig4a" ? nli::TransmissionAxis::Both
                                       : sf.figure == "fig4b" ? nli::TransmissionAxis::T2
                                                              : nli::TransmissionAxis::T1;
    const auto rows = nli::run_fig4(base, axis, t_values, m_values, kind, threads);
    data = json_mode ? nli::to_json(rows) : nli::to_csv(rows);
    meta["t_values"] = t_values;
  } else if (custom) {
    // All scalar columns on the caller's grid.
    std::string out = "m,visibility,contrast_ratio,dphi_min_db,dphi_ql_db,snr_ratio\n";
    const auto vc = nli::run_fig2(base, m_values, kind, threads);
    const auto se = nli::run_fig3(base, m_values, kind, threads);
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t k = 0; k < m_values.size(); ++k) {
      out += nli::format_value(vc[k].m) + "," + nli::format_value(vc[k].visibility) + "," +
             nli::format_value(vc[k].contrast_ratio) + "," +
             nli::format_value(se[k].dphi_min_db) + "," +
             nli::format_value(se[k].dphi_ql_db) + "," +
             nli::format_value(se[k].snr_ratio) + "\n";
      arr.push_back({{"m", vc[k].m},
                     {"visibility", vc[k].visibility},
                     {"contrast_ratio", vc[k].contrast_ratio},
                     {"dphi_min_db", se[k].dphi_min_db},
                     {"dphi_ql_db", se[k].dphi_ql_db},
                     {"snr_ratio", se[k].snr_ratio}});
    }
    data = json_mode ? arr.dump(2) + "\n" : out;
  } else {
    throw UsageError("unknown figure: " + sf.figure);
  }

  emit(f, data);
  emit_meta(f, meta);
  return 0;
}

struct VerifyFlags {
  std::string engine = "all";
  int trials = 200;
  int moment_trials = 1000;
  double rel_tol = 0.0;
  std::uint64_t rng_seed = 20240817;
};

int cmd_verify(const VerifyFlags& vf) {
  nli::VerifyOptions opt;
  opt.engine = vf.engine == "moment"     ? nli::VerifyEngine::Moment
               : vf.engine == "fock"     ? nli::VerifyEngine::Fock
               : vf.engine == "gaussian" ? nli::VerifyEngine::Gaussian
                                         : nli::VerifyEngine::All;
  opt.trials = vf.trials;
  opt.moment_trials = vf.moment_trials;
  opt.rel_tol_override = vf.rel_tol;
  opt.rng_seed = vf.rng_seed;

  const auto checks = nli::run_verification(opt);
  std::cout << nli::format_check_table(checks);
  if (!nli::all_passed(checks)) {
    std::cerr << "error: oracle verification failed\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"seeded nonlinear (SU(1,1)) interferometer model"};
  app.require_subcommand(1);

  CommonFlags f;
  SweepFlags sf;
  VerifyFlags vf;

  CLI::App* coeffs = app.add_subcommand("coeffs", "input->output transfer coefficients");
  add_common_options(coeffs, f, false);
  CLI::App* observe = app.add_subcommand("observe", "all D1 observables at one phase");
  add_common_options(observe, f, true);
  CLI::App* visibility = app.add_subcommand("visibility", "fringe visibility");
  add_common_options(visibility, f, false);
  CLI::App* contrast = app.add_subcommand("contrast", "fringe contrast");
  add_common_options(contrast, f, false);
  CLI::App* sensitivity =
      app.add_subcommand("sensitivity", "phase variance (minimized unless --phi is given)");
  add_common_options(sensitivity, f, true);
  CLI::App* snr = app.add_subcommand("snr", "signal-to-noise ratio (at phi = pi unless --phi)");
  add_common_options(snr, f, true);

  CLI::App* sweep = app.add_subcommand("sweep", "regenerate figure data tables");
  add_common_options(sweep, f, false);
  sweep->add_option("--figure", sf.figure, "fig2 | fig3 | fig4a | fig4b | fig4c | custom")
      ->required()
      ->check(CLI::IsMember({"fig2", "fig3", "fig4a", "fig4b", "fig4c", "custom"}));
  sweep->add_option("--seed-kind", sf.seed_kind, "number | coherent")
      ->check(CLI::IsMember({"number", "coherent"}));
  sweep->add_option("--m-max", sf.m_max, "sweep m = 0..m-max (integers)");
  sweep->add_option("--m-values", sf.m_values, "comma-separated seed photon numbers");
  sweep->add_option("--t-values", sf.t_values, "comma-separated transmissions (fig4)");

  CLI::App* verify = app.add_subcommand("verify", "run the oracle cross-check suite");
  verify->add_option("--engine", vf.engine, "all | moment | fock | gaussian")
      ->check(CLI::IsMember({"all", "moment", "fock", "gaussian"}));
  verify->add_option("--trials", vf.trials, "simulator trials per check")
      ->check(CLI::PositiveNumber);
  verify->add_option("--moment-trials", vf.moment_trials, "moment-engine trials per check")
      ->check(CLI::PositiveNumber);
  verify->add_option("--rel-tol", vf.rel_tol, "override every check's tolerance");
  verify->add_option("--rng-seed", vf.rng_seed, "random generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  // Sweep defaults to CSV; everything else to pretty.
  if (sweep->parsed() && f.output == "pretty" &&
      sweep->get_option("--output")->count() == 0)
    f.output = "csv";

  try {
    if (coeffs->parsed()) return cmd_coeffs(f);
    if (observe->parsed()) return cmd_observe(f);
    if (visibility->parsed()) return cmd_visibility(f);
    if (contrast->parsed()) return cmd_contrast(f);
    if (sensitivity->parsed()) return cmd_sensitivity(f);
    if (snr->parsed()) return cmd_snr(f);
    if (sweep->parsed()) return cmd_sweep(f, sf);
    if (verify->parsed()) return cmd_verify(vf);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const nli::InvalidParameter& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const nli::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
