#include "nli/sweep.hpp"

#include <cstdio>
#include <numbers>
#include <thread>

#include <json.hpp>

#include "nli/observables.hpp"

namespace nli {

namespace {

constexpr double kPi = std::numbers::pi;

Seed make_seed(SeedKind kind, double m) {
  if (kind == SeedKind::Coherent) return Seed::coherent(std::sqrt(m));
  return Seed::number(static_cast<long>(std::llround(m)));
}

// Coherent seeds take any nonnegative mean photon number; number states only
// exist at integers.
void validate_m_values(SeedKind kind, const std::vector<double>& m_values) {
  for (double m : m_values) {
    if (m < 0.0) throw InvalidParameter("seed photon numbers must be >= 0");
    if (kind == SeedKind::Number && m != std::floor(m))
      throw InvalidParameter("number-state sweeps need integer seed photon numbers, got " +
                             std::to_string(m));
  }
}

// Evaluate independent rows in deterministic order, optionally on a few
// threads; every row writes its own preallocated slot.
template <typename Fn>
void parallel_rows(std::size_t count, int threads, Fn&& fn) {
  const int workers = std::max(1, threads);
  if (workers == 1 || count < 2) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < count; k += workers) fn(k);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

InterferometerConfig default_figure_config() {
  InterferometerConfig cfg;
  cfg.opa_a = SqueezingParams(1e-3, 0.0);
  cfg.opa_b = SqueezingParams(1e-3, 0.0);
  cfg.loss1 = LossChannel(0.6);
  cfg.loss2 = LossChannel(0.4);
  cfg.eta1 = DetectorEfficiency(0.3);
  cfg.eta2 = DetectorEfficiency(1.0);
  return cfg;
}

std::vector<double> default_m_values() {
  std::vector<double> m(101);
  for (int k = 0; k <= 100; ++k) m[k] = k;
  return m;
}

std::vector<double> default_t_values() {
  std::vector<double> t(101);
  for (int k = 0; k <= 100; ++k) t[k] = 0.01 * k;
  return t;
}

std::vector<VisibilityContrastRow> run_fig2(const InterferometerConfig& base,
                                            const std::vector<double>& m_values,
                                            SeedKind kind, int threads) {
  validate_m_values(kind, m_values);
  // visibility and contrast depend on the seed only through its mean m, so
  // number and coherent sweeps share this path exactly
  const double c0 = contrast(base, 0.0, 0.0);
  std::vector<VisibilityContrastRow> rows(m_values.size());
  parallel_rows(m_values.size(), threads, [&](std::size_t k) {
    const double m = m_values[k];
    rows[k].m = m;
    rows[k].visibility = visibility_number(base, 0.0, m);
    rows[k].contrast_ratio = contrast(base, 0.0, m) / c0;
  });
  return rows;
}

std::vector<SensitivityRow> run_fig3(const InterferometerConfig& base,
                                     const std::vector<double>& m_values,
                                     SeedKind kind, int threads) {
  validate_m_values(kind, m_values);
  const double gain = base.opa_a.gain;
  const double ql0 = ql_phase_variance(0.0, gain);
  const double snr0 = snr(base, Seed::vacuum(), kPi);

  std::vector<SensitivityRow> rows(m_values.size());
  parallel_rows(m_values.size(), threads, [&](std::size_t k) {
    const double m = m_values[k];
    const Seed seed = make_seed(kind, m);
    const SensitivityOptimum opt = minimize_phase_variance(base, seed);
    rows[k].m = m;
    rows[k].dphi_min_db = opt.ratio_db;
    rows[k].dphi_ql_db = ratio_db(ql_phase_variance(m, gain), ql0);
    rows[k].snr_ratio = snr(base, seed, kPi) / snr0;
  });
  return rows;
}

std::vector<VisibilitySurfaceRow> run_fig4(const InterferometerConfig& base,
                                           TransmissionAxis axis,
                                           const std::vector<double>& t_values,
                                           const std::vector<double>& m_values,
                                           SeedKind kind, int threads) {
  validate_m_values(kind, m_values);
  for (double t : t_values)
    if (!(t >= 0.0 && t <= 1.0))
      throw InvalidParameter("transmission grid values must lie in [0, 1]");
  std::vector<VisibilitySurfaceRow> rows(t_values.size() * m_values.size());
  parallel_rows(t_values.size(), threads, [&](std::size_t it) {
    const double t = t_values[it];
    InterferometerConfig cfg = base;
    switch (axis) {
      case TransmissionAxis::Both:
        cfg.loss1 = LossChannel(t);
        cfg.loss2 = LossChannel(t);
        break;
      case TransmissionAxis::T2:
        cfg.loss2 = LossChannel(t);
        break;
      case TransmissionAxis::T1:
        cfg.loss1 = LossChannel(t);
        break;
    }
    for (std::size_t im = 0; im < m_values.size(); ++im) {
      VisibilitySurfaceRow& row = rows[it * m_values.size() + im];
      row.t = t;
      row.m = m_values[im];
      try {
        row.visibility = visibility_number(cfg, 0.0, row.m);
      } catch (const Error& err) {
        row.visibility = 0.0;
        row.skip_reason = err.what();
      }
    }
  });
  return rows;
}

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string to_csv(const std::vector<VisibilityContrastRow>& rows) {
  std::string out = "m,visibility,contrast_ratio\n";
  for (const auto& r : rows)
    out += format_value(r.m) + "," + format_value(r.visibility) + "," +
           format_value(r.contrast_ratio) + "\n";
  return out;
}

std::string to_csv(const std::vector<SensitivityRow>& rows) {
  std::string out = "m,dphi_min_db,dphi_ql_db,snr_ratio\n";
  for (const auto& r : rows)
    out += format_value(r.m) + "," + format_value(r.dphi_min_db) + "," +
           format_value(r.dphi_ql_db) + "," + format_value(r.snr_ratio) + "\n";
  return out;
}

namespace {

// Skip reasons are free text; quote them so embedded commas keep the column
// structure intact.
std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string to_csv(const std::vector<VisibilitySurfaceRow>& rows) {
  std::string out = "t,m,visibility,skip_reason\n";
  for (const auto& r : rows) {
    out += format_value(r.t) + "," + format_value(r.m) + ",";
    if (r.skip_reason.empty())
      out += format_value(r.visibility);
    out += "," + csv_quote(r.skip_reason) + "\n";
  }
  return out;
}

std::string to_json(const std::vector<VisibilityContrastRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows)
    arr.push_back({{"m", r.m}, {"visibility", r.visibility}, {"contrast_ratio", r.contrast_ratio}});
  return arr.dump(2) + "\n";
}

std::string to_json(const std::vector<SensitivityRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows)
    arr.push_back({{"m", r.m},
                   {"dphi_min_db", r.dphi_min_db},
                   {"dphi_ql_db", r.dphi_ql_db},
                   {"snr_ratio", r.snr_ratio}});
  return arr.dump(2) + "\n";
}

std::string to_json(const std::vector<VisibilitySurfaceRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json obj = {{"t", r.t}, {"m", r.m}};
    if (r.skip_reason.empty())
      obj["visibility"] = r.visibility;
    else
      obj["skip_reason"] = r.skip_reason;
    arr.push_back(obj);
  }
  return arr.dump(2) + "\n";
}

}  // namespace nli
