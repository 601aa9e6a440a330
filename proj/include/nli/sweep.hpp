#pragma once

#include <string>
#include <vector>

#include "nli/parameters.hpp"

namespace nli {

/// Whether a sweep seeds the undetected mode with number states or phase-zero
/// coherent states of the same mean photon number.
enum class SeedKind { Number, Coherent };

/// Transmission axis of the visibility surface sweeps.
enum class TransmissionAxis {
  Both,  // T1 = T2 = t
  T2,    // T1 fixed, T2 = t
  T1,    // T2 fixed, T1 = t
};

/// The loss/efficiency/gain point the bundled figure presets evaluate at:
/// T1 = 0.6, T2 = 0.4, eta1 = 0.3, G_A = G_B = 1e-3.  eta2 does not enter
/// any D1 observable and is set to 1.
InterferometerConfig default_figure_config();

/// Default seed-photon grid m = 0, 1, ..., 100.
std::vector<double> default_m_values();

/// Default transmission grid t = 0.00, 0.01, ..., 1.00.
std::vector<double> default_t_values();

struct VisibilityContrastRow {
  double m = 0.0;
  double visibility = 0.0;
  double contrast_ratio = 0.0;
};

struct SensitivityRow {
  double m = 0.0;
  double dphi_min_db = 0.0;
  double dphi_ql_db = 0.0;
  double snr_ratio = 0.0;
};

struct VisibilitySurfaceRow {
  double t = 0.0;
  double m = 0.0;
  double visibility = 0.0;
  std::string skip_reason;  // non-empty when the cell is degenerate
};

/// Visibility and contrast ratio vs seed photons.
std::vector<VisibilityContrastRow> run_fig2(const InterferometerConfig& base,
                                            const std::vector<double>& m_values,
                                            SeedKind kind = SeedKind::Number,
                                            int threads = 1);

/// Minimized phase variance, quantum-limited benchmark and minimum SNR vs
/// seed photons, in dB relative to the unseeded benchmarks.
std::vector<SensitivityRow> run_fig3(const InterferometerConfig& base,
                                     const std::vector<double>& m_values,
                                     SeedKind kind = SeedKind::Number,
                                     int threads = 1);

/// Visibility surface over one transmission axis and the seed-photon grid.
/// Rows are ordered by (t, m) ascending; degenerate cells carry a skip
/// reason instead of a value.
std::vector<VisibilitySurfaceRow> run_fig4(const InterferometerConfig& base,
                                           TransmissionAxis axis,
                                           const std::vector<double>& t_values,
                                           const std::vector<double>& m_values,
                                           SeedKind kind = SeedKind::Number,
                                           int threads = 1);

// Deterministic serialization: CSV with a header row and 17-significant-digit
// decimal values (lossless round trip), or a JSON array of row objects.
std::string to_csv(const std::vector<VisibilityContrastRow>& rows);
std::string to_csv(const std::vector<SensitivityRow>& rows);
std::string to_csv(const std::vector<VisibilitySurfaceRow>& rows);
std::string to_json(const std::vector<VisibilityContrastRow>& rows);
std::string to_json(const std::vector<SensitivityRow>& rows);
std::string to_json(const std::vector<VisibilitySurfaceRow>& rows);

/// Decimal formatting used for every numeric cell (%.17g).
std::string format_value(double v);

}  // namespace nli
