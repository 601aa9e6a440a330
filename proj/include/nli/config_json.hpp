#pragma once

#include <optional>
#include <string>

#include "nli/parameters.hpp"

namespace nli {

/// Flat JSON schema consumed by the CLI:
///   { "gain_a": <real>, "phase_a": <real>, "gain_b": <real>, "phase_b": <real>,
///     "t1": <real>, "t2": <real>, "eta1": <real>, "eta2": <real>,
///     "seed": { "mode": "a1"|"a2", "kind": "vacuum"|"number"|"coherent",
///               "value": <integer> | [<re>, <im>] } }
/// Every scalar key is optional at parse time; requiredness is decided by the
/// command that consumes the values.
struct PartialConfig {
  std::optional<double> gain_a, phase_a, gain_b, phase_b;
  std::optional<double> t1, t2, eta1, eta2;
  std::optional<Seed> seed_a1, seed_a2;

  /// Overlay: any value present in `over` wins.
  void merge_from(const PartialConfig& over);
};

PartialConfig parse_config_json(const std::string& json_text);
PartialConfig load_config_file(const std::string& path);

/// Serialize a full config back to the same schema (used by the --meta
/// provenance sidecar).
std::string config_to_json(const InterferometerConfig& cfg);

}  // namespace nli
