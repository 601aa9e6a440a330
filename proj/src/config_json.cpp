#include "nli/config_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nli {

namespace {

Seed parse_seed_state(const nlohmann::json& obj) {
  const std::string kind = obj.at("kind").get<std::string>();
  if (kind == "vacuum") return Seed::vacuum();
  if (kind == "number") {
    const auto& value = obj.at("value");
    if (!value.is_number_integer())
      throw InvalidParameter("number seed wants an integer \"value\"");
    return Seed::number(value.get<long>());
  }
  if (kind == "coherent") {
    const auto& value = obj.at("value");
    if (!value.is_array() || value.size() != 2)
      throw InvalidParameter("coherent seed wants \"value\": [re, im]");
    return Seed::coherent({value[0].get<double>(), value[1].get<double>()});
  }
  throw InvalidParameter("seed kind must be vacuum, number or coherent, got \"" + kind + "\"");
}

}  // namespace

void PartialConfig::merge_from(const PartialConfig& over) {
  const auto take = [](auto& dst, const auto& src) {
    if (src) dst = src;
  };
  take(gain_a, over.gain_a);
  take(phase_a, over.phase_a);
  take(gain_b, over.gain_b);
  take(phase_b, over.phase_b);
  take(t1, over.t1);
  take(t2, over.t2);
  take(eta1, over.eta1);
  take(eta2, over.eta2);
  take(seed_a1, over.seed_a1);
  take(seed_a2, over.seed_a2);
}

PartialConfig parse_config_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidParameter(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidParameter("config must be a JSON object");

  PartialConfig pc;
  const auto scalar = [&](const char* key, std::optional<double>& slot) {
    if (!j.contains(key)) return;
    if (!j[key].is_number()) throw InvalidParameter(std::string(key) + " must be a number");
    slot = j[key].get<double>();
  };
  scalar("gain_a", pc.gain_a);
  scalar("phase_a", pc.phase_a);
  scalar("gain_b", pc.gain_b);
  scalar("phase_b", pc.phase_b);
  scalar("t1", pc.t1);
  scalar("t2", pc.t2);
  scalar("eta1", pc.eta1);
  scalar("eta2", pc.eta2);

  if (j.contains("seed")) {
    const auto& s = j["seed"];
    if (!s.is_object()) throw InvalidParameter("seed must be an object");
    const std::string mode = s.at("mode").get<std::string>();
    const Seed seed = parse_seed_state(s);
    if (mode == "a1")
      pc.seed_a1 = seed;
    else if (mode == "a2")
      pc.seed_a2 = seed;
    else
      throw InvalidParameter("seed mode must be \"a1\" or \"a2\", got \"" + mode + "\"");
  }
  return pc;
}

PartialConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_json(ss.str());
}

std::string config_to_json(const InterferometerConfig& cfg) {
  nlohmann::json j = {
      {"gain_a", cfg.opa_a.gain}, {"phase_a", cfg.opa_a.phase},
      {"gain_b", cfg.opa_b.gain}, {"phase_b", cfg.opa_b.phase},
      {"t1", cfg.loss1.transmission}, {"t2", cfg.loss2.transmission},
      {"eta1", cfg.eta1.eta}, {"eta2", cfg.eta2.eta},
  };

  const auto seed_json = [](const Seed& s) -> nlohmann::json {
    switch (s.kind()) {
      case Seed::Kind::Number:
        return {{"kind", "number"}, {"value", s.number_count()}};
      case Seed::Kind::Coherent:
        return {{"kind", "coherent"},
                {"value", {s.amplitude().real(), s.amplitude().imag()}}};
      default:
        return {{"kind", "vacuum"}};
    }
  };
  if (!cfg.seed_a2.is_vacuum()) {
    nlohmann::json s = seed_json(cfg.seed_a2);
    s["mode"] = "a2";
    j["seed"] = s;
  } else if (!cfg.seed_a1.is_vacuum()) {
    nlohmann::json s = seed_json(cfg.seed_a1);
    s["mode"] = "a1";
    j["seed"] = s;
  }
  return j.dump(2) + "\n";
}

}  // namespace nli
