#include "cli/fixtures.hpp"

#include <fstream>
#include <initializer_list>
#include <string>

#include <json.hpp>

#include "navecon/errors.hpp"

namespace navecon::cli {

namespace {

using json = nlohmann::json;

json load_json(const std::filesystem::path& path,
               std::initializer_list<const char*> allowed_keys) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open fixture file: " + path.string());
  json j = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    throw ValidationError("fixture file is not a JSON object: " + path.string());
  }
  auto version = j.find("schema_version");
  if (version == j.end() || !version->is_number_integer() || version->get<int>() != 1) {
    throw ValidationError("fixture file needs schema_version 1: " + path.string());
  }
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key == "schema_version") continue;
    bool known = false;
    for (const char* allowed : allowed_keys) {
      if (key == allowed) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ValidationError("fixture file " + path.string() + ": unknown key '" + key + "'");
    }
  }
  return j;
}

double get_number(const json& j, const char* key, const std::filesystem::path& path) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_number()) {
    throw ValidationError("fixture file " + path.string() + ": missing numeric key '" +
                          key + "'");
  }
  return it->get<double>();
}

}  // namespace

std::filesystem::path default_data_dir() {
#ifdef NAVECON_DATA_DIR
  return NAVECON_DATA_DIR;
#else
  return "data";
#endif
}

econ::HardwareBOM load_bom(const std::filesystem::path& path) {
  json j = load_json(path, {"items"});
  auto items = j.find("items");
  if (items == j.end() || !items->is_array()) {
    throw ValidationError("fixture file " + path.string() + ": missing 'items' array");
  }
  econ::HardwareBOM bom;
  for (const auto& item : *items) {
    if (!item.is_object() || !item.contains("name") || !item["name"].is_string()) {
      throw ValidationError("fixture file " + path.string() +
                            ": BOM items need a string 'name'");
    }
    econ::BomItem out;
    out.name = item["name"].get<std::string>();
    out.unit_cost_usd = get_number(item, "unit_cost_usd", path);
    if (!item.contains("quantity") || !item["quantity"].is_number_unsigned()) {
      throw ValidationError("fixture file " + path.string() +
                            ": BOM item '" + out.name + "' needs an unsigned 'quantity'");
    }
    out.quantity = item["quantity"].get<std::uint32_t>();
    bom.items.push_back(std::move(out));
  }
  bom.validate();
  return bom;
}

econ::CostParams load_params(const std::filesystem::path& path) {
  json j = load_json(path, {"c_elec_usd_per_kwh", "c_shock_per_ns", "r_base_usd",
                            "sla_timeout_s", "p_failure", "c_human_op_usd"});
  econ::CostParams p;
  p.c_elec_usd_per_kwh = get_number(j, "c_elec_usd_per_kwh", path);
  p.c_shock_per_ns = get_number(j, "c_shock_per_ns", path);
  p.r_base_usd = get_number(j, "r_base_usd", path);
  p.sla_timeout_s = get_number(j, "sla_timeout_s", path);
  p.p_failure = get_number(j, "p_failure", path);
  p.c_human_op_usd = get_number(j, "c_human_op_usd", path);
  p.validate();
  return p;
}

econ::TrainingStats load_training(const std::filesystem::path& path) {
  json j = load_json(path, {"episodes", "collision_rate", "mean_collision_impulse_ns",
                            "mean_episode_time_s"});
  econ::TrainingStats t;
  auto episodes = j.find("episodes");
  if (episodes == j.end() || !episodes->is_number_unsigned()) {
    throw ValidationError("fixture file " + path.string() +
                          ": missing unsigned key 'episodes'");
  }
  t.episodes = episodes->get<std::uint64_t>();
  t.collision_rate = get_number(j, "collision_rate", path);
  t.mean_collision_impulse_ns = get_number(j, "mean_collision_impulse_ns", path);
  t.mean_episode_time_s = get_number(j, "mean_episode_time_s", path);
  t.validate();
  return t;
}

econ::RunMetrics load_metrics(const std::filesystem::path& path) {
  json j = load_json(path, {"sla_compliance", "collision_rate",
                            "mean_collision_impulse_ns", "mean_power_w", "runtime_hr"});
  econ::RunMetrics m;
  m.sla_compliance = get_number(j, "sla_compliance", path);
  m.collision_rate = get_number(j, "collision_rate", path);
  m.mean_collision_impulse_ns = get_number(j, "mean_collision_impulse_ns", path);
  m.mean_power_w = get_number(j, "mean_power_w", path);
  m.runtime_hr = get_number(j, "runtime_hr", path);
  m.validate();
  return m;
}

analysis::EconBaseline load_paper_baseline(const std::filesystem::path& data_dir) {
  std::filesystem::path dir = data_dir / "paper_baseline";
  analysis::EconBaseline baseline;
  baseline.bom = load_bom(dir / "hardware_bom.json");
  baseline.params = load_params(dir / "econ_params.json");
  baseline.training = load_training(dir / "training_stats.json");
  baseline.metrics = load_metrics(dir / "eval_metrics.json");
  baseline.projection = econ::ProjectionPolicy{};
  return baseline;
}

}  // namespace navecon::cli
