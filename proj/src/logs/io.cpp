#include "navecon/logs/io.hpp"

#include <array>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string_view>

#include <json.hpp>

#include "navecon/errors.hpp"

namespace navecon::logs {

namespace {

using json = nlohmann::ordered_json;

constexpr std::array<std::string_view, 11> kSchemaKeys = {
    "episode_id", "scenario_id",         "policy_id",    "seed",
    "termination", "duration_s",         "distance_m",   "collision_impulse_ns",
    "mean_power_w", "max_power_w",       "energy_wh"};

bool is_schema_key(std::string_view key) {
  for (auto k : kSchemaKeys) {
    if (k == key) return true;
  }
  return false;
}

[[noreturn]] void fail_line(std::size_t line_no, const std::string& what) {
  throw ValidationError("log line " + std::to_string(line_no) + ": " + what);
}

std::string require_string(const json& j, const char* key, std::size_t line_no) {
  auto it = j.find(key);
  if (it == j.end()) fail_line(line_no, std::string("missing field '") + key + "'");
  if (!it->is_string()) fail_line(line_no, std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

double require_number(const json& j, const char* key, std::size_t line_no) {
  auto it = j.find(key);
  if (it == j.end()) fail_line(line_no, std::string("missing field '") + key + "'");
  if (!it->is_number()) fail_line(line_no, std::string("field '") + key + "' must be a number");
  return it->get<double>();
}

std::uint64_t require_u64(const json& j, const char* key, std::size_t line_no) {
  auto it = j.find(key);
  if (it == j.end()) fail_line(line_no, std::string("missing field '") + key + "'");
  if (!it->is_number_unsigned()) {
    fail_line(line_no, std::string("field '") + key + "' must be an unsigned integer");
  }
  return it->get<std::uint64_t>();
}

EpisodeRecord parse_line(const std::string& line, std::size_t line_no,
                         const ReadOptions& options) {
  json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    fail_line(line_no, "not a JSON object");
  }

  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (is_schema_key(key)) continue;
    if (options.strict) {
      fail_line(line_no, "unknown field '" + key + "'");
    }
    std::string message =
        "log line " + std::to_string(line_no) + ": ignoring unknown field '" + key + "'";
    if (options.warn) {
      options.warn(message);
    } else {
      std::cerr << "warning: " << message << "\n";
    }
  }

  EpisodeRecord r;
  r.episode_id = require_string(j, "episode_id", line_no);
  r.scenario_id = require_string(j, "scenario_id", line_no);
  r.policy_id = require_string(j, "policy_id", line_no);
  r.seed = require_u64(j, "seed", line_no);
  std::string term = require_string(j, "termination", line_no);
  auto parsed = termination_from_string(term);
  if (!parsed) fail_line(line_no, "field 'termination' has unknown value '" + term + "'");
  r.termination = *parsed;
  r.duration_s = require_number(j, "duration_s", line_no);
  r.distance_m = require_number(j, "distance_m", line_no);
  r.collision_impulse_ns = require_number(j, "collision_impulse_ns", line_no);
  r.mean_power_w = require_number(j, "mean_power_w", line_no);
  r.max_power_w = require_number(j, "max_power_w", line_no);
  r.energy_wh = require_number(j, "energy_wh", line_no);

  try {
    r.validate(options.scenario_timeout_s);
  } catch (const ValidationError& e) {
    fail_line(line_no, e.what());
  }
  return r;
}

}  // namespace

std::vector<EpisodeRecord> read_log(std::istream& in, const ReadOptions& options) {
  std::vector<EpisodeRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    records.push_back(parse_line(line, line_no, options));
  }
  return records;
}

std::vector<EpisodeRecord> read_log(const std::filesystem::path& path,
                                    const ReadOptions& options) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open log file: " + path.string());
  return read_log(in, options);
}

std::string to_line(const EpisodeRecord& r) {
  json j;
  j["episode_id"] = r.episode_id;
  j["scenario_id"] = r.scenario_id;
  j["policy_id"] = r.policy_id;
  j["seed"] = r.seed;
  j["termination"] = to_string(r.termination);
  j["duration_s"] = r.duration_s;
  j["distance_m"] = r.distance_m;
  j["collision_impulse_ns"] = r.collision_impulse_ns;
  j["mean_power_w"] = r.mean_power_w;
  j["max_power_w"] = r.max_power_w;
  j["energy_wh"] = r.energy_wh;
  return j.dump();
}

void write_log(std::ostream& out, std::span<const EpisodeRecord> records) {
  for (const auto& r : records) {
    out << to_line(r) << '\n';
  }
}

void write_log(const std::filesystem::path& path, std::span<const EpisodeRecord> records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path.string());
  write_log(out, records);
  out.flush();
  if (!out) throw IoError("failed writing log file: " + path.string());
}

}  // namespace navecon::logs
