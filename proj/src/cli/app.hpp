#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace CLI {
class App;
}

namespace navecon::cli {

// Parsed values behind every subcommand flag. Defaults are the reference
// calibration, so the zero-config path reproduces the bundled baseline.
struct Options {
  std::filesystem::path data_dir;

  // simulate
  std::string level = "l2";
  std::string policy = "noisy-heading";
  std::uint64_t episodes = 100;
  std::uint64_t seed = 1;
  std::filesystem::path sim_out;
  unsigned workers = 0;
  std::optional<double> goal_distance, timeout, arena_length, arena_width, goal_radius;
  std::optional<std::uint32_t> pedestrians;
  std::optional<double> ped_speed, ped_radius;
  std::optional<double> noise_std, noise_corr, cruise_fraction, repulse_gain, influence_radius;

  // shared economics input surface
  std::filesystem::path log_path;
  bool paper_baseline = false;
  bool lenient = false;
  std::filesystem::path bom_file, params_file, training_file, metrics_file;
  std::optional<double> c_elec, c_shock, r_base, sla_timeout, p_failure, c_human_op;
  std::optional<double> collision, sla, impulse, power, runtime;
  double target_runtime = 1.0;
  bool no_projection = false;
  bool distance_scale = false;
  std::optional<double> source_distance, target_distance;
  std::optional<double> deliveries_per_day;

  // outputs
  std::filesystem::path table_out;  // default stdout
  std::filesystem::path csv_out;
  std::filesystem::path chart_out;

  // breakeven
  std::uint64_t n_max = 1000;

  // sensitivity
  std::vector<std::string> axis_specs;  // "name=lo:hi:steps"
  std::string frontier_axis;

  // leaderboard
  std::vector<std::string> entries;  // "policy_id=log_path"

  // validate
  std::optional<double> validate_timeout;
};

// Register every subcommand and flag on `app` (exposed so tests can compare
// the registry against the documentation).
void build_app(CLI::App& app, Options& options);

// Parse and dispatch. Exit codes: 0 success, 1 validation failure, 2 I/O
// failure, 3 infeasible analysis (frontier without a root).
int run(int argc, const char* const* argv);

}  // namespace navecon::cli
