#include "cli/app.hpp"

#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli/fixtures.hpp"
#include "navecon/analysis/emit.hpp"
#include "navecon/errors.hpp"
#include "navecon/logs/aggregate.hpp"
#include "navecon/logs/io.hpp"
#include "navecon/money.hpp"
#include "navecon/sim/simulator.hpp"

namespace navecon::cli {

namespace {

void add_econ_input_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--log", opt.log_path, "Episode log to aggregate into run metrics");
  cmd->add_flag("--paper-baseline", opt.paper_baseline,
                "Use the bundled reference evaluation metrics instead of a log");
  cmd->add_option("--metrics", opt.metrics_file, "Run-metrics fixture file (JSON)");
  cmd->add_option("--bom", opt.bom_file, "Hardware BOM fixture file (JSON)");
  cmd->add_option("--params", opt.params_file, "Cost-parameter fixture file (JSON)");
  cmd->add_option("--training", opt.training_file, "Training-stats fixture file (JSON)");
  cmd->add_flag("--lenient", opt.lenient,
                "Tolerate unknown log fields and skip unreadable leaderboard logs");

  cmd->add_option("--c-elec", opt.c_elec, "Electricity rate override ($/kWh)");
  cmd->add_option("--c-shock", opt.c_shock, "Shock coefficient override (per N*s)");
  cmd->add_option("--r-base", opt.r_base, "Base delivery fee override ($)");
  cmd->add_option("--sla-timeout", opt.sla_timeout, "SLA timeout override (s)");
  cmd->add_option("--p-failure", opt.p_failure, "Rescue probability override");
  cmd->add_option("--c-human-op", opt.c_human_op, "Human intervention cost override ($)");

  cmd->add_option("--collision", opt.collision, "Collision rate override (fraction)");
  cmd->add_option("--sla", opt.sla, "SLA compliance override (fraction)");
  cmd->add_option("--impulse", opt.impulse,
                  "Mean collision impulse override (N*s, conditional on collision)");
  cmd->add_option("--power", opt.power, "Mean power override (W)");
  cmd->add_option("--runtime", opt.runtime, "Measured runtime override (hr)");

  cmd->add_option("--target-runtime", opt.target_runtime,
                  "Projection target runtime (hr)")
      ->capture_default_str();
  cmd->add_flag("--no-projection", opt.no_projection,
                "Keep the measured runtime (identity projection)");
  cmd->add_flag("--distance-scale-maintenance", opt.distance_scale,
                "Exploratory: scale expected collision impulse by the distance ratio");
  cmd->add_option("--source-distance", opt.source_distance,
                  "Measured delivery distance (m) for --distance-scale-maintenance");
  cmd->add_option("--target-distance", opt.target_distance,
                  "Projected delivery distance (m) for --distance-scale-maintenance");
}

void add_output_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--out", opt.table_out, "Write the text table here instead of stdout");
  cmd->add_option("--csv", opt.csv_out, "Also write a CSV artifact here");
}

std::filesystem::path fixture_or(const std::filesystem::path& explicit_path,
                                 const std::filesystem::path& data_dir,
                                 const char* name) {
  if (!explicit_path.empty()) return explicit_path;
  return data_dir / "paper_baseline" / name;
}

// Assemble the economic baseline from fixture files, an optional episode
// log, and flag overrides (flag > file > built-in default).
analysis::EconBaseline make_baseline(const Options& opt, bool need_metrics) {
  analysis::EconBaseline b;
  b.bom = load_bom(fixture_or(opt.bom_file, opt.data_dir, "hardware_bom.json"));
  b.params = load_params(fixture_or(opt.params_file, opt.data_dir, "econ_params.json"));
  b.training =
      load_training(fixture_or(opt.training_file, opt.data_dir, "training_stats.json"));

  if (opt.c_elec) b.params.c_elec_usd_per_kwh = *opt.c_elec;
  if (opt.c_shock) b.params.c_shock_per_ns = *opt.c_shock;
  if (opt.r_base) b.params.r_base_usd = *opt.r_base;
  if (opt.sla_timeout) b.params.sla_timeout_s = *opt.sla_timeout;
  if (opt.p_failure) b.params.p_failure = *opt.p_failure;
  if (opt.c_human_op) b.params.c_human_op_usd = *opt.c_human_op;
  b.params.validate();

  if (!opt.log_path.empty()) {
    logs::ReadOptions read_options;
    read_options.strict = !opt.lenient;
    auto records = logs::read_log(opt.log_path, read_options);
    b.metrics = logs::to_run_metrics(logs::aggregate(records), b.params.sla_timeout_s);
  } else if (!opt.metrics_file.empty() || opt.paper_baseline) {
    b.metrics =
        load_metrics(fixture_or(opt.metrics_file, opt.data_dir, "eval_metrics.json"));
  } else if (need_metrics) {
    throw ValidationError("need one of --log, --metrics, or --paper-baseline");
  }

  if (opt.collision) b.metrics.collision_rate = *opt.collision;
  if (opt.sla) b.metrics.sla_compliance = *opt.sla;
  if (opt.impulse) b.metrics.mean_collision_impulse_ns = *opt.impulse;
  if (opt.power) b.metrics.mean_power_w = *opt.power;
  if (opt.runtime) b.metrics.runtime_hr = *opt.runtime;
  b.metrics.validate();

  if (opt.no_projection) {
    b.projection.target_runtime_hr = std::nullopt;
  } else {
    b.projection.target_runtime_hr = opt.target_runtime;
  }
  b.projection.distance_scale_maintenance = opt.distance_scale;
  if (opt.source_distance) b.projection.source_distance_m = *opt.source_distance;
  if (opt.target_distance) b.projection.target_distance_m = *opt.target_distance;
  b.projection.validate();
  return b;
}

sim::ScenarioConfig make_scenario(const Options& opt) {
  sim::ScenarioConfig scenario;
  if (opt.level == "l1") {
    scenario = sim::ScenarioConfig::level_1();
  } else if (opt.level == "l2") {
    scenario = sim::ScenarioConfig::level_2();
  } else {
    throw ValidationError("unknown level '" + opt.level + "' (expected l1 or l2)");
  }
  scenario.master_seed = opt.seed;
  scenario.n_episodes = opt.episodes;
  if (opt.goal_distance) scenario.goal_distance_m = *opt.goal_distance;
  if (opt.goal_radius) scenario.goal_radius_m = *opt.goal_radius;
  if (opt.timeout) scenario.timeout_s = *opt.timeout;
  if (opt.arena_length) scenario.arena.length_m = *opt.arena_length;
  if (opt.arena_width) scenario.arena.width_m = *opt.arena_width;
  if (opt.pedestrians) scenario.n_pedestrians = *opt.pedestrians;
  if (opt.ped_speed) scenario.pedestrian_speed_mps = *opt.ped_speed;
  if (opt.ped_radius) scenario.pedestrian_radius_m = *opt.ped_radius;
  scenario.validate();
  return scenario;
}

sim::PolicySpec make_policy(const Options& opt) {
  sim::PolicySpec policy;
  if (opt.policy == "straight-line") {
    policy.kind = sim::PolicyKind::StraightLine;
  } else if (opt.policy == "potential-field") {
    policy.kind = sim::PolicyKind::PotentialField;
  } else if (opt.policy == "noisy-heading") {
    policy.kind = sim::PolicyKind::NoisyHeading;
  } else {
    throw ValidationError("unknown policy '" + opt.policy + "'");
  }
  if (opt.noise_std) policy.noise_std_rad = *opt.noise_std;
  if (opt.noise_corr) policy.noise_corr_time_s = *opt.noise_corr;
  if (opt.cruise_fraction) policy.cruise_fraction = *opt.cruise_fraction;
  if (opt.repulse_gain) policy.repulse_gain = *opt.repulse_gain;
  if (opt.influence_radius) policy.influence_radius_m = *opt.influence_radius;
  policy.validate();
  return policy;
}

void emit_table(const Options& opt, const std::string& table) {
  if (opt.table_out.empty()) {
    std::cout << table;
    return;
  }
  analysis::emit_to_file(opt.table_out, [&](std::ostream& out) { out << table; });
}

int cmd_simulate(const Options& opt) {
  if (opt.sim_out.empty()) throw ValidationError("simulate needs --out");
  sim::ScenarioConfig scenario = make_scenario(opt);
  sim::PolicySpec policy = make_policy(opt);

  auto records = sim::run_batch(scenario, policy, opt.workers);
  logs::write_log(opt.sim_out, records);

  std::uint64_t arrive = 0, collision = 0, timeout = 0;
  for (const auto& r : records) {
    switch (r.termination) {
      case logs::Termination::Arrive: ++arrive; break;
      case logs::Termination::Collision: ++collision; break;
      case logs::Termination::Timeout: ++timeout; break;
    }
  }
  std::cout << "episodes=" << records.size() << " arrive=" << arrive
            << " collision=" << collision << " timeout=" << timeout << "\n";
  return 0;
}

int cmd_evaluate(const Options& opt) {
  analysis::EconBaseline b = make_baseline(opt, /*need_metrics=*/true);
  econ::EconReport report =
      econ::build_report(b.bom, b.training, b.metrics, b.params, b.projection);

  emit_table(opt, analysis::report_table(report, opt.deliveries_per_day));
  if (!opt.csv_out.empty()) {
    analysis::emit_to_file(opt.csv_out, [&](std::ostream& out) {
      analysis::write_report_csv(out, report);
    });
  }
  return 0;
}

int cmd_breakeven(const Options& opt) {
  analysis::EconBaseline b = make_baseline(opt, /*need_metrics=*/true);
  econ::EconReport report =
      econ::build_report(b.bom, b.training, b.metrics, b.params, b.projection);
  analysis::BepCurve curve = analysis::bep_curve(report, opt.n_max);

  std::ostringstream text;
  text << "BEP: " << (report.bep_runs ? std::to_string(*report.bep_runs) : "None") << "\n";
  if (opt.deliveries_per_day && *opt.deliveries_per_day > 0.0) {
    if (report.bep_runs) {
      text << "Time to profitability (days): "
           << format_usd(static_cast<double>(*report.bep_runs) / *opt.deliveries_per_day, 1)
           << "\n";
    } else {
      text << "Time to profitability (days): None\n";
    }
  }
  emit_table(opt, text.str());

  if (!opt.csv_out.empty()) {
    analysis::emit_to_file(opt.csv_out, [&](std::ostream& out) {
      analysis::write_curve_csv(out, curve);
    });
  }
  if (!opt.chart_out.empty()) {
    analysis::emit_to_file(opt.chart_out, [&](std::ostream& out) {
      analysis::write_curve_chart_svg(out, curve, "Cumulative position vs. runs");
    });
  }
  return 0;
}

analysis::AxisRange parse_axis_spec(const std::string& spec) {
  auto eq = spec.find('=');
  if (eq == std::string::npos) {
    throw ValidationError("axis spec '" + spec + "' must be name=lo:hi:steps");
  }
  std::string name = spec.substr(0, eq);
  auto axis = analysis::axis_from_name(name);
  if (!axis) throw ValidationError("unknown sweep axis '" + name + "'");

  std::string rest = spec.substr(eq + 1);
  auto c1 = rest.find(':');
  auto c2 = rest.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    throw ValidationError("axis spec '" + spec + "' must be name=lo:hi:steps");
  }
  analysis::AxisRange range;
  range.axis = *axis;
  range.lo = parse_double_strict(rest.substr(0, c1));
  range.hi = parse_double_strict(rest.substr(c1 + 1, c2 - c1 - 1));
  double steps = parse_double_strict(rest.substr(c2 + 1));
  if (steps < 1.0 || steps != static_cast<double>(static_cast<std::uint32_t>(steps))) {
    throw ValidationError("axis spec '" + spec + "': steps must be a positive integer");
  }
  range.steps = static_cast<std::uint32_t>(steps);
  return range;
}

int cmd_sensitivity(const Options& opt) {
  analysis::SweepSpec spec;
  spec.baseline = make_baseline(opt, /*need_metrics=*/true);
  for (const auto& axis_spec : opt.axis_specs) {
    spec.axes.push_back(parse_axis_spec(axis_spec));
  }

  if (!opt.frontier_axis.empty()) {
    auto axis = analysis::axis_from_name(opt.frontier_axis);
    if (!axis) throw ValidationError("unknown frontier axis '" + opt.frontier_axis + "'");
    auto points = analysis::frontier(spec, *axis);

    emit_table(opt, analysis::frontier_table(points, spec, *axis));
    if (!opt.csv_out.empty()) {
      analysis::emit_to_file(opt.csv_out, [&](std::ostream& out) {
        analysis::write_frontier_csv(out, points, spec, *axis);
      });
    }
    bool any_root = false;
    for (const auto& p : points) any_root = any_root || p.root.has_value();
    if (!any_root) {
      std::cerr << "no zero-profit root inside the requested bracket\n";
      return 3;
    }
    return 0;
  }

  analysis::SweepGrid grid = analysis::sweep(spec);
  emit_table(opt, analysis::grid_table(grid));
  if (!opt.csv_out.empty()) {
    analysis::emit_to_file(opt.csv_out, [&](std::ostream& out) {
      analysis::write_grid_csv(out, grid);
    });
  }
  if (!opt.chart_out.empty()) {
    analysis::emit_to_file(opt.chart_out, [&](std::ostream& out) {
      analysis::write_profit_chart_svg(out, grid, "Profit vs. " +
                                       std::string(analysis::axis_name(grid.axes.empty()
                                           ? analysis::Axis::CollisionRate
                                           : grid.axes[0].axis)));
    });
  }
  return 0;
}

int cmd_leaderboard(const Options& opt) {
  analysis::EconBaseline b = make_baseline(opt, /*need_metrics=*/false);

  std::vector<analysis::LeaderboardEntryInput> entries;
  for (const auto& entry : opt.entries) {
    auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= entry.size()) {
      throw ValidationError("entry '" + entry + "' must be policy_id=log_path");
    }
    entries.push_back({entry.substr(0, eq), entry.substr(eq + 1)});
  }

  analysis::LeaderboardOptions lb_options;
  lb_options.lenient = opt.lenient;
  lb_options.on_error = [](const std::string& message) {
    std::cerr << "warning: " << message << "\n";
  };
  auto rows = analysis::leaderboard(entries, b, lb_options);

  emit_table(opt, analysis::leaderboard_table(rows));
  if (!opt.csv_out.empty()) {
    analysis::emit_to_file(opt.csv_out, [&](std::ostream& out) {
      analysis::write_leaderboard_csv(out, rows);
    });
  }
  return 0;
}

int cmd_validate(const Options& opt) {
  if (opt.log_path.empty()) throw ValidationError("validate needs --log");
  logs::ReadOptions read_options;
  read_options.strict = !opt.lenient;
  read_options.scenario_timeout_s = opt.validate_timeout;
  auto records = logs::read_log(opt.log_path, read_options);
  std::cout << "ok: " << records.size() << " records\n";
  return 0;
}

}  // namespace

void build_app(CLI::App& app, Options& opt) {
  opt.data_dir = default_data_dir();
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from an INI config file");
  app.add_option("--data-dir", opt.data_dir, "Directory holding the fixture files")
      ->capture_default_str();

  auto* simulate = app.add_subcommand(
      "simulate", "Run navigation episodes and write an episode log");
  simulate->add_option("--level", opt.level, "Scenario difficulty: l1 or l2")
      ->check(CLI::IsMember({"l1", "l2"}))
      ->capture_default_str();
  simulate
      ->add_option("--policy", opt.policy,
                   "straight-line, potential-field, or noisy-heading")
      ->check(CLI::IsMember({"straight-line", "potential-field", "noisy-heading"}))
      ->capture_default_str();
  simulate->add_option("--episodes", opt.episodes, "Number of episodes")
      ->capture_default_str();
  simulate->add_option("--seed", opt.seed, "Master seed")->capture_default_str();
  simulate->add_option("--out", opt.sim_out, "Output episode log path")->required();
  simulate->add_option("--workers", opt.workers, "Worker threads (0 = auto)")
      ->capture_default_str();
  simulate->add_option("--goal-distance", opt.goal_distance, "Goal distance (m)");
  simulate->add_option("--goal-radius", opt.goal_radius, "Goal disc radius (m)");
  simulate->add_option("--timeout", opt.timeout, "Episode timeout (s)");
  simulate->add_option("--arena-length", opt.arena_length, "Arena length (m)");
  simulate->add_option("--arena-width", opt.arena_width, "Arena width (m)");
  simulate->add_option("--pedestrians", opt.pedestrians, "Pedestrian count");
  simulate->add_option("--ped-speed", opt.ped_speed, "Pedestrian speed (m/s)");
  simulate->add_option("--ped-radius", opt.ped_radius, "Pedestrian radius (m)");
  simulate->add_option("--noise-std", opt.noise_std,
                       "NoisyHeading: stationary heading-bias std-dev (rad)");
  simulate->add_option("--noise-corr", opt.noise_corr,
                       "NoisyHeading: heading-bias correlation time (s)");
  simulate->add_option("--cruise-frac", opt.cruise_fraction,
                       "Commanded speed as a fraction of v_max");
  simulate->add_option("--repulse-gain", opt.repulse_gain,
                       "PotentialField: repulsion gain");
  simulate->add_option("--influence-radius", opt.influence_radius,
                       "PotentialField: pedestrian influence radius (m)");

  auto* evaluate = app.add_subcommand(
      "evaluate", "Turn an episode log (or fixture metrics) into an economic report");
  add_econ_input_flags(evaluate, opt);
  add_output_flags(evaluate, opt);
  evaluate->add_option("--deliveries-per-day", opt.deliveries_per_day,
                       "Adds the time-to-profitability line");

  auto* breakeven = app.add_subcommand(
      "breakeven", "Break-even point and cumulative position curve");
  add_econ_input_flags(breakeven, opt);
  add_output_flags(breakeven, opt);
  breakeven->add_option("--n-max", opt.n_max, "Curve endpoint (runs)")
      ->capture_default_str();
  breakeven->add_option("--chart", opt.chart_out, "Write an SVG chart here");
  breakeven->add_option("--deliveries-per-day", opt.deliveries_per_day,
                        "Adds the time-to-profitability line");

  auto* sensitivity = app.add_subcommand(
      "sensitivity", "Sweep economic variables or solve the viability frontier");
  add_econ_input_flags(sensitivity, opt);
  add_output_flags(sensitivity, opt);
  sensitivity
      ->add_option("--axis", opt.axis_specs,
                   "Axis spec name=lo:hi:steps (repeatable); names: collision_rate, "
                   "sla_compliance, mean_power, c_shock, r_base")
      ->required();
  sensitivity->add_option("--frontier", opt.frontier_axis,
                          "Solve profit = 0 along this axis instead of sweeping");
  sensitivity->add_option("--chart", opt.chart_out,
                          "Write an SVG profit chart here (single-axis sweeps)");

  auto* board = app.add_subcommand(
      "leaderboard", "Rank policy logs by economic performance");
  add_econ_input_flags(board, opt);
  add_output_flags(board, opt);
  board
      ->add_option("--entry", opt.entries,
                   "Leaderboard entry policy_id=log_path (repeatable)")
      ->required();

  auto* validate = app.add_subcommand(
      "validate", "Check an episode log against the schema");
  validate->add_option("--log", opt.log_path, "Episode log to check")->required();
  validate->add_flag("--lenient", opt.lenient, "Tolerate unknown fields");
  validate->add_option("--timeout", opt.validate_timeout,
                       "Scenario timeout (s) for the Timeout-duration check");
}

int run(int argc, const char* const* argv) {
  CLI::App app{"navecon: navigation economics testbed"};
  Options opt;
  build_app(app, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand("simulate")) return cmd_simulate(opt);
    if (app.got_subcommand("evaluate")) return cmd_evaluate(opt);
    if (app.got_subcommand("breakeven")) return cmd_breakeven(opt);
    if (app.got_subcommand("sensitivity")) return cmd_sensitivity(opt);
    if (app.got_subcommand("leaderboard")) return cmd_leaderboard(opt);
    if (app.got_subcommand("validate")) return cmd_validate(opt);
    std::cerr << "error: no subcommand given\n";
    return 1;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace navecon::cli
