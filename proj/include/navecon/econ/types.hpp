#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Domain types of the economics engine. Every struct carries a validate()
// that throws ValidationError with a field-naming message; the operations in
// econ/model.hpp validate their inputs before computing.

namespace navecon::econ {

// One line item of the robot bill of materials.
struct BomItem {
  std::string name;
  double unit_cost_usd = 0.0;
  std::uint32_t quantity = 0;
};

// Upfront hardware investment (chassis, compute, sensors).
struct HardwareBOM {
  std::vector<BomItem> items;

  void validate() const;
  // exact sum of unit_cost * quantity, no rounding
  double total_usd() const;
};

// Calibrated economic coefficients shared by every cost and revenue formula.
// Defaults are the baseline calibration; the bundled fixture files carry the
// same values as editable data.
struct CostParams {
  double c_elec_usd_per_kwh = 0.20;  // commercial electricity rate
  double c_shock_per_ns = 1e-5;      // fraction of hardware cost per N*s of impulse
  double r_base_usd = 3.49;          // base delivery fee
  double sla_timeout_s = 600.0;      // hard delivery-time cutoff
  double p_failure = 0.0;            // probability of a human rescue per run
  double c_human_op_usd = 0.0;       // cost of one human intervention

  void validate() const;
};

// Aggregate record of the training phase; collisions during training are the
// dominant data-collection expense.
struct TrainingStats {
  std::uint64_t episodes = 0;
  double collision_rate = 0.0;             // in [0, 1]
  double mean_collision_impulse_ns = 0.0;  // conditional on a collision
  double mean_episode_time_s = 0.0;

  void validate() const;
};

// Per-run operating statistics of an evaluated policy.
// mean_collision_impulse_ns is the mean over collision episodes only, so the
// expected impulse per run is collision_rate * mean_collision_impulse_ns.
struct RunMetrics {
  double sla_compliance = 0.0;             // in [0, 1]
  double collision_rate = 0.0;             // in [0, 1]
  double mean_collision_impulse_ns = 0.0;  // conditional on a collision
  double mean_power_w = 0.0;
  double runtime_hr = 0.0;                 // > 0

  void validate() const;
};

// Maps reduced-scale testbed metrics onto the accounting scenario (a 6 km,
// one-hour delivery). The default replaces only the runtime; collision rate,
// impulse, power, and SLA compliance pass through unscaled.
struct ProjectionPolicy {
  // nullopt keeps the measured runtime (identity projection)
  std::optional<double> target_runtime_hr = 1.0;

  // Exploratory only: additionally scale the expected collision impulse per
  // run by target_distance_m / source_distance_m. Off by default; the
  // default projection keeps collision statistics unscaled.
  bool distance_scale_maintenance = false;
  double source_distance_m = 20.0;
  double target_distance_m = 6000.0;

  void validate() const;
  static ProjectionPolicy identity() {
    return ProjectionPolicy{std::nullopt, false, 20.0, 6000.0};
  }
};

// Fraction of the per-run cost attributed to each component; sums to one
// whenever the total run cost is positive, all zero otherwise.
struct CostShares {
  double energy = 0.0;
  double maintenance = 0.0;
  double rescue = 0.0;
};

// Full economic statement for one policy evaluation.
struct EconReport {
  double hardware_cost_usd = 0.0;
  double training_cost_usd = 0.0;
  double pre_run_total_usd = 0.0;     // hardware + training, exact

  double energy_cost_usd = 0.0;       // per run
  double maintenance_cost_usd = 0.0;  // per run
  double rescue_cost_usd = 0.0;       // per run
  double run_cost_total_usd = 0.0;    // energy + maintenance + rescue, exact

  double revenue_usd = 0.0;           // per run
  double profit_usd = 0.0;            // revenue - run cost, exact

  std::optional<std::uint64_t> bep_runs;  // empty = not viable
  std::optional<double> bep_ratio;        // unrounded pre-run / profit

  CostShares cost_shares;
  double sla_compliance = 0.0;  // echoed input, for reporting
};

}  // namespace navecon::econ
