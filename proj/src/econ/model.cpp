#include "navecon/econ/model.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "navecon/errors.hpp"

namespace navecon::econ {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

void require_fraction(double v, const char* name) {
  require(std::isfinite(v) && v >= 0.0 && v <= 1.0,
          std::string(name) + " must be in [0, 1]");
}

void require_nonneg(double v, const char* name) {
  require(std::isfinite(v) && v >= 0.0, std::string(name) + " must be >= 0");
}

}  // namespace

void HardwareBOM::validate() const {
  require(!items.empty(), "hardware BOM must have at least one item");
  for (const auto& item : items) {
    require_nonneg(item.unit_cost_usd, ("BOM item '" + item.name + "' unit_cost").c_str());
    require(item.quantity >= 1, "BOM item '" + item.name + "' quantity must be >= 1");
  }
}

double HardwareBOM::total_usd() const {
  double total = 0.0;
  for (const auto& item : items) {
    total += item.unit_cost_usd * static_cast<double>(item.quantity);
  }
  return total;
}

void CostParams::validate() const {
  require_nonneg(c_elec_usd_per_kwh, "c_elec");
  require_nonneg(c_shock_per_ns, "c_shock");
  require_nonneg(r_base_usd, "r_base");
  require_nonneg(sla_timeout_s, "sla_timeout");
  require_fraction(p_failure, "p_failure");
  require_nonneg(c_human_op_usd, "c_human_op");
}

void TrainingStats::validate() const {
  require_fraction(collision_rate, "training collision_rate");
  require_nonneg(mean_collision_impulse_ns, "training mean_collision_impulse");
  require_nonneg(mean_episode_time_s, "training mean_episode_time");
}

void RunMetrics::validate() const {
  require_fraction(sla_compliance, "sla_compliance");
  require_fraction(collision_rate, "collision_rate");
  require_nonneg(mean_collision_impulse_ns, "mean_collision_impulse");
  require_nonneg(mean_power_w, "mean_power");
  require(std::isfinite(runtime_hr) && runtime_hr > 0.0, "runtime must be > 0");
}

void ProjectionPolicy::validate() const {
  if (target_runtime_hr.has_value()) {
    require(std::isfinite(*target_runtime_hr) && *target_runtime_hr > 0.0,
            "projection target runtime must be > 0");
  }
  if (distance_scale_maintenance) {
    require(std::isfinite(source_distance_m) && source_distance_m > 0.0,
            "projection source_distance must be > 0");
    require(std::isfinite(target_distance_m) && target_distance_m > 0.0,
            "projection target_distance must be > 0");
  }
}

double hardware_cost(const HardwareBOM& bom) {
  bom.validate();
  return bom.total_usd();
}

double training_cost(const TrainingStats& stats, const CostParams& params,
                     double hardware_usd) {
  stats.validate();
  params.validate();
  require_nonneg(hardware_usd, "hardware cost");
  return params.c_shock_per_ns * stats.mean_collision_impulse_ns *
         stats.collision_rate * static_cast<double>(stats.episodes) * hardware_usd;
}

double energy_cost(const RunMetrics& metrics, const CostParams& params) {
  metrics.validate();
  params.validate();
  return (metrics.mean_power_w / 1000.0) * metrics.runtime_hr * params.c_elec_usd_per_kwh;
}

double maintenance_cost(const RunMetrics& metrics, const CostParams& params,
                        double hardware_usd) {
  metrics.validate();
  params.validate();
  require_nonneg(hardware_usd, "hardware cost");
  return params.c_shock_per_ns * metrics.mean_collision_impulse_ns *
         metrics.collision_rate * hardware_usd;
}

double rescue_cost(const CostParams& params) {
  params.validate();
  return params.p_failure * params.c_human_op_usd;
}

double revenue(const RunMetrics& metrics, const CostParams& params) {
  metrics.validate();
  params.validate();
  return params.r_base_usd * metrics.sla_compliance;
}

int sla_factor(double delivery_time_s, const CostParams& params) {
  params.validate();
  if (!(std::isfinite(delivery_time_s) && delivery_time_s >= 0.0)) {
    throw ValidationError("delivery time must be >= 0");
  }
  return delivery_time_s <= params.sla_timeout_s ? 1 : 0;
}

double profit_per_run(double revenue_usd, double run_cost_total_usd) {
  return revenue_usd - run_cost_total_usd;
}

double cumulative_position(double pre_run_total_usd, double profit_per_run_usd,
                           std::uint64_t n_runs) {
  return static_cast<double>(n_runs) * profit_per_run_usd - pre_run_total_usd;
}

std::optional<std::uint64_t> break_even(double pre_run_total_usd,
                                        double profit_per_run_usd) {
  require_nonneg(pre_run_total_usd, "pre-run total");
  if (!(profit_per_run_usd > kViabilityEpsUsd)) return std::nullopt;

  double ratio = pre_run_total_usd / profit_per_run_usd;
  if (ratio >= 9.0e18) {
    // would overflow the run counter; economically indistinguishable from
    // never recovering the investment
    return std::nullopt;
  }
  auto n = static_cast<std::uint64_t>(std::ceil(ratio));

  // ceil(pre/profit) can land one off from the defining condition
  // (cumulative_position(n) >= 0) in the last ulp; nudge to the exact
  // boundary so the two agree for every input.
  while (n > 0 && cumulative_position(pre_run_total_usd, profit_per_run_usd, n - 1) >= 0.0) {
    --n;
  }
  while (cumulative_position(pre_run_total_usd, profit_per_run_usd, n) < 0.0) {
    ++n;
  }
  return n;
}

std::optional<double> break_even_ratio(double pre_run_total_usd,
                                       double profit_per_run_usd) {
  require_nonneg(pre_run_total_usd, "pre-run total");
  if (!(profit_per_run_usd > kViabilityEpsUsd)) return std::nullopt;
  return pre_run_total_usd / profit_per_run_usd;
}

RunMetrics project(const RunMetrics& metrics, const ProjectionPolicy& policy) {
  metrics.validate();
  policy.validate();
  RunMetrics out = metrics;
  if (policy.target_runtime_hr.has_value()) {
    out.runtime_hr = *policy.target_runtime_hr;
  }
  if (policy.distance_scale_maintenance) {
    // Scale the expected impulse per run by the distance ratio. The factor is
    // attached to the impulse so the collision rate stays a probability.
    out.mean_collision_impulse_ns *=
        policy.target_distance_m / policy.source_distance_m;
  }
  return out;
}

EconReport build_report(const HardwareBOM& bom, const TrainingStats& training,
                        const RunMetrics& metrics, const CostParams& params,
                        const ProjectionPolicy& projection) {
  EconReport report;
  report.hardware_cost_usd = hardware_cost(bom);
  report.training_cost_usd = training_cost(training, params, report.hardware_cost_usd);
  report.pre_run_total_usd = report.hardware_cost_usd + report.training_cost_usd;

  RunMetrics projected = project(metrics, projection);
  report.energy_cost_usd = energy_cost(projected, params);
  report.maintenance_cost_usd = maintenance_cost(projected, params, report.hardware_cost_usd);
  report.rescue_cost_usd = rescue_cost(params);
  report.run_cost_total_usd =
      report.energy_cost_usd + report.maintenance_cost_usd + report.rescue_cost_usd;

  report.revenue_usd = revenue(projected, params);
  report.profit_usd = profit_per_run(report.revenue_usd, report.run_cost_total_usd);
  report.bep_runs = break_even(report.pre_run_total_usd, report.profit_usd);
  report.bep_ratio = break_even_ratio(report.pre_run_total_usd, report.profit_usd);

  if (report.run_cost_total_usd > 0.0) {
    report.cost_shares.energy = report.energy_cost_usd / report.run_cost_total_usd;
    report.cost_shares.maintenance = report.maintenance_cost_usd / report.run_cost_total_usd;
    report.cost_shares.rescue = report.rescue_cost_usd / report.run_cost_total_usd;
  }
  report.sla_compliance = projected.sla_compliance;
  return report;
}

}  // namespace navecon::econ
