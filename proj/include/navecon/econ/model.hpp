#pragma once

#include <cstdint>
#include <optional>

#include "navecon/econ/types.hpp"

// Per-run unit economics: cost, revenue, profit, and break-even analysis.
// All operations are pure functions of their arguments; currency stays
// unrounded double precision throughout (display rounding lives in emit).

namespace navecon::econ {

// Profit at or below this threshold counts as not viable; it separates
// "profit is numerically zero" from a genuine margin before dividing by it.
inline constexpr double kViabilityEpsUsd = 1e-9;

// Upfront hardware investment: exact BOM sum.
double hardware_cost(const HardwareBOM& bom);

// Data-collection cost of the training phase:
//   c_shock * mean impulse * collision rate * episodes * hardware cost
double training_cost(const TrainingStats& stats, const CostParams& params,
                     double hardware_usd);

// Per-run electricity cost: (mean power / 1000) * runtime * rate.
double energy_cost(const RunMetrics& metrics, const CostParams& params);

// Per-run wear-and-tear from collision shock:
//   c_shock * mean impulse (conditional on collision) * collision rate * hardware cost
double maintenance_cost(const RunMetrics& metrics, const CostParams& params,
                        double hardware_usd);

// Expected human-intervention cost per run: p_failure * c_human_op.
double rescue_cost(const CostParams& params);

// Expected revenue per run: base fee * aggregate SLA compliance.
double revenue(const RunMetrics& metrics, const CostParams& params);

// Hard service-level gate for a single delivery: 1 iff on time (boundary
// inclusive), 0 otherwise.
int sla_factor(double delivery_time_s, const CostParams& params);

// Per-run profit: revenue minus total run cost.
double profit_per_run(double revenue_usd, double run_cost_total_usd);

// Cash position after n runs: n * profit - pre-run cost (negative = loss).
double cumulative_position(double pre_run_total_usd, double profit_per_run_usd,
                           std::uint64_t n_runs);

// First run count at which the cumulative position is non-negative, or
// nullopt when profit_per_run <= kViabilityEpsUsd (not viable). The returned
// count is exactly the smallest n with cumulative_position(n) >= 0.
std::optional<std::uint64_t> break_even(double pre_run_total_usd,
                                        double profit_per_run_usd);

// Unrounded pre-run / profit ratio behind break_even; nullopt when not viable.
std::optional<double> break_even_ratio(double pre_run_total_usd,
                                       double profit_per_run_usd);

// Apply a projection policy to measured metrics. Throws ValidationError when
// the policy's target runtime is not positive.
RunMetrics project(const RunMetrics& metrics, const ProjectionPolicy& policy);

// Compose the full statement: pre-run costs, projected per-run costs,
// revenue, profit, break-even, and cost shares.
EconReport build_report(const HardwareBOM& bom, const TrainingStats& training,
                        const RunMetrics& metrics, const CostParams& params,
                        const ProjectionPolicy& projection);

}  // namespace navecon::econ
