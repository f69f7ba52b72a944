#include "navecon/analysis/leaderboard.hpp"

#include <algorithm>
#include <limits>

#include "navecon/errors.hpp"
#include "navecon/logs/io.hpp"

namespace navecon::analysis {

bool row_precedes(const LeaderboardRow& a, const LeaderboardRow& b) {
  if (a.profit_usd != b.profit_usd) return a.profit_usd > b.profit_usd;
  std::uint64_t bep_a = a.bep_runs.value_or(std::numeric_limits<std::uint64_t>::max());
  std::uint64_t bep_b = b.bep_runs.value_or(std::numeric_limits<std::uint64_t>::max());
  if (bep_a != bep_b) return bep_a < bep_b;
  return a.policy_id < b.policy_id;
}

LeaderboardRow leaderboard_row(std::string policy_id,
                               const logs::EvaluationSummary& summary,
                               const EconBaseline& baseline) {
  econ::RunMetrics metrics =
      logs::to_run_metrics(summary, baseline.params.sla_timeout_s);
  econ::EconReport report =
      econ::build_report(baseline.bom, baseline.training, metrics, baseline.params,
                         baseline.projection);

  LeaderboardRow row;
  row.policy_id = std::move(policy_id);
  row.success_rate = summary.arrival_rate;
  row.collision_rate = summary.collision_rate;
  row.path_length_m = summary.distance_mean_m;
  row.run_cost_usd = report.run_cost_total_usd;
  row.revenue_usd = report.revenue_usd;
  row.profit_usd = report.profit_usd;
  row.bep_runs = report.bep_runs;
  return row;
}

std::vector<LeaderboardRow> leaderboard(std::span<const LeaderboardEntryInput> entries,
                                        const EconBaseline& baseline,
                                        const LeaderboardOptions& options) {
  if (entries.empty()) {
    throw ValidationError("leaderboard needs at least one policy entry");
  }

  std::vector<LeaderboardRow> rows;
  rows.reserve(entries.size());
  for (const auto& entry : entries) {
    try {
      auto records = logs::read_log(entry.log_path);
      rows.push_back(
          leaderboard_row(entry.policy_id, logs::aggregate(records), baseline));
    } catch (const std::exception& e) {
      if (!options.lenient) throw;
      if (options.on_error) {
        options.on_error("policy '" + entry.policy_id + "' skipped: " + e.what());
      }
    }
  }
  if (rows.empty()) {
    throw ValidationError("leaderboard: every policy entry failed to load");
  }

  std::stable_sort(rows.begin(), rows.end(), row_precedes);
  return rows;
}

}  // namespace navecon::analysis
