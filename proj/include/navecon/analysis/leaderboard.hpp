#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "navecon/analysis/sweep.hpp"
#include "navecon/logs/aggregate.hpp"

namespace navecon::analysis {

struct LeaderboardEntryInput {
  std::string policy_id;
  std::filesystem::path log_path;
};

// Traditional navigation metrics next to the economic ones, one row per
// evaluated policy.
struct LeaderboardRow {
  std::string policy_id;
  double success_rate = 0.0;
  double collision_rate = 0.0;
  double path_length_m = 0.0;
  double run_cost_usd = 0.0;
  double revenue_usd = 0.0;
  double profit_usd = 0.0;
  std::optional<std::uint64_t> bep_runs;
};

struct LeaderboardOptions {
  // lenient skips entries whose logs fail to load, reporting each through
  // on_error; strict (default) propagates the first failure
  bool lenient = false;
  std::function<void(const std::string&)> on_error;
};

// Total order: profit descending, then break-even ascending with NotViable
// after every finite value, then policy id.
bool row_precedes(const LeaderboardRow& a, const LeaderboardRow& b);

// Row for one already-aggregated policy log.
LeaderboardRow leaderboard_row(std::string policy_id,
                               const logs::EvaluationSummary& summary,
                               const EconBaseline& baseline);

// Load, aggregate, and rank every policy against the shared baseline.
std::vector<LeaderboardRow> leaderboard(std::span<const LeaderboardEntryInput> entries,
                                        const EconBaseline& baseline,
                                        const LeaderboardOptions& options = {});

}  // namespace navecon::analysis
