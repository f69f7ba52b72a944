#pragma once

#include <cstdint>
#include <span>

#include "navecon/econ/types.hpp"
#include "navecon/logs/record.hpp"

namespace navecon::logs {

// Aggregated view of an episode log: termination rates plus first and second
// moments. Impulse moments come in two flavors: conditional on collision
// (the maintenance-cost input) and over all episodes including zeros.
struct EvaluationSummary {
  std::uint64_t n_episodes = 0;
  std::uint64_t collision_count = 0;

  double arrival_rate = 0.0;
  double collision_rate = 0.0;
  double timeout_rate = 0.0;

  double impulse_mean_ns = 0.0;  // over collision episodes only
  double impulse_std_ns = 0.0;
  double impulse_mean_all_ns = 0.0;  // over every episode
  double impulse_std_all_ns = 0.0;

  double power_mean_w = 0.0;  // of per-episode mean power
  double power_std_w = 0.0;
  double duration_mean_s = 0.0;
  double distance_mean_m = 0.0;
};

// Streaming accumulator behind EvaluationSummary. Moments are plain
// single-pass sums with the sample (n-1) denominator:
//   var = (sum_sq - sum * sum / n) / (n - 1), clamped at zero.
// merge() adds the raw sums, so shards aggregated in parallel match the
// aggregate of the concatenated log (exactly on counts and rates; up to
// floating-point summation order on the moments).
struct LogAccumulator {
  std::uint64_t n = 0;
  std::uint64_t arrivals = 0;
  std::uint64_t collisions = 0;
  std::uint64_t timeouts = 0;

  double impulse_sum = 0.0;      // collision episodes only
  double impulse_sum_sq = 0.0;
  double impulse_all_sum = 0.0;  // every episode
  double impulse_all_sum_sq = 0.0;
  double power_sum = 0.0;
  double power_sum_sq = 0.0;
  double duration_sum = 0.0;
  double distance_sum = 0.0;

  void add(const EpisodeRecord& record);
  void merge(const LogAccumulator& other);
  // throws ValidationError when no episodes were added
  EvaluationSummary finalize() const;
};

// Single-pass aggregation; throws ValidationError on an empty list.
EvaluationSummary aggregate(std::span<const EpisodeRecord> records);

// Summary -> per-run economic metrics. SLA compliance equals the arrival
// rate: the simulator ends every episode at the scenario timeout, so an
// arrival is on time by construction. timeout_s names that cutoff and must
// be positive.
econ::RunMetrics to_run_metrics(const EvaluationSummary& summary, double timeout_s);

// Training-phase statistics from a raw training log.
econ::TrainingStats training_stats_from_log(std::span<const EpisodeRecord> records);

}  // namespace navecon::logs
