#include "navecon/logs/aggregate.hpp"

#include <cmath>

#include "navecon/errors.hpp"

namespace navecon::logs {

namespace {

double mean_of(double sum, std::uint64_t n) {
  return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

double sample_std(double sum, double sum_sq, std::uint64_t n) {
  if (n < 2) return 0.0;
  double nd = static_cast<double>(n);
  double var = (sum_sq - sum * sum / nd) / (nd - 1.0);
  return std::sqrt(std::max(var, 0.0));
}

}  // namespace

void LogAccumulator::add(const EpisodeRecord& r) {
  ++n;
  switch (r.termination) {
    case Termination::Arrive: ++arrivals; break;
    case Termination::Collision: ++collisions; break;
    case Termination::Timeout: ++timeouts; break;
  }
  if (r.termination == Termination::Collision) {
    impulse_sum += r.collision_impulse_ns;
    impulse_sum_sq += r.collision_impulse_ns * r.collision_impulse_ns;
  }
  impulse_all_sum += r.collision_impulse_ns;
  impulse_all_sum_sq += r.collision_impulse_ns * r.collision_impulse_ns;
  power_sum += r.mean_power_w;
  power_sum_sq += r.mean_power_w * r.mean_power_w;
  duration_sum += r.duration_s;
  distance_sum += r.distance_m;
}

void LogAccumulator::merge(const LogAccumulator& o) {
  n += o.n;
  arrivals += o.arrivals;
  collisions += o.collisions;
  timeouts += o.timeouts;
  impulse_sum += o.impulse_sum;
  impulse_sum_sq += o.impulse_sum_sq;
  impulse_all_sum += o.impulse_all_sum;
  impulse_all_sum_sq += o.impulse_all_sum_sq;
  power_sum += o.power_sum;
  power_sum_sq += o.power_sum_sq;
  duration_sum += o.duration_sum;
  distance_sum += o.distance_sum;
}

EvaluationSummary LogAccumulator::finalize() const {
  if (n == 0) throw ValidationError("cannot aggregate an empty episode log");
  EvaluationSummary s;
  s.n_episodes = n;
  s.collision_count = collisions;
  double nd = static_cast<double>(n);
  s.arrival_rate = static_cast<double>(arrivals) / nd;
  s.collision_rate = static_cast<double>(collisions) / nd;
  s.timeout_rate = static_cast<double>(timeouts) / nd;
  s.impulse_mean_ns = mean_of(impulse_sum, collisions);
  s.impulse_std_ns = sample_std(impulse_sum, impulse_sum_sq, collisions);
  s.impulse_mean_all_ns = mean_of(impulse_all_sum, n);
  s.impulse_std_all_ns = sample_std(impulse_all_sum, impulse_all_sum_sq, n);
  s.power_mean_w = mean_of(power_sum, n);
  s.power_std_w = sample_std(power_sum, power_sum_sq, n);
  s.duration_mean_s = mean_of(duration_sum, n);
  s.distance_mean_m = mean_of(distance_sum, n);
  return s;
}

EvaluationSummary aggregate(std::span<const EpisodeRecord> records) {
  LogAccumulator acc;
  for (const auto& r : records) acc.add(r);
  return acc.finalize();
}

econ::RunMetrics to_run_metrics(const EvaluationSummary& summary, double timeout_s) {
  if (!(std::isfinite(timeout_s) && timeout_s > 0.0)) {
    throw ValidationError("timeout must be > 0");
  }
  econ::RunMetrics m;
  m.sla_compliance = summary.arrival_rate;
  m.collision_rate = summary.collision_rate;
  m.mean_collision_impulse_ns = summary.impulse_mean_ns;
  m.mean_power_w = summary.power_mean_w;
  m.runtime_hr = summary.duration_mean_s / 3600.0;
  m.validate();
  return m;
}

econ::TrainingStats training_stats_from_log(std::span<const EpisodeRecord> records) {
  EvaluationSummary s = aggregate(records);
  econ::TrainingStats t;
  t.episodes = s.n_episodes;
  t.collision_rate = s.collision_rate;
  t.mean_collision_impulse_ns = s.impulse_mean_ns;
  t.mean_episode_time_s = s.duration_mean_s;
  t.validate();
  return t;
}

}  // namespace navecon::logs
