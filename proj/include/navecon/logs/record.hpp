#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace navecon::logs {

// Terminations are mutually exclusive and exhaustive: every episode ends in
// exactly one of these.
enum class Termination { Arrive, Collision, Timeout };

const char* to_string(Termination t);
std::optional<Termination> termination_from_string(std::string_view s);

// One navigation episode, as stored in the line-delimited log.
struct EpisodeRecord {
  std::string episode_id;
  std::string scenario_id;
  std::string policy_id;
  std::uint64_t seed = 0;
  Termination termination = Termination::Timeout;
  double duration_s = 0.0;
  double distance_m = 0.0;
  double collision_impulse_ns = 0.0;  // 0 unless termination == Collision
  double mean_power_w = 0.0;
  double max_power_w = 0.0;
  double energy_wh = 0.0;

  // Cross-field invariant checks; throws ValidationError naming episode_id.
  // The Timeout-duration check needs the scenario timeout and runs only when
  // one is supplied.
  void validate(std::optional<double> scenario_timeout_s = std::nullopt) const;
};

}  // namespace navecon::logs
