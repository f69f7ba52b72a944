#include "navecon/logs/record.hpp"

#include <cmath>

#include "navecon/errors.hpp"

namespace navecon::logs {

const char* to_string(Termination t) {
  switch (t) {
    case Termination::Arrive: return "Arrive";
    case Termination::Collision: return "Collision";
    case Termination::Timeout: return "Timeout";
  }
  return "Timeout";
}

std::optional<Termination> termination_from_string(std::string_view s) {
  if (s == "Arrive") return Termination::Arrive;
  if (s == "Collision") return Termination::Collision;
  if (s == "Timeout") return Termination::Timeout;
  return std::nullopt;
}

void EpisodeRecord::validate(std::optional<double> scenario_timeout_s) const {
  auto fail = [this](const std::string& what) {
    throw ValidationError("episode '" + episode_id + "': " + what);
  };

  for (double v : {duration_s, distance_m, collision_impulse_ns, mean_power_w,
                   max_power_w, energy_wh}) {
    if (!std::isfinite(v)) fail("non-finite numeric field");
  }
  if (duration_s < 0.0) fail("duration_s must be >= 0");
  if (distance_m < 0.0) fail("distance_m must be >= 0");
  if (collision_impulse_ns < 0.0) fail("collision_impulse_ns must be >= 0");
  if (collision_impulse_ns > 0.0 && termination != Termination::Collision) {
    fail("collision_impulse_ns > 0 requires termination = Collision");
  }
  if (mean_power_w < 0.0) fail("mean_power_w must be >= 0");
  if (max_power_w < mean_power_w) fail("max_power_w must be >= mean_power_w");

  // cross-field: energy must match mean power x duration within 1%
  double expected_wh = mean_power_w * duration_s / 3600.0;
  double scale = std::max(std::fabs(expected_wh), std::fabs(energy_wh));
  if (scale > 0.0 && std::fabs(energy_wh - expected_wh) > 0.01 * scale) {
    fail("energy_wh inconsistent with mean_power_w * duration_s");
  }

  if (scenario_timeout_s.has_value() && termination == Termination::Timeout &&
      duration_s < *scenario_timeout_s) {
    fail("Timeout termination requires duration_s >= scenario timeout");
  }
}

}  // namespace navecon::logs
