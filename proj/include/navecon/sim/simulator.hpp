#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "navecon/logs/record.hpp"
#include "navecon/sim/rng.hpp"
#include "navecon/sim/scenario.hpp"

// Deterministic 2D kinematic navigation simulator. Fixed-step integration at
// dt = 0.1 s; an episode ends at the first of goal arrival, collision, or
// timeout. The collision model is an inelastic stop: the recorded impulse is
// robot mass times speed at contact.

namespace navecon::sim {

inline constexpr double kStepSeconds = 0.1;  // 2 m/s * 0.1 s = 0.2 m < robot radius, so
                                             // a legal step cannot tunnel through a pedestrian

// A pedestrian mills around its spawn anchor: waypoints are drawn from a
// patch disc centered there, so crowds form local clusters instead of
// sweeping the whole strip.
struct PedestrianState {
  double x_m = 0.0;
  double y_m = 0.0;
  double speed_mps = 0.0;
  double radius_m = 0.3;
  double anchor_x_m = 0.0;
  double anchor_y_m = 0.0;
  double patch_radius_m = 2.0;
  double waypoint_x_m = 0.0;
  double waypoint_y_m = 0.0;
  SplitMix64 rng{0};
};

// Constant-speed walk toward the current waypoint; picks a fresh waypoint on
// arrival and reflects back inside if a step would leave the arena.
void pedestrian_step(PedestrianState& ped, const ArenaBounds& bounds, double dt_s);

// Mirror a point across the violated wall(s) and flip the matching velocity
// components; speed magnitude is preserved.
void reflect_into(double& x, double& y, double& vx, double& vy, const ArenaBounds& bounds);

// Desired motion for the next step, before kinematic clamping.
struct Command {
  double heading_rad = 0.0;
  double speed_mps = 0.0;
};

// Observation handed to a controller each step.
struct PolicyView {
  const RobotState& robot;
  double goal_x_m;
  double goal_y_m;
  const std::vector<PedestrianState>& pedestrians;
};

using CommandFn = std::function<Command(const PolicyView&, SplitMix64& rng)>;

// Per-step sample for observers (power traces, limit checks in tests).
struct StepSample {
  double t_s = 0.0;       // time at the end of the step
  double speed_mps = 0.0;
  double accel_mps2 = 0.0;
  double power_w = 0.0;
  double x_m = 0.0;
  double y_m = 0.0;
};
using StepObserver = std::function<void(const StepSample&)>;

// Test and tooling hooks; every field is optional and defaults to the
// scenario-seeded behavior.
struct EpisodeOverrides {
  std::optional<RobotState> robot;
  std::optional<PowerModel> power;
  std::optional<std::vector<PedestrianState>> pedestrians;  // skips seeded spawn
  CommandFn command;  // replaces the PolicySpec controller
  StepObserver observe;
};

// Build the controller for a policy spec (exposed for tests).
CommandFn make_controller(const PolicySpec& policy);

// Run one episode. The episode seed derives from (master_seed,
// episode_index) only. Throws ValidationError on invalid configuration and
// reports the episode seed if the state ever turns non-finite.
logs::EpisodeRecord run_episode(const ScenarioConfig& scenario, const PolicySpec& policy,
                                std::uint64_t episode_index);
logs::EpisodeRecord run_episode(const ScenarioConfig& scenario, const PolicySpec& policy,
                                std::uint64_t episode_index, const EpisodeOverrides& overrides);

// Run every episode of the scenario. Output is ordered by episode index
// regardless of worker count; workers == 0 picks the hardware concurrency.
std::vector<logs::EpisodeRecord> run_batch(const ScenarioConfig& scenario,
                                           const PolicySpec& policy, unsigned workers = 0);

}  // namespace navecon::sim
