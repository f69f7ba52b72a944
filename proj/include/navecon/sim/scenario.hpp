#pragma once

#include <cstdint>
#include <string>

namespace navecon::sim {

// Difficulty presets: an empty sidewalk and a pedestrian-crowded one.
enum class Level { L1_Empty, L2_Crowded };

// Axis-aligned sidewalk strip; x runs along the length, y across the width.
struct ArenaBounds {
  double width_m = 6.0;
  double length_m = 30.0;
};

// One evaluation scenario. Defaults describe the Level 2 crowded strip;
// level_1() / level_2() build the named presets.
struct ScenarioConfig {
  Level level = Level::L2_Crowded;
  ArenaBounds arena;
  double goal_distance_m = 20.0;
  double goal_radius_m = 0.5;
  double timeout_s = 600.0;
  std::uint32_t n_pedestrians = 6;
  double pedestrian_speed_mps = 1.2;
  double pedestrian_radius_m = 0.3;
  std::uint64_t master_seed = 1;
  std::uint64_t n_episodes = 100;

  void validate() const;
  std::string scenario_id() const;  // "l1-empty" | "l2-crowded"

  static ScenarioConfig level_1();
  static ScenarioConfig level_2();
};

// Robot geometry, kinematic limits, and pose. The pose fields (x, y,
// heading, speed) evolve during an episode; the rest are parameters.
struct RobotState {
  double x_m = 0.0;
  double y_m = 0.0;
  double heading_rad = 0.0;
  double speed_mps = 0.0;  // held within [0, v_max]; changes by <= a_max*dt per step

  double mass_kg = 25.0;
  double radius_m = 0.4;  // bounding disc over the 60x50 cm footprint
  double v_max_mps = 2.0;
  double a_max_mps2 = 1.0;

  void validate() const;
};

// Instantaneous electrical draw as a function of commanded motion:
//   P(v, a) = p_idle + k_drive * m * max(a, 0) * v + k_drag * v^2
// The floor covers sensing and compute; the drive term charges positive
// acceleration work; the quadratic term stands in for drivetrain losses.
struct PowerModel {
  double p_idle_w = 80.0;
  double k_drive = 6.0;  // W per (kg * m^2/s^3)
  double k_drag = 55.0;  // W per (m/s)^2

  double power_w(double speed_mps, double accel_mps2, double mass_kg) const;
  void validate() const;
};

enum class PolicyKind { StraightLine, PotentialField, NoisyHeading };

// Scripted controllers standing in for learned navigation policies.
// Commands are clamped by the integrator, so no parameter choice can violate
// the robot's kinematic limits.
struct PolicySpec {
  PolicyKind kind = PolicyKind::NoisyHeading;
  // commanded speed as a fraction of v_max (all policies)
  double cruise_fraction = 1.0;
  // NoisyHeading: stationary std-dev and correlation time of the heading
  // bias. The bias is an Ornstein-Uhlenbeck walk, so bad headings persist
  // for stretches of ~noise_corr_time_s instead of averaging out per step.
  double noise_std_rad = 1.5;
  double noise_corr_time_s = 600.0;
  // PotentialField: repulsion gain and influence radius around pedestrians
  double repulse_gain = 3.0;
  double influence_radius_m = 2.5;

  void validate() const;
  std::string policy_id() const;
};

}  // namespace navecon::sim
