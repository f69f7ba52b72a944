#include "navecon/sim/simulator.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "navecon/errors.hpp"

namespace navecon::sim {

namespace {

double clamp(double v, double lo, double hi) {
  return v < lo ? lo : (v > hi ? hi : v);
}

double dist(double ax, double ay, double bx, double by) {
  return std::hypot(ax - bx, ay - by);
}

}  // namespace

void ScenarioConfig::validate() const {
  auto fail = [](const std::string& what) { throw ValidationError("scenario: " + what); };
  if (!(arena.width_m > 0.0 && arena.length_m > 0.0)) fail("arena dimensions must be > 0");
  if (!(goal_distance_m > 0.0)) fail("goal_distance must be > 0");
  if (!(goal_distance_m < arena.length_m)) fail("goal_distance must be < arena length");
  if (!(goal_radius_m > 0.0)) fail("goal_radius must be > 0");
  if (!(timeout_s > 0.0)) fail("timeout must be > 0");
  if (level == Level::L1_Empty && n_pedestrians != 0) {
    fail("level 1 is empty; n_pedestrians must be 0");
  }
  if (n_pedestrians > 0) {
    if (!(pedestrian_speed_mps >= 0.0)) fail("pedestrian_speed must be >= 0");
    if (!(pedestrian_radius_m > 0.0)) fail("pedestrian_radius must be > 0");
  }
  if (n_episodes < 1) fail("n_episodes must be >= 1");
}

std::string ScenarioConfig::scenario_id() const {
  return level == Level::L1_Empty ? "l1-empty" : "l2-crowded";
}

ScenarioConfig ScenarioConfig::level_1() {
  ScenarioConfig c;
  c.level = Level::L1_Empty;
  c.n_pedestrians = 0;
  return c;
}

ScenarioConfig ScenarioConfig::level_2() {
  return ScenarioConfig{};
}

void RobotState::validate() const {
  auto fail = [](const std::string& what) { throw ValidationError("robot: " + what); };
  if (!(mass_kg > 0.0)) fail("mass must be > 0");
  if (!(radius_m > 0.0)) fail("radius must be > 0");
  if (!(v_max_mps > 0.0)) fail("v_max must be > 0");
  if (!(a_max_mps2 > 0.0)) fail("a_max must be > 0");
  if (!(speed_mps >= 0.0 && speed_mps <= v_max_mps)) fail("speed must be in [0, v_max]");
}

double PowerModel::power_w(double speed_mps, double accel_mps2, double mass_kg) const {
  double drive = k_drive * mass_kg * std::max(accel_mps2, 0.0) * speed_mps;
  return p_idle_w + drive + k_drag * speed_mps * speed_mps;
}

void PowerModel::validate() const {
  if (!(p_idle_w >= 0.0 && k_drive >= 0.0 && k_drag >= 0.0)) {
    throw ValidationError("power model coefficients must be >= 0");
  }
}

void PolicySpec::validate() const {
  auto fail = [](const std::string& what) { throw ValidationError("policy: " + what); };
  if (!(cruise_fraction >= 0.0 && cruise_fraction <= 1.0)) {
    fail("cruise_fraction must be in [0, 1]");
  }
  if (!(noise_std_rad >= 0.0)) fail("noise_std must be >= 0");
  if (!(noise_corr_time_s > 0.0)) fail("noise_corr_time must be > 0");
  if (!(repulse_gain >= 0.0)) fail("repulse_gain must be >= 0");
  if (!(influence_radius_m > 0.0)) fail("influence_radius must be > 0");
}

std::string PolicySpec::policy_id() const {
  switch (kind) {
    case PolicyKind::StraightLine: return "straight-line";
    case PolicyKind::PotentialField: return "potential-field";
    case PolicyKind::NoisyHeading: return "noisy-heading";
  }
  return "straight-line";
}

void reflect_into(double& x, double& y, double& vx, double& vy, const ArenaBounds& bounds) {
  for (int guard = 0; guard < 16; ++guard) {
    bool moved = false;
    if (x < 0.0) { x = -x; vx = -vx; moved = true; }
    if (x > bounds.length_m) { x = 2.0 * bounds.length_m - x; vx = -vx; moved = true; }
    if (y < 0.0) { y = -y; vy = -vy; moved = true; }
    if (y > bounds.width_m) { y = 2.0 * bounds.width_m - y; vy = -vy; moved = true; }
    if (!moved) return;
  }
  // pathological overshoot (way outside the arena): pin to the nearest wall
  x = clamp(x, 0.0, bounds.length_m);
  y = clamp(y, 0.0, bounds.width_m);
}

namespace {

constexpr double kTau = 6.283185307179586;

// uniform point in the patch disc, clamped into the arena
void pick_waypoint(PedestrianState& ped, const ArenaBounds& bounds) {
  double r = ped.patch_radius_m * std::sqrt(ped.rng.next_double());
  double theta = kTau * ped.rng.next_double();
  double margin = ped.radius_m;
  ped.waypoint_x_m = clamp(ped.anchor_x_m + r * std::cos(theta), margin,
                           bounds.length_m - margin);
  ped.waypoint_y_m = clamp(ped.anchor_y_m + r * std::sin(theta), margin,
                           bounds.width_m - margin);
}

}  // namespace

void pedestrian_step(PedestrianState& ped, const ArenaBounds& bounds, double dt_s) {
  if (ped.speed_mps <= 0.0) return;
  double dx = ped.waypoint_x_m - ped.x_m;
  double dy = ped.waypoint_y_m - ped.y_m;
  double d = std::hypot(dx, dy);
  double step = ped.speed_mps * dt_s;
  if (d <= step) {
    ped.x_m = ped.waypoint_x_m;
    ped.y_m = ped.waypoint_y_m;
    pick_waypoint(ped, bounds);
    return;
  }
  double vx = ped.speed_mps * dx / d;
  double vy = ped.speed_mps * dy / d;
  ped.x_m += vx * dt_s;
  ped.y_m += vy * dt_s;
  reflect_into(ped.x_m, ped.y_m, vx, vy, bounds);
}

CommandFn make_controller(const PolicySpec& policy) {
  PolicySpec p = policy;
  switch (p.kind) {
    case PolicyKind::StraightLine:
      return [p](const PolicyView& view, SplitMix64&) {
        Command cmd;
        cmd.heading_rad = std::atan2(view.goal_y_m - view.robot.y_m,
                                     view.goal_x_m - view.robot.x_m);
        cmd.speed_mps = p.cruise_fraction * view.robot.v_max_mps;
        return cmd;
      };
    case PolicyKind::NoisyHeading:
      return [p, bias = 0.0, started = false](const PolicyView& view,
                                              SplitMix64& rng) mutable {
        // Ornstein-Uhlenbeck heading bias around the goal direction
        double rho = std::exp(-kStepSeconds / std::max(p.noise_corr_time_s, 1e-3));
        if (!started) {
          bias = p.noise_std_rad * rng.next_gaussian();
          started = true;
        } else {
          bias = rho * bias +
                 p.noise_std_rad * std::sqrt(1.0 - rho * rho) * rng.next_gaussian();
        }
        Command cmd;
        double base = std::atan2(view.goal_y_m - view.robot.y_m,
                                 view.goal_x_m - view.robot.x_m);
        cmd.heading_rad = base + bias;
        cmd.speed_mps = p.cruise_fraction * view.robot.v_max_mps;
        return cmd;
      };
    case PolicyKind::PotentialField:
      return [p](const PolicyView& view, SplitMix64&) {
        double gx = view.goal_x_m - view.robot.x_m;
        double gy = view.goal_y_m - view.robot.y_m;
        double gd = std::hypot(gx, gy);
        double fx = gd > 1e-9 ? gx / gd : 0.0;
        double fy = gd > 1e-9 ? gy / gd : 0.0;
        for (const auto& ped : view.pedestrians) {
          double px = view.robot.x_m - ped.x_m;
          double py = view.robot.y_m - ped.y_m;
          double center_d = std::hypot(px, py);
          double surface_d = std::max(center_d - view.robot.radius_m - ped.radius_m, 0.05);
          if (surface_d >= p.influence_radius_m || center_d < 1e-9) continue;
          double mag = p.repulse_gain *
                       (1.0 / surface_d - 1.0 / p.influence_radius_m) /
                       (surface_d * surface_d);
          fx += mag * px / center_d;
          fy += mag * py / center_d;
        }
        Command cmd;
        double fmag = std::hypot(fx, fy);
        cmd.heading_rad = std::atan2(fy, fx);
        cmd.speed_mps =
            p.cruise_fraction * view.robot.v_max_mps * clamp(fmag, 0.0, 1.0);
        return cmd;
      };
  }
  throw ValidationError("unknown policy kind");
}

namespace {

std::vector<PedestrianState> spawn_pedestrians(const ScenarioConfig& scenario,
                                               double robot_x, double robot_y,
                                               SplitMix64& stream) {
  std::vector<PedestrianState> peds;
  peds.reserve(scenario.n_pedestrians);
  double margin = scenario.pedestrian_radius_m;
  for (std::uint32_t i = 0; i < scenario.n_pedestrians; ++i) {
    PedestrianState ped;
    ped.speed_mps = scenario.pedestrian_speed_mps;
    ped.radius_m = scenario.pedestrian_radius_m;
    ped.rng = SplitMix64(stream.next_u64());
    // keep spawn clear of the robot start so episodes never begin in contact
    for (int attempt = 0; attempt < 100; ++attempt) {
      ped.x_m = ped.rng.next_range(margin, scenario.arena.length_m - margin);
      ped.y_m = ped.rng.next_range(margin, scenario.arena.width_m - margin);
      if (dist(ped.x_m, ped.y_m, robot_x, robot_y) >= 2.5) break;
    }
    ped.anchor_x_m = ped.x_m;
    ped.anchor_y_m = ped.y_m;
    pick_waypoint(ped, scenario.arena);
    peds.push_back(ped);
  }
  return peds;
}

std::string episode_name(std::uint64_t index) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "ep-%06llu", static_cast<unsigned long long>(index));
  return buf;
}

}  // namespace

logs::EpisodeRecord run_episode(const ScenarioConfig& scenario, const PolicySpec& policy,
                                std::uint64_t episode_index) {
  return run_episode(scenario, policy, episode_index, EpisodeOverrides{});
}

logs::EpisodeRecord run_episode(const ScenarioConfig& scenario, const PolicySpec& policy,
                                std::uint64_t episode_index,
                                const EpisodeOverrides& overrides) {
  scenario.validate();
  policy.validate();

  const double dt = kStepSeconds;
  const std::uint64_t seed = episode_seed(scenario.master_seed, episode_index);
  SplitMix64 rng(seed);

  RobotState robot;
  if (overrides.robot.has_value()) {
    robot = *overrides.robot;
  } else {
    robot.x_m = (scenario.arena.length_m - scenario.goal_distance_m) / 2.0;
    robot.y_m = scenario.arena.width_m / 2.0;
    robot.heading_rad = 0.0;
    robot.speed_mps = 0.0;
  }
  robot.validate();

  PowerModel power = overrides.power.value_or(PowerModel{});
  power.validate();

  const double goal_x = robot.x_m + scenario.goal_distance_m;
  const double goal_y = robot.y_m;

  std::vector<PedestrianState> peds =
      overrides.pedestrians.has_value()
          ? *overrides.pedestrians
          : spawn_pedestrians(scenario, robot.x_m, robot.y_m, rng);

  CommandFn controller = overrides.command ? overrides.command : make_controller(policy);

  const double contact_r = robot.radius_m;
  double energy_j = 0.0;
  double distance = 0.0;
  double prev_power = power.power_w(robot.speed_mps, 0.0, robot.mass_kg);
  double max_power = prev_power;

  logs::EpisodeRecord record;
  record.episode_id = episode_name(episode_index);
  record.scenario_id = scenario.scenario_id();
  record.policy_id = policy.policy_id();
  record.seed = seed;

  std::optional<logs::Termination> outcome;
  double duration = 0.0;
  double impulse = 0.0;

  if (overrides.observe) {
    overrides.observe(StepSample{0.0, robot.speed_mps, 0.0, prev_power,
                                 robot.x_m, robot.y_m});
  }

  for (std::uint64_t step = 0;; ++step) {
    double t = static_cast<double>(step) * dt;
    if (t >= scenario.timeout_s) {
      outcome = logs::Termination::Timeout;
      duration = t;
      break;
    }

    Command cmd = controller(PolicyView{robot, goal_x, goal_y, peds}, rng);

    // kinematic clamps: commanded speed into [0, v_max], then the speed
    // change into +-a_max*dt
    double desired = clamp(cmd.speed_mps, 0.0, robot.v_max_mps);
    double dv = clamp(desired - robot.speed_mps, -robot.a_max_mps2 * dt,
                      robot.a_max_mps2 * dt);
    double accel = dv / dt;
    robot.speed_mps += dv;
    robot.heading_rad = cmd.heading_rad;

    double step_x = robot.speed_mps * dt * std::cos(robot.heading_rad);
    double step_y = robot.speed_mps * dt * std::sin(robot.heading_rad);
    double new_x = clamp(robot.x_m + step_x, robot.radius_m,
                         scenario.arena.length_m - robot.radius_m);
    double new_y = clamp(robot.y_m + step_y, robot.radius_m,
                         scenario.arena.width_m - robot.radius_m);
    distance += dist(new_x, new_y, robot.x_m, robot.y_m);
    robot.x_m = new_x;
    robot.y_m = new_y;

    for (auto& ped : peds) {
      pedestrian_step(ped, scenario.arena, dt);
    }

    if (!(std::isfinite(robot.x_m) && std::isfinite(robot.y_m) &&
          std::isfinite(robot.speed_mps))) {
      throw SimulationError("episode " + std::to_string(episode_index) + " (seed " +
                            std::to_string(seed) + "): non-finite state at t=" +
                            std::to_string(t));
    }

    double p = power.power_w(robot.speed_mps, accel, robot.mass_kg);
    energy_j += 0.5 * (prev_power + p) * dt;
    prev_power = p;
    max_power = std::max(max_power, p);
    duration = static_cast<double>(step + 1) * dt;

    if (overrides.observe) {
      overrides.observe(StepSample{duration, robot.speed_mps, accel, p,
                                   robot.x_m, robot.y_m});
    }

    bool collided = false;
    for (const auto& ped : peds) {
      if (dist(robot.x_m, robot.y_m, ped.x_m, ped.y_m) <= contact_r + ped.radius_m) {
        collided = true;
        break;
      }
    }
    if (collided) {
      // inelastic stop: the robot's momentum is absorbed at contact
      impulse = robot.mass_kg * robot.speed_mps;
      robot.speed_mps = 0.0;
      outcome = logs::Termination::Collision;
      break;
    }
    if (dist(robot.x_m, robot.y_m, goal_x, goal_y) <= scenario.goal_radius_m) {
      outcome = logs::Termination::Arrive;
      break;
    }
  }

  record.termination = *outcome;
  record.duration_s = duration;
  record.distance_m = distance;
  record.collision_impulse_ns = impulse;
  record.mean_power_w = duration > 0.0 ? energy_j / duration : 0.0;
  record.max_power_w = max_power;
  record.energy_wh = energy_j / 3600.0;
  record.validate(scenario.timeout_s);
  return record;
}

std::vector<logs::EpisodeRecord> run_batch(const ScenarioConfig& scenario,
                                           const PolicySpec& policy, unsigned workers) {
  scenario.validate();
  policy.validate();

  const std::uint64_t n = scenario.n_episodes;
  std::vector<logs::EpisodeRecord> records(n);

  if (workers == 0) {
    workers = std::max(1u, std::thread::hardware_concurrency());
  }
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, n));

  if (workers <= 1) {
    for (std::uint64_t i = 0; i < n; ++i) {
      records[i] = run_episode(scenario, policy, i);
    }
    return records;
  }

  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto work = [&]() {
    for (;;) {
      std::uint64_t i = next.fetch_add(1);
      if (i >= n || failed.load()) return;
      try {
        records[i] = run_episode(scenario, policy, i);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return records;
}

}  // namespace navecon::sim
