#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <optional>

#include "navecon/econ/model.hpp"
#include "navecon/errors.hpp"
#include "navecon/sim/rng.hpp"

using namespace navecon;
using namespace navecon::econ;

namespace {

HardwareBOM reference_bom() {
  return HardwareBOM{{{"chassis", 8600.0, 1}, {"compute", 2389.0, 1}, {"camera", 300.0, 2}}};
}

CostParams reference_params() {
  return CostParams{};  // defaults are the reference calibration
}

RunMetrics reference_metrics() {
  return RunMetrics{0.43, 0.54, 501.7, 551.7, 0.1};
}

TrainingStats reference_training() {
  return TrainingStats{534, 0.523, 501.7, 294.5};
}

// Independent scan oracle for break_even: the smallest n whose cumulative
// position is non-negative, found by walking up from zero.
std::optional<std::uint64_t> scan_break_even(double pre_run, double profit,
                                             std::uint64_t n_cap) {
  if (!(profit > kViabilityEpsUsd)) return std::nullopt;
  for (std::uint64_t n = 0; n <= n_cap; ++n) {
    if (cumulative_position(pre_run, profit, n) >= 0.0) return n;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("hardware cost sums the bill of materials exactly") {
  CHECK(hardware_cost(reference_bom()) == 11589.0);
  CHECK(hardware_cost(HardwareBOM{{{"a", 1.25, 2}, {"b", 0.50, 4}}}) == 4.50);

  CHECK_THROWS_AS(hardware_cost(HardwareBOM{}), ValidationError);
  CHECK_THROWS_AS(hardware_cost(HardwareBOM{{{"zeroed", 10.0, 0}}}), ValidationError);
  CHECK_THROWS_AS(hardware_cost(HardwareBOM{{{"negative", -1.0, 1}}}), ValidationError);
}

TEST_CASE("training cost follows the shock * impulse * rate * episodes * hardware product") {
  double hw = hardware_cost(reference_bom());
  double cost = training_cost(reference_training(), reference_params(), hw);
  CHECK(cost == doctest::Approx(16238.0).epsilon(0.0001));  // within +-1 of 16,238

  TrainingStats no_collisions = reference_training();
  no_collisions.collision_rate = 0.0;
  CHECK(training_cost(no_collisions, reference_params(), hw) == 0.0);

  // hand-multiplication oracle: 1e-5 * 100 * 0.5 * 10 * 10000
  double expected = 1e-5 * 100.0 * 0.5 * 10.0 * 10000.0;
  CHECK(expected == doctest::Approx(50.0));
  CHECK(training_cost(TrainingStats{10, 0.5, 100.0, 10.0}, reference_params(), 10000.0) ==
        doctest::Approx(expected));
}

TEST_CASE("energy cost is power times runtime times rate") {
  RunMetrics hour = reference_metrics();
  hour.runtime_hr = 1.0;
  CHECK(energy_cost(hour, reference_params()) ==
        doctest::Approx(0.11034).epsilon(1e-12));

  RunMetrics idle = reference_metrics();
  idle.mean_power_w = 0.0;
  CHECK(energy_cost(idle, reference_params()) == 0.0);

  RunMetrics heavy{1.0, 0.0, 0.0, 1000.0, 2.0};
  CostParams cheap;
  cheap.c_elec_usd_per_kwh = 0.15;
  CHECK(energy_cost(heavy, cheap) == doctest::Approx(0.30));
}

TEST_CASE("maintenance cost charges expected collision impulse against hardware") {
  double hw = 11589.0;
  CHECK(maintenance_cost(reference_metrics(), reference_params(), hw) ==
        doctest::Approx(31.40).epsilon(0.00032));  // within +-0.01

  RunMetrics clean = reference_metrics();
  clean.collision_rate = 0.0;
  CHECK(maintenance_cost(clean, reference_params(), hw) == 0.0);

  RunMetrics light{1.0, 0.05, 100.0, 100.0, 1.0};
  CHECK(maintenance_cost(light, reference_params(), 10000.0) == doctest::Approx(0.50));
}

TEST_CASE("rescue cost is failure probability times intervention cost") {
  CostParams p;
  p.p_failure = 0.0;
  p.c_human_op_usd = 50.0;
  CHECK(rescue_cost(p) == 0.0);
  p.p_failure = 1.0;
  CHECK(rescue_cost(p) == 50.0);
  p.p_failure = 0.02;
  p.c_human_op_usd = 75.0;
  CHECK(rescue_cost(p) == doctest::Approx(1.50));
}

TEST_CASE("revenue is the base fee gated by SLA compliance") {
  CHECK(revenue(reference_metrics(), reference_params()) ==
        doctest::Approx(1.501).epsilon(0.0007));

  RunMetrics perfect = reference_metrics();
  perfect.sla_compliance = 1.0;
  CHECK(revenue(perfect, reference_params()) == doctest::Approx(3.49));

  RunMetrics good = reference_metrics();
  good.sla_compliance = 0.90;
  CHECK(revenue(good, reference_params()) == doctest::Approx(3.141));
}

TEST_CASE("sla factor is a hard inclusive cutoff") {
  CostParams p = reference_params();
  CHECK(sla_factor(600.0, p) == 1);
  CHECK(sla_factor(601.0, p) == 0);
  CHECK(sla_factor(295.0, p) == 1);
  CHECK(sla_factor(0.0, p) == 1);
  CHECK_THROWS_AS(sla_factor(-1.0, p), ValidationError);
}

TEST_CASE("profit per run is revenue minus run cost") {
  CHECK(profit_per_run(1.501, 31.51) == doctest::Approx(-30.009));
  CHECK(profit_per_run(5.0, 5.0) == 0.0);
  CHECK(profit_per_run(3.141, 2.91 + 0.11) == doctest::Approx(0.121));
}

TEST_CASE("break even: count of runs to recover the pre-run investment") {
  CHECK(!break_even(27827.0, -30.009).has_value());
  CHECK(!break_even_ratio(27827.0, -30.009).has_value());

  auto viable = break_even(27827.0, 0.12);
  REQUIRE(viable.has_value());
  CHECK(*viable == 231892);
  CHECK(*viable >= 220000);
  CHECK(*viable <= 240000);

  CHECK(break_even(100.0, 10.0) == 10);
  CHECK(break_even(0.0, 1.0) == 0);

  // the viability threshold separates "about zero" from a real margin
  CHECK(!break_even(100.0, 0.0).has_value());
  CHECK(!break_even(100.0, kViabilityEpsUsd).has_value());
  CHECK(break_even(100.0, 1e-6).has_value());
}

TEST_CASE("cumulative position tracks losses and recovery") {
  CHECK(cumulative_position(27827.0, -30.009, 1000) ==
        doctest::Approx(-57836.0).epsilon(1e-9));
  CHECK(cumulative_position(500.0, -1.0, 0) == -500.0);
  CHECK(cumulative_position(100.0, 10.0, 10) == 0.0);
}

TEST_CASE("break even equals the scan oracle on randomized viable inputs") {
  sim::SplitMix64 rng(0xB0B5EEDull);
  for (int i = 0; i < 1000; ++i) {
    double pre_run = rng.next_range(0.0, 5000.0);
    double profit = rng.next_range(0.05, 40.0);
    auto fast = break_even(pre_run, profit);
    auto scanned = scan_break_even(pre_run, profit, 2'000'000);
    REQUIRE(fast.has_value());
    REQUIRE(scanned.has_value());
    CHECK(*fast == *scanned);
  }
  // a few large-ratio cases against the million-run scan
  for (int i = 0; i < 8; ++i) {
    double pre_run = rng.next_range(50'000.0, 90'000.0);
    double profit = rng.next_range(0.1, 0.5);
    auto fast = break_even(pre_run, profit);
    auto scanned = scan_break_even(pre_run, profit, 1'000'000);
    REQUIRE(fast.has_value());
    REQUIRE(scanned.has_value());
    CHECK(*fast == *scanned);
  }
}

TEST_CASE("break even is monotone in profit and pre-run cost") {
  sim::SplitMix64 rng(0xCAFEull);
  for (int i = 0; i < 300; ++i) {
    double pre_run = rng.next_range(10.0, 10000.0);
    double p1 = rng.next_range(0.01, 20.0);
    double p2 = p1 + rng.next_range(0.01, 20.0);
    CHECK(*break_even(pre_run, p2) <= *break_even(pre_run, p1));

    double extra = rng.next_range(0.0, 5000.0);
    CHECK(*break_even(pre_run + extra, p1) >= *break_even(pre_run, p1));
  }
}

TEST_CASE("energy and maintenance costs are linear in each factor") {
  sim::SplitMix64 rng(0x11E4ull);
  for (int i = 0; i < 200; ++i) {
    RunMetrics m{rng.next_double(), rng.next_double(), rng.next_range(0.0, 2000.0),
                 rng.next_range(0.0, 2000.0), rng.next_range(0.01, 4.0)};
    CostParams p;
    p.c_elec_usd_per_kwh = rng.next_range(0.01, 1.0);
    p.c_shock_per_ns = rng.next_range(1e-7, 1e-4);
    double hw = rng.next_range(100.0, 50000.0);
    double k = rng.next_range(0.1, 5.0);

    RunMetrics scaled = m;
    scaled.mean_power_w = k * m.mean_power_w;
    CHECK(energy_cost(scaled, p) ==
          doctest::Approx(k * energy_cost(m, p)).epsilon(1e-12));

    scaled = m;
    scaled.runtime_hr = k * m.runtime_hr;
    CHECK(energy_cost(scaled, p) ==
          doctest::Approx(k * energy_cost(m, p)).epsilon(1e-12));

    CostParams elec = p;
    elec.c_elec_usd_per_kwh = k * p.c_elec_usd_per_kwh;
    CHECK(energy_cost(m, elec) ==
          doctest::Approx(k * energy_cost(m, p)).epsilon(1e-12));

    scaled = m;
    scaled.mean_collision_impulse_ns = k * m.mean_collision_impulse_ns;
    CHECK(maintenance_cost(scaled, p, hw) ==
          doctest::Approx(k * maintenance_cost(m, p, hw)).epsilon(1e-12));

    double rate_k = std::min(k, 1.0 / std::max(m.collision_rate, 1e-9));
    scaled = m;
    scaled.collision_rate = rate_k * m.collision_rate;
    CHECK(maintenance_cost(scaled, p, hw) ==
          doctest::Approx(rate_k * maintenance_cost(m, p, hw)).epsilon(1e-12));

    CostParams shock = p;
    shock.c_shock_per_ns = k * p.c_shock_per_ns;
    CHECK(maintenance_cost(m, shock, hw) ==
          doctest::Approx(k * maintenance_cost(m, p, hw)).epsilon(1e-12));

    CHECK(maintenance_cost(m, p, k * hw) ==
          doctest::Approx(k * maintenance_cost(m, p, hw)).epsilon(1e-12));
  }
}

TEST_CASE("revenue stays within [0, r_base] and costs stay non-negative") {
  sim::SplitMix64 rng(0x4A4Eull);
  for (int i = 0; i < 500; ++i) {
    RunMetrics m{rng.next_double(), rng.next_double(), rng.next_range(0.0, 3000.0),
                 rng.next_range(0.0, 3000.0), rng.next_range(0.001, 5.0)};
    CostParams p;
    p.r_base_usd = rng.next_range(0.0, 20.0);
    p.p_failure = rng.next_double();
    p.c_human_op_usd = rng.next_range(0.0, 200.0);

    double r = revenue(m, p);
    CHECK(r >= 0.0);
    CHECK(r <= p.r_base_usd + 1e-12);
    CHECK(energy_cost(m, p) >= 0.0);
    CHECK(maintenance_cost(m, p, 11589.0) >= 0.0);
    CHECK(rescue_cost(p) >= 0.0);
    int gate = sla_factor(rng.next_range(0.0, 2000.0), p);
    CHECK((gate == 0 || gate == 1));
  }
}

TEST_CASE("projection replaces the runtime and nothing else") {
  RunMetrics m = reference_metrics();

  RunMetrics projected = project(m, ProjectionPolicy{});
  CHECK(projected.runtime_hr == 1.0);
  CHECK(projected.sla_compliance == m.sla_compliance);
  CHECK(projected.collision_rate == m.collision_rate);
  CHECK(projected.mean_collision_impulse_ns == m.mean_collision_impulse_ns);
  CHECK(projected.mean_power_w == m.mean_power_w);

  RunMetrics identity = project(m, ProjectionPolicy::identity());
  CHECK(identity.runtime_hr == m.runtime_hr);
  CHECK(identity.sla_compliance == m.sla_compliance);
  CHECK(identity.collision_rate == m.collision_rate);
  CHECK(identity.mean_collision_impulse_ns == m.mean_collision_impulse_ns);
  CHECK(identity.mean_power_w == m.mean_power_w);

  CHECK(energy_cost(projected, reference_params()) == doctest::Approx(0.11).epsilon(0.05));

  ProjectionPolicy bad;
  bad.target_runtime_hr = 0.0;
  CHECK_THROWS_AS(project(m, bad), ValidationError);
  bad.target_runtime_hr = -1.0;
  CHECK_THROWS_AS(project(m, bad), ValidationError);
}

TEST_CASE("distance scaling multiplies the expected impulse per run") {
  RunMetrics m = reference_metrics();
  ProjectionPolicy policy;
  policy.distance_scale_maintenance = true;
  policy.source_distance_m = 20.0;
  policy.target_distance_m = 6000.0;
  RunMetrics scaled = project(m, policy);
  CHECK(scaled.mean_collision_impulse_ns ==
        doctest::Approx(m.mean_collision_impulse_ns * 300.0));
  CHECK(scaled.collision_rate == m.collision_rate);
}

TEST_CASE("build_report satisfies the statement identities") {
  EconReport r = build_report(reference_bom(), reference_training(),
                              reference_metrics(), reference_params(),
                              ProjectionPolicy{});

  // defining sums hold exactly, not just approximately
  CHECK(r.pre_run_total_usd == r.hardware_cost_usd + r.training_cost_usd);
  CHECK(r.run_cost_total_usd ==
        r.energy_cost_usd + r.maintenance_cost_usd + r.rescue_cost_usd);
  CHECK(r.profit_usd == r.revenue_usd - r.run_cost_total_usd);

  CHECK(r.cost_shares.energy + r.cost_shares.maintenance + r.cost_shares.rescue ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(!r.bep_runs.has_value());  // the baseline loses money per run
  CHECK(r.profit_usd < 0.0);

  // maintenance dominates the run cost
  CHECK(r.cost_shares.maintenance == doctest::Approx(0.9965).epsilon(0.001));
}

TEST_CASE("build_report golden values for the reference calibration") {
  EconReport r = build_report(reference_bom(), reference_training(),
                              reference_metrics(), reference_params(),
                              ProjectionPolicy{});
  CHECK(r.hardware_cost_usd == 11589.0);
  CHECK(r.training_cost_usd == doctest::Approx(16238.0).epsilon(0.0001));
  CHECK(r.pre_run_total_usd == doctest::Approx(27827.0).epsilon(0.0001));
  CHECK(r.energy_cost_usd == doctest::Approx(0.11).epsilon(0.05));
  CHECK(r.maintenance_cost_usd == doctest::Approx(31.40).epsilon(0.00032));
  CHECK(r.run_cost_total_usd == doctest::Approx(31.51).epsilon(0.00032));
  CHECK(r.revenue_usd == doctest::Approx(1.501).epsilon(0.0007));
  CHECK(r.profit_usd == doctest::Approx(-30.009).epsilon(0.00034));
  CHECK(!r.bep_runs.has_value());
}

TEST_CASE("zero-collision full-SLA inputs earn the whole base fee") {
  RunMetrics clean{1.0, 0.0, 0.0, 551.7, 0.1};
  EconReport r = build_report(reference_bom(), reference_training(), clean,
                              reference_params(), ProjectionPolicy{});
  CHECK(r.maintenance_cost_usd == 0.0);
  CHECK(r.revenue_usd == doctest::Approx(3.49));
  CHECK(r.bep_runs.has_value());
}

TEST_CASE("report viability flag matches the profit sign") {
  sim::SplitMix64 rng(0xFEEDull);
  for (int i = 0; i < 300; ++i) {
    RunMetrics m{rng.next_double(), rng.next_double(), rng.next_range(0.0, 800.0),
                 rng.next_range(0.0, 1500.0), 1.0};
    EconReport r = build_report(reference_bom(), reference_training(), m,
                                reference_params(), ProjectionPolicy{});
    CHECK(r.bep_runs.has_value() == (r.profit_usd > kViabilityEpsUsd));
    if (r.run_cost_total_usd > 0.0) {
      CHECK(r.cost_shares.energy + r.cost_shares.maintenance + r.cost_shares.rescue ==
            doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("invalid domain values are rejected") {
  RunMetrics m = reference_metrics();
  m.collision_rate = 1.5;
  CHECK_THROWS_AS(m.validate(), ValidationError);

  m = reference_metrics();
  m.runtime_hr = 0.0;
  CHECK_THROWS_AS(m.validate(), ValidationError);

  CostParams p;
  p.p_failure = -0.1;
  CHECK_THROWS_AS(p.validate(), ValidationError);

  TrainingStats t = reference_training();
  t.mean_collision_impulse_ns = -1.0;
  CHECK_THROWS_AS(t.validate(), ValidationError);
}
