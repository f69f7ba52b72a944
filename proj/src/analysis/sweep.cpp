#include "navecon/analysis/sweep.hpp"

#include <cmath>
#include <string>

#include "navecon/errors.hpp"

namespace navecon::analysis {

const char* axis_name(Axis axis) {
  switch (axis) {
    case Axis::CollisionRate: return "collision_rate";
    case Axis::SlaCompliance: return "sla_compliance";
    case Axis::MeanPower: return "mean_power";
    case Axis::CShock: return "c_shock";
    case Axis::RBase: return "r_base";
  }
  return "collision_rate";
}

std::optional<Axis> axis_from_name(std::string_view name) {
  for (Axis axis : kAllAxes) {
    if (name == axis_name(axis)) return axis;
  }
  return std::nullopt;
}

namespace {

// valid domain per axis: rates live in [0, 1], the rest are non-negative
void check_axis_domain(const AxisRange& r) {
  auto fail = [&](const std::string& what) {
    throw ValidationError(std::string("sweep axis ") + axis_name(r.axis) + ": " + what);
  };
  if (!(std::isfinite(r.lo) && std::isfinite(r.hi))) fail("range must be finite");
  if (!(r.lo <= r.hi)) fail("lo must be <= hi");
  if (r.steps < 1) fail("steps must be >= 1");
  if (r.steps == 1 && r.lo != r.hi) fail("a single-step axis must have lo == hi");
  if (r.lo < 0.0) fail("range must be >= 0");
  if ((r.axis == Axis::CollisionRate || r.axis == Axis::SlaCompliance) && r.hi > 1.0) {
    fail("rate range must stay within [0, 1]");
  }
}

}  // namespace

void SweepSpec::validate() const {
  for (const auto& r : axes) check_axis_domain(r);
  baseline.bom.validate();
  baseline.training.validate();
  baseline.metrics.validate();
  baseline.params.validate();
  baseline.projection.validate();
}

double axis_value(const AxisRange& range, std::uint32_t i) {
  if (range.steps <= 1) return range.lo;
  if (i == 0) return range.lo;
  if (i == range.steps - 1) return range.hi;
  double t = static_cast<double>(i) / static_cast<double>(range.steps - 1);
  return range.lo + (range.hi - range.lo) * t;
}

EconBaseline with_axis_value(EconBaseline baseline, Axis axis, double value) {
  switch (axis) {
    case Axis::CollisionRate: baseline.metrics.collision_rate = value; break;
    case Axis::SlaCompliance: baseline.metrics.sla_compliance = value; break;
    case Axis::MeanPower: baseline.metrics.mean_power_w = value; break;
    case Axis::CShock: baseline.params.c_shock_per_ns = value; break;
    case Axis::RBase: baseline.params.r_base_usd = value; break;
  }
  return baseline;
}

SweepGrid sweep(const SweepSpec& spec) {
  spec.validate();

  SweepGrid grid;
  grid.axes = spec.axes;

  std::size_t total = 1;
  for (const auto& r : spec.axes) total *= r.steps;
  grid.cells.reserve(total);

  std::vector<std::uint32_t> index(spec.axes.size(), 0);
  for (std::size_t cell = 0; cell < total; ++cell) {
    EconBaseline b = spec.baseline;
    GridCell out;
    out.coords.reserve(spec.axes.size());
    for (std::size_t a = 0; a < spec.axes.size(); ++a) {
      double v = axis_value(spec.axes[a], index[a]);
      out.coords.push_back(v);
      b = with_axis_value(std::move(b), spec.axes[a].axis, v);
    }
    out.report = econ::build_report(b.bom, b.training, b.metrics, b.params, b.projection);
    grid.cells.push_back(std::move(out));

    // row-major increment, last axis fastest
    for (std::size_t a = spec.axes.size(); a-- > 0;) {
      if (++index[a] < spec.axes[a].steps) break;
      index[a] = 0;
    }
  }
  return grid;
}

}  // namespace navecon::analysis
