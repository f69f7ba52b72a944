#include "navecon/analysis/frontier.hpp"

#include <cmath>
#include <string>

#include "navecon/errors.hpp"

namespace navecon::analysis {

namespace {

double profit_at(const EconBaseline& baseline, Axis axis, double value) {
  EconBaseline b = with_axis_value(baseline, axis, value);
  return econ::build_report(b.bom, b.training, b.metrics, b.params, b.projection)
      .profit_usd;
}

// Bisection on an affine profit function. Runs until the bracket collapses
// to adjacent doubles, so the root matches the closed-form solution to
// machine precision.
std::optional<double> bisect_root(const EconBaseline& baseline, Axis axis,
                                  double lo, double hi) {
  double f_lo = profit_at(baseline, axis, lo);
  double f_hi = profit_at(baseline, axis, hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo < 0.0) == (f_hi < 0.0)) return std::nullopt;

  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket exhausted
    double f_mid = profit_at(baseline, axis, mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  // of the two bracket ends, keep the one closer to zero profit
  double f_lo2 = profit_at(baseline, axis, lo);
  double f_hi2 = profit_at(baseline, axis, hi);
  return std::fabs(f_lo2) <= std::fabs(f_hi2) ? lo : hi;
}

}  // namespace

std::vector<FrontierPoint> frontier(const SweepSpec& spec, Axis free_axis) {
  spec.validate();

  const AxisRange* free_range = nullptr;
  std::vector<AxisRange> fixed_axes;
  for (const auto& r : spec.axes) {
    if (r.axis == free_axis) {
      if (free_range != nullptr) {
        throw ValidationError(std::string("frontier: axis ") + axis_name(free_axis) +
                              " appears more than once");
      }
      free_range = &r;
    } else {
      fixed_axes.push_back(r);
    }
  }
  if (free_range == nullptr) {
    throw ValidationError(std::string("frontier: free axis ") + axis_name(free_axis) +
                          " is not part of the sweep");
  }
  if (!(free_range->lo < free_range->hi)) {
    throw ValidationError(std::string("frontier: free axis ") + axis_name(free_axis) +
                          " needs a non-degenerate range");
  }

  std::size_t combos = 1;
  for (const auto& r : fixed_axes) combos *= r.steps;

  std::vector<FrontierPoint> points;
  points.reserve(combos);

  std::vector<std::uint32_t> index(fixed_axes.size(), 0);
  for (std::size_t c = 0; c < combos; ++c) {
    EconBaseline b = spec.baseline;
    FrontierPoint point;
    point.fixed_coords.reserve(fixed_axes.size());
    for (std::size_t a = 0; a < fixed_axes.size(); ++a) {
      double v = axis_value(fixed_axes[a], index[a]);
      point.fixed_coords.push_back(v);
      b = with_axis_value(std::move(b), fixed_axes[a].axis, v);
    }

    point.root = bisect_root(b, free_axis, free_range->lo, free_range->hi);
    if (point.root.has_value()) {
      EconBaseline at_root = with_axis_value(b, free_axis, *point.root);
      econ::EconReport report = econ::build_report(
          at_root.bom, at_root.training, at_root.metrics, at_root.params,
          at_root.projection);
      point.profit_at_root = report.profit_usd;
      point.bep_runs = report.bep_runs;
    }
    points.push_back(std::move(point));

    for (std::size_t a = fixed_axes.size(); a-- > 0;) {
      if (++index[a] < fixed_axes[a].steps) break;
      index[a] = 0;
    }
  }
  return points;
}

}  // namespace navecon::analysis
