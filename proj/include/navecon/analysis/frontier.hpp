#pragma once

#include <optional>
#include <vector>

#include "navecon/analysis/sweep.hpp"

namespace navecon::analysis {

// Profit at a frontier root is within this band of zero.
inline constexpr double kFrontierProfitTolUsd = 1e-6;

// One zero-profit crossing. `fixed_coords` holds the values of the non-free
// axes (spec order, free axis excluded); `root` is empty when profit has the
// same sign across the whole bracket (NoRoot is a value, not an error).
struct FrontierPoint {
  std::vector<double> fixed_coords;
  std::optional<double> root;
  double profit_at_root = 0.0;
  std::optional<std::uint64_t> bep_runs;
};

// Viability frontier along `free_axis`: for every combination of the other
// axes, bisect profit over the free axis range. Profit is affine in every
// supported axis, so it is monotone on the bracket; the free axis must be
// one of spec.axes.
std::vector<FrontierPoint> frontier(const SweepSpec& spec, Axis free_axis);

}  // namespace navecon::analysis
