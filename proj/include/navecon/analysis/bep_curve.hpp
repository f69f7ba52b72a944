#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "navecon/econ/types.hpp"

namespace navecon::analysis {

struct CurvePoint {
  std::uint64_t runs = 0;
  double cumulative_usd = 0.0;
};

// Cumulative cash position over run count. The series is stride-decimated to
// at most ~10,000 points (endpoint always included); the crossing comes from
// break_even directly, never from the decimated series.
struct BepCurve {
  std::vector<CurvePoint> points;
  std::uint64_t stride = 1;
  std::optional<std::uint64_t> crossing;
};

BepCurve bep_curve(const econ::EconReport& report, std::uint64_t n_max);

}  // namespace navecon::analysis
