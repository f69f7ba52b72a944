#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "navecon/econ/model.hpp"

namespace navecon::analysis {

// Variables a sensitivity sweep may move. Profit is affine in each one, a
// property the frontier solver relies on.
enum class Axis { CollisionRate, SlaCompliance, MeanPower, CShock, RBase };

inline constexpr Axis kAllAxes[] = {Axis::CollisionRate, Axis::SlaCompliance,
                                    Axis::MeanPower, Axis::CShock, Axis::RBase};

const char* axis_name(Axis axis);  // "collision_rate", "sla_compliance", ...
std::optional<Axis> axis_from_name(std::string_view name);

// Inclusive [lo, hi] range sampled at `steps` evenly spaced values. A single
// step is the degenerate pinned axis and requires lo == hi.
struct AxisRange {
  Axis axis = Axis::CollisionRate;
  double lo = 0.0;
  double hi = 0.0;
  std::uint32_t steps = 2;
};

// Shared economic baseline every sweep cell starts from.
struct EconBaseline {
  econ::HardwareBOM bom;
  econ::TrainingStats training;
  econ::RunMetrics metrics;
  econ::CostParams params;
  econ::ProjectionPolicy projection;
};

// A sweep over the Cartesian product of its axis grids. No axes means a
// single cell: the untouched baseline.
struct SweepSpec {
  std::vector<AxisRange> axes;
  EconBaseline baseline;

  void validate() const;
};

struct GridCell {
  std::vector<double> coords;  // one value per axis, in spec.axes order
  econ::EconReport report;
};

struct SweepGrid {
  std::vector<AxisRange> axes;
  std::vector<GridCell> cells;  // row-major: last axis varies fastest
};

// i-th sample of a range; both endpoints are exact.
double axis_value(const AxisRange& range, std::uint32_t i);

// Copy of the baseline with one variable overridden.
EconBaseline with_axis_value(EconBaseline baseline, Axis axis, double value);

SweepGrid sweep(const SweepSpec& spec);

}  // namespace navecon::analysis
