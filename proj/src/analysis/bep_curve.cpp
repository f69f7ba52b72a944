#include "navecon/analysis/bep_curve.hpp"

#include "navecon/econ/model.hpp"
#include "navecon/errors.hpp"

namespace navecon::analysis {

BepCurve bep_curve(const econ::EconReport& report, std::uint64_t n_max) {
  if (n_max < 1) throw ValidationError("bep_curve: n_max must be >= 1");

  constexpr std::uint64_t kMaxPoints = 10000;
  BepCurve curve;
  curve.stride = (n_max + 1 + kMaxPoints - 1) / kMaxPoints;
  if (curve.stride < 1) curve.stride = 1;

  for (std::uint64_t n = 0; n <= n_max; n += curve.stride) {
    curve.points.push_back(
        {n, econ::cumulative_position(report.pre_run_total_usd, report.profit_usd, n)});
  }
  if (curve.points.back().runs != n_max) {
    curve.points.push_back(
        {n_max,
         econ::cumulative_position(report.pre_run_total_usd, report.profit_usd, n_max)});
  }
  curve.crossing = econ::break_even(report.pre_run_total_usd, report.profit_usd);
  return curve;
}

}  // namespace navecon::analysis
