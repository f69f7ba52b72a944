#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "navecon/analysis/bep_curve.hpp"
#include "navecon/analysis/frontier.hpp"
#include "navecon/analysis/leaderboard.hpp"
#include "navecon/analysis/sweep.hpp"

// Report emission in three forms: plain-text tables for humans, CSV with a
// versioned schema comment for machines (full round-trip precision), and a
// self-contained SVG chart for curves.
//
// Table rounding is half-even and display-only. The statement table keeps
// the printed lines internally consistent: the profit line is the printed
// revenue minus the printed run cost, so the table adds up as shown. CSV
// always carries the unrounded values.

namespace navecon::analysis {

// --- human-readable tables -------------------------------------------------

std::string report_table(const econ::EconReport& report,
                         std::optional<double> deliveries_per_day = std::nullopt);
std::string leaderboard_table(std::span<const LeaderboardRow> rows);
std::string curve_table(const BepCurve& curve);
std::string grid_table(const SweepGrid& grid);
std::string frontier_table(std::span<const FrontierPoint> points,
                           const SweepSpec& spec, Axis free_axis);

// --- CSV (schema comment line, then a fixed header row) ---------------------

void write_report_csv(std::ostream& out, const econ::EconReport& report);
void write_curve_csv(std::ostream& out, const BepCurve& curve);
void write_grid_csv(std::ostream& out, const SweepGrid& grid);
void write_frontier_csv(std::ostream& out, std::span<const FrontierPoint> points,
                        const SweepSpec& spec, Axis free_axis);
void write_leaderboard_csv(std::ostream& out, std::span<const LeaderboardRow> rows);

// Re-parse an emitted curve CSV; the returned points equal the source series.
std::vector<CurvePoint> read_curve_csv(std::istream& in);
std::vector<CurvePoint> read_curve_csv(const std::filesystem::path& path);

// --- charts ------------------------------------------------------------------

// Cumulative position vs. runs, with the zero line and break-even marker.
void write_curve_chart_svg(std::ostream& out, const BepCurve& curve,
                           const std::string& title);

// Profit vs. a single swept axis, zero crossing marked.
void write_profit_chart_svg(std::ostream& out, const SweepGrid& grid,
                            const std::string& title);

// Open `path` for writing or throw IoError.
void emit_to_file(const std::filesystem::path& path,
                  const std::function<void(std::ostream&)>& writer);

}  // namespace navecon::analysis
