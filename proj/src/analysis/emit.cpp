#include "navecon/analysis/emit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "navecon/errors.hpp"
#include "navecon/money.hpp"

namespace navecon::analysis {

namespace {

std::string count_or_none(const std::optional<std::uint64_t>& n) {
  return n.has_value() ? std::to_string(*n) : std::string("None");
}

std::string pct(double fraction, int decimals) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, round_half_even(fraction * 100.0, decimals));
  return buf;
}

std::string tick_label(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void csv_schema(std::ostream& out, const char* artifact) {
  out << "# navecon-csv v1 " << artifact << "\n";
}

std::string csv_opt_u64(const std::optional<std::uint64_t>& n) {
  return n.has_value() ? std::to_string(*n) : std::string();
}

std::string csv_opt_double(const std::optional<double>& v) {
  return v.has_value() ? format_shortest(*v) : std::string();
}

}  // namespace

std::string report_table(const econ::EconReport& r,
                         std::optional<double> deliveries_per_day) {
  // Display values are rounded half-even; the profit line is the printed
  // revenue minus the printed run cost so the table stays self-consistent.
  double revenue_disp = round_half_even(r.revenue_usd, 3);
  double run_cost_disp = round_half_even(r.run_cost_total_usd, 2);
  double profit_disp = revenue_disp - run_cost_disp;

  std::ostringstream out;
  out << "Hardware ($) " << format_usd(r.hardware_cost_usd, 0) << "\n";
  out << "Data Collection ($) " << format_usd(r.training_cost_usd, 0) << "\n";
  out << "Pre-Run Total ($) " << format_usd(r.pre_run_total_usd, 0) << "\n";
  out << "Energy ($/run) " << format_usd(r.energy_cost_usd, 2) << "\n";
  out << "Maintenance ($/run) " << format_usd(r.maintenance_cost_usd, 2) << "\n";
  out << "Rescue ($/run) " << format_usd(r.rescue_cost_usd, 2) << "\n";
  out << "Run Cost Total ($/run) " << format_usd(r.run_cost_total_usd, 2) << "\n";
  out << "Energy Share (%) " << pct(r.cost_shares.energy, 2) << "\n";
  out << "Maintenance Share (%) " << pct(r.cost_shares.maintenance, 2) << "\n";
  out << "Rescue Share (%) " << pct(r.cost_shares.rescue, 2) << "\n";
  out << "SLA Compliance (%) " << pct(r.sla_compliance, 1) << "\n";
  out << "Revenue ($/run) " << format_usd(revenue_disp, 3) << "\n";
  out << "Profit ($/run) " << format_usd(profit_disp, 3) << "\n";
  out << "BEP (runs) " << count_or_none(r.bep_runs) << "\n";
  if (deliveries_per_day.has_value() && *deliveries_per_day > 0.0) {
    if (r.bep_runs.has_value()) {
      double days = static_cast<double>(*r.bep_runs) / *deliveries_per_day;
      out << "Time to Profitability (days) " << format_usd(days, 1) << "\n";
    } else {
      out << "Time to Profitability (days) None\n";
    }
  }
  return out.str();
}

std::string leaderboard_table(std::span<const LeaderboardRow> rows) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof(line), "%-4s %-24s %12s %12s %12s %10s %9s %11s %8s\n",
                "rank", "policy", "profit$/run", "revenue$/run", "cost$/run",
                "bep_runs", "success%", "collision%", "path_m");
  out << line;
  int rank = 1;
  for (const auto& row : rows) {
    std::snprintf(line, sizeof(line), "%-4d %-24s %12s %12s %12s %10s %9s %11s %8s\n",
                  rank++, row.policy_id.c_str(),
                  format_usd(row.profit_usd, 3).c_str(),
                  format_usd(row.revenue_usd, 3).c_str(),
                  format_usd(row.run_cost_usd, 2).c_str(),
                  count_or_none(row.bep_runs).c_str(),
                  pct(row.success_rate, 1).c_str(),
                  pct(row.collision_rate, 1).c_str(),
                  format_usd(row.path_length_m, 1).c_str());
    out << line;
  }
  return out.str();
}

std::string curve_table(const BepCurve& curve) {
  std::ostringstream out;
  out << "runs cumulative($)\n";
  for (const auto& p : curve.points) {
    out << p.runs << " " << format_usd_auto(p.cumulative_usd) << "\n";
  }
  out << "break-even " << count_or_none(curve.crossing) << "\n";
  return out.str();
}

std::string grid_table(const SweepGrid& grid) {
  std::ostringstream out;
  for (const auto& axis : grid.axes) out << axis_name(axis.axis) << " ";
  out << "profit($/run) revenue($/run) run_cost($/run) bep(runs)\n";
  for (const auto& cell : grid.cells) {
    for (double c : cell.coords) out << format_shortest(c) << " ";
    out << format_usd_auto(cell.report.profit_usd) << " "
        << format_usd_auto(cell.report.revenue_usd) << " "
        << format_usd_auto(cell.report.run_cost_total_usd) << " "
        << count_or_none(cell.report.bep_runs) << "\n";
  }
  return out.str();
}

std::string frontier_table(std::span<const FrontierPoint> points,
                           const SweepSpec& spec, Axis free_axis) {
  std::ostringstream out;
  for (const auto& axis : spec.axes) {
    if (axis.axis != free_axis) out << axis_name(axis.axis) << " ";
  }
  out << axis_name(free_axis) << "_root profit_at_root($) bep(runs)\n";
  for (const auto& p : points) {
    for (double c : p.fixed_coords) out << format_shortest(c) << " ";
    if (p.root.has_value()) {
      out << format_shortest(*p.root) << " " << format_usd_auto(p.profit_at_root)
          << " " << count_or_none(p.bep_runs) << "\n";
    } else {
      out << "NoRoot - -\n";
    }
  }
  return out.str();
}

void write_report_csv(std::ostream& out, const econ::EconReport& r) {
  csv_schema(out, "report");
  out << "hardware_cost_usd,training_cost_usd,pre_run_total_usd,energy_cost_usd,"
         "maintenance_cost_usd,rescue_cost_usd,run_cost_total_usd,revenue_usd,"
         "profit_usd,bep_runs,bep_ratio,sla_compliance\n";
  out << format_shortest(r.hardware_cost_usd) << ','
      << format_shortest(r.training_cost_usd) << ','
      << format_shortest(r.pre_run_total_usd) << ','
      << format_shortest(r.energy_cost_usd) << ','
      << format_shortest(r.maintenance_cost_usd) << ','
      << format_shortest(r.rescue_cost_usd) << ','
      << format_shortest(r.run_cost_total_usd) << ','
      << format_shortest(r.revenue_usd) << ','
      << format_shortest(r.profit_usd) << ','
      << csv_opt_u64(r.bep_runs) << ','
      << csv_opt_double(r.bep_ratio) << ','
      << format_shortest(r.sla_compliance) << "\n";
}

void write_curve_csv(std::ostream& out, const BepCurve& curve) {
  csv_schema(out, "bep_curve");
  out << "runs,cumulative_usd\n";
  for (const auto& p : curve.points) {
    out << p.runs << ',' << format_shortest(p.cumulative_usd) << "\n";
  }
}

void write_grid_csv(std::ostream& out, const SweepGrid& grid) {
  csv_schema(out, "sweep");
  for (const auto& axis : grid.axes) out << axis_name(axis.axis) << ',';
  out << "profit_usd,revenue_usd,run_cost_total_usd,maintenance_cost_usd,"
         "energy_cost_usd,bep_runs\n";
  for (const auto& cell : grid.cells) {
    for (double c : cell.coords) out << format_shortest(c) << ',';
    out << format_shortest(cell.report.profit_usd) << ','
        << format_shortest(cell.report.revenue_usd) << ','
        << format_shortest(cell.report.run_cost_total_usd) << ','
        << format_shortest(cell.report.maintenance_cost_usd) << ','
        << format_shortest(cell.report.energy_cost_usd) << ','
        << csv_opt_u64(cell.report.bep_runs) << "\n";
  }
}

void write_frontier_csv(std::ostream& out, std::span<const FrontierPoint> points,
                        const SweepSpec& spec, Axis free_axis) {
  csv_schema(out, "frontier");
  for (const auto& axis : spec.axes) {
    if (axis.axis != free_axis) out << axis_name(axis.axis) << ',';
  }
  out << axis_name(free_axis) << "_root,profit_at_root_usd,bep_runs\n";
  for (const auto& p : points) {
    for (double c : p.fixed_coords) out << format_shortest(c) << ',';
    out << csv_opt_double(p.root) << ','
        << (p.root.has_value() ? format_shortest(p.profit_at_root) : std::string())
        << ',' << csv_opt_u64(p.bep_runs) << "\n";
  }
}

void write_leaderboard_csv(std::ostream& out, std::span<const LeaderboardRow> rows) {
  csv_schema(out, "leaderboard");
  out << "policy_id,success_rate,collision_rate,path_length_m,run_cost_usd,"
         "revenue_usd,profit_usd,bep_runs\n";
  for (const auto& row : rows) {
    out << row.policy_id << ',' << format_shortest(row.success_rate) << ','
        << format_shortest(row.collision_rate) << ','
        << format_shortest(row.path_length_m) << ','
        << format_shortest(row.run_cost_usd) << ','
        << format_shortest(row.revenue_usd) << ','
        << format_shortest(row.profit_usd) << ',' << csv_opt_u64(row.bep_runs) << "\n";
  }
}

std::vector<CurvePoint> read_curve_csv(std::istream& in) {
  std::vector<CurvePoint> points;
  std::string line;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.starts_with('#')) continue;
    if (!header_seen) {
      if (line != "runs,cumulative_usd") {
        throw ValidationError("curve csv line " + std::to_string(line_no) +
                              ": unexpected header '" + line + "'");
      }
      header_seen = true;
      continue;
    }
    auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw ValidationError("curve csv line " + std::to_string(line_no) +
                            ": expected 'runs,cumulative_usd'");
    }
    CurvePoint p;
    std::string runs_text = line.substr(0, comma);
    auto [ptr, ec] =
        std::from_chars(runs_text.data(), runs_text.data() + runs_text.size(), p.runs);
    if (ec != std::errc() || ptr != runs_text.data() + runs_text.size()) {
      throw ValidationError("curve csv line " + std::to_string(line_no) +
                            ": bad run count '" + runs_text + "'");
    }
    p.cumulative_usd = parse_double_strict(line.substr(comma + 1));
    points.push_back(p);
  }
  if (!header_seen) throw ValidationError("curve csv: missing header row");
  return points;
}

std::vector<CurvePoint> read_curve_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open curve csv: " + path.string());
  return read_curve_csv(in);
}

namespace {

// Minimal static chart: axes, gridless tick marks, one polyline.
struct ChartFrame {
  double x0 = 80, y0 = 40, width = 740, height = 420;  // plot area
  double min_x = 0, max_x = 1, min_y = 0, max_y = 1;

  double map_x(double v) const {
    return x0 + (v - min_x) / (max_x - min_x) * width;
  }
  double map_y(double v) const {
    return y0 + height - (v - min_y) / (max_y - min_y) * height;
  }
};

void chart_begin(std::ostream& out, const std::string& title) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"860\" height=\"520\" "
         "viewBox=\"0 0 860 520\">\n"
      << "<rect width=\"860\" height=\"520\" fill=\"white\"/>\n"
      << "<text x=\"430\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">" << title << "</text>\n";
}

void chart_axes(std::ostream& out, const ChartFrame& f, const std::string& x_label,
                const std::string& y_label) {
  out << "<line x1=\"" << f.x0 << "\" y1=\"" << f.y0 + f.height << "\" x2=\""
      << f.x0 + f.width << "\" y2=\"" << f.y0 + f.height
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << f.x0 << "\" y1=\"" << f.y0 << "\" x2=\"" << f.x0
      << "\" y2=\"" << f.y0 + f.height << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    double tx = f.min_x + (f.max_x - f.min_x) * i / 4.0;
    double ty = f.min_y + (f.max_y - f.min_y) * i / 4.0;
    double px = f.map_x(tx);
    double py = f.map_y(ty);
    out << "<line x1=\"" << px << "\" y1=\"" << f.y0 + f.height << "\" x2=\"" << px
        << "\" y2=\"" << f.y0 + f.height + 5 << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << px << "\" y=\"" << f.y0 + f.height + 20
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << tick_label(tx) << "</text>\n";
    out << "<line x1=\"" << f.x0 - 5 << "\" y1=\"" << py << "\" x2=\"" << f.x0
        << "\" y2=\"" << py << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << f.x0 - 8 << "\" y=\"" << py + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << tick_label(ty) << "</text>\n";
  }
  out << "<text x=\"" << f.x0 + f.width / 2 << "\" y=\"510\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"13\">" << x_label << "</text>\n";
  out << "<text x=\"16\" y=\"" << f.y0 + f.height / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
         "transform=\"rotate(-90 16 " << f.y0 + f.height / 2 << ")\">" << y_label
      << "</text>\n";
}

void chart_zero_line(std::ostream& out, const ChartFrame& f) {
  if (f.min_y < 0.0 && f.max_y > 0.0) {
    double py = f.map_y(0.0);
    out << "<line x1=\"" << f.x0 << "\" y1=\"" << py << "\" x2=\"" << f.x0 + f.width
        << "\" y2=\"" << py << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
  }
}

}  // namespace

void write_curve_chart_svg(std::ostream& out, const BepCurve& curve,
                           const std::string& title) {
  if (curve.points.empty()) throw ValidationError("chart: empty curve");

  ChartFrame f;
  f.min_x = static_cast<double>(curve.points.front().runs);
  f.max_x = static_cast<double>(curve.points.back().runs);
  if (f.max_x == f.min_x) f.max_x = f.min_x + 1.0;
  f.min_y = f.max_y = curve.points.front().cumulative_usd;
  for (const auto& p : curve.points) {
    f.min_y = std::min(f.min_y, p.cumulative_usd);
    f.max_y = std::max(f.max_y, p.cumulative_usd);
  }
  f.min_y = std::min(f.min_y, 0.0);
  f.max_y = std::max(f.max_y, 0.0);
  if (f.max_y == f.min_y) f.max_y = f.min_y + 1.0;

  chart_begin(out, title);
  chart_axes(out, f, "runs", "cumulative position ($)");
  chart_zero_line(out, f);

  out << "<polyline fill=\"none\" stroke=\"#1f6feb\" stroke-width=\"1.5\" points=\"";
  for (const auto& p : curve.points) {
    out << f.map_x(static_cast<double>(p.runs)) << ',' << f.map_y(p.cumulative_usd) << ' ';
  }
  out << "\"/>\n";

  if (curve.crossing.has_value() &&
      static_cast<double>(*curve.crossing) <= f.max_x) {
    double px = f.map_x(static_cast<double>(*curve.crossing));
    out << "<line x1=\"" << px << "\" y1=\"" << f.y0 << "\" x2=\"" << px << "\" y2=\""
        << f.y0 + f.height << "\" stroke=\"#d29922\" stroke-dasharray=\"5 4\"/>\n";
    out << "<text x=\"" << px + 4 << "\" y=\"" << f.y0 + 14
        << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#d29922\">break-even "
        << *curve.crossing << "</text>\n";
  }
  out << "</svg>\n";
}

void write_profit_chart_svg(std::ostream& out, const SweepGrid& grid,
                            const std::string& title) {
  if (grid.axes.size() != 1) {
    throw ValidationError("profit chart needs a single-axis sweep");
  }
  if (grid.cells.empty()) throw ValidationError("chart: empty sweep grid");

  ChartFrame f;
  f.min_x = grid.cells.front().coords[0];
  f.max_x = grid.cells.back().coords[0];
  if (f.max_x == f.min_x) f.max_x = f.min_x + 1.0;
  f.min_y = f.max_y = grid.cells.front().report.profit_usd;
  for (const auto& cell : grid.cells) {
    f.min_y = std::min(f.min_y, cell.report.profit_usd);
    f.max_y = std::max(f.max_y, cell.report.profit_usd);
  }
  f.min_y = std::min(f.min_y, 0.0);
  f.max_y = std::max(f.max_y, 0.0);
  if (f.max_y == f.min_y) f.max_y = f.min_y + 1.0;

  chart_begin(out, title);
  chart_axes(out, f, axis_name(grid.axes[0].axis), "profit ($/run)");
  chart_zero_line(out, f);

  out << "<polyline fill=\"none\" stroke=\"#1f6feb\" stroke-width=\"1.5\" points=\"";
  for (const auto& cell : grid.cells) {
    out << f.map_x(cell.coords[0]) << ',' << f.map_y(cell.report.profit_usd) << ' ';
  }
  out << "\"/>\n</svg>\n";
}

void emit_to_file(const std::filesystem::path& path,
                  const std::function<void(std::ostream&)>& writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path.string());
  writer(out);
  out.flush();
  if (!out) throw IoError("failed writing output file: " + path.string());
}

}  // namespace navecon::analysis
