#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cli/app.hpp"
#include "navecon/analysis/emit.hpp"
#include "navecon/logs/io.hpp"

using namespace navecon;

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  fs::path out = fs::temp_directory_path() / ("navecon_out_" + std::to_string(counter));
  fs::path err = fs::temp_directory_path() / ("navecon_err_" + std::to_string(counter));
  ++counter;
  std::string command = std::string(NAVECON_CLI_BIN) + " " + args + " > " +
                        out.string() + " 2> " + err.string();
  int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(status);
  result.out = slurp(out);
  result.err = slurp(err);
  fs::remove(out);
  fs::remove(err);
  return result;
}

fs::path temp_path(const std::string& name) {
  return fs::temp_directory_path() / name;
}

std::set<std::string> registry_flags(const std::string& subcommand) {
  CLI::App app{"probe"};
  cli::Options options;
  cli::build_app(app, options);
  const CLI::App* scope = subcommand.empty() ? &app : app.get_subcommand(subcommand);
  std::set<std::string> flags;
  for (const CLI::Option* option : scope->get_options()) {
    for (const std::string& lname : option->get_lnames()) {
      if (lname != "help") flags.insert("--" + lname);
    }
  }
  return flags;
}

// flags documented in the README section for one subcommand
std::set<std::string> readme_flags(const std::string& section) {
  std::ifstream in(fs::path(NAVECON_SOURCE_DIR) / "README.md");
  REQUIRE(in.good());
  std::string line;
  std::set<std::string> flags;
  bool inside = false;
  std::regex flag_pattern("`(--[a-z][a-z0-9-]*)");
  while (std::getline(in, line)) {
    if (line.starts_with("### ")) {
      inside = line.find(section) != std::string::npos;
      continue;
    }
    if (!inside) continue;
    for (std::sregex_iterator it(line.begin(), line.end(), flag_pattern), end;
         it != end; ++it) {
      std::string flag = (*it)[1];
      if (flag != "--help") flags.insert(flag);
    }
  }
  return flags;
}

}  // namespace

TEST_CASE("simulate writes the requested number of records deterministically") {
  fs::path log_a = temp_path("navecon_cli_a.jsonl");
  fs::path log_b = temp_path("navecon_cli_b.jsonl");
  std::string flags = "simulate --level l2 --policy potential-field --episodes 20 "
                      "--seed 7 --out ";
  auto first = run_cli(flags + log_a.string());
  CHECK(first.exit_code == 0);
  CHECK(first.out.find("episodes=20") != std::string::npos);

  auto second = run_cli(flags + log_b.string());
  CHECK(second.exit_code == 0);
  CHECK(slurp(log_a) == slurp(log_b));  // repeat runs are byte-identical

  auto records = logs::read_log(log_a);
  CHECK(records.size() == 20);
  for (const auto& r : records) {
    CHECK(r.policy_id == "potential-field");
    CHECK(r.scenario_id == "l2-crowded");
  }
}

TEST_CASE("simulate rejects zero episodes with exit code 1") {
  auto result = run_cli("simulate --episodes 0 --out " +
                        temp_path("navecon_none.jsonl").string());
  CHECK(result.exit_code == 1);
  CHECK(result.err.find("n_episodes") != std::string::npos);
}

TEST_CASE("evaluate --paper-baseline reproduces the reference statement") {
  auto result = run_cli("evaluate --paper-baseline");
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("Hardware ($) 11,589") != std::string::npos);
  CHECK(result.out.find("Profit ($/run) -30.009") != std::string::npos);
  CHECK(result.out.find("BEP (runs) None") != std::string::npos);

  // byte-identical on repeat
  auto again = run_cli("evaluate --paper-baseline");
  CHECK(result.out == again.out);
}

TEST_CASE("evaluate maps input problems onto exit codes") {
  CHECK(run_cli("evaluate").exit_code == 1);  // no metrics source
  CHECK(run_cli("evaluate --log /nonexistent/missing.jsonl").exit_code == 2);
  CHECK(run_cli("evaluate --paper-baseline --collision 2.0").exit_code == 1);
  CHECK(run_cli("evaluate --paper-baseline --no-such-flag").exit_code == 1);
}

TEST_CASE("evaluate emits a csv artifact that reparses to the same report") {
  fs::path csv = temp_path("navecon_report.csv");
  auto result =
      run_cli("evaluate --paper-baseline --csv " + csv.string());
  CHECK(result.exit_code == 0);
  std::string text = slurp(csv);
  CHECK(text.starts_with("# navecon-csv v1 report"));
  CHECK(text.find("profit_usd") != std::string::npos);
}

TEST_CASE("evaluate works end to end on a simulated log") {
  fs::path log = temp_path("navecon_cli_eval.jsonl");
  CHECK(run_cli("simulate --level l2 --episodes 50 --seed 3 --out " + log.string())
            .exit_code == 0);
  auto result = run_cli("evaluate --log " + log.string());
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("Profit ($/run)") != std::string::npos);
}

TEST_CASE("breakeven prints None for the baseline and a count when viable") {
  auto baseline = run_cli("breakeven --paper-baseline");
  CHECK(baseline.exit_code == 0);
  CHECK(baseline.out.find("BEP: None") != std::string::npos);

  auto viable = run_cli("breakeven --paper-baseline --collision 0.05 --sla 0.90");
  CHECK(viable.exit_code == 0);
  std::smatch match;
  std::regex bep_pattern("BEP: ([0-9]+)");
  REQUIRE(std::regex_search(viable.out, match, bep_pattern));
  long bep = std::stol(match[1]);
  CHECK(bep >= 220000);
  CHECK(bep <= 240000);

  auto with_days = run_cli(
      "breakeven --paper-baseline --collision 0.05 --sla 0.90 --deliveries-per-day 24");
  CHECK(with_days.out.find("Time to profitability (days):") != std::string::npos);
}

TEST_CASE("breakeven writes curve artifacts") {
  fs::path csv = temp_path("navecon_curve.csv");
  fs::path svg = temp_path("navecon_curve.svg");
  auto result = run_cli("breakeven --paper-baseline --n-max 1000 --csv " + csv.string() +
                        " --chart " + svg.string());
  CHECK(result.exit_code == 0);

  auto points = analysis::read_curve_csv(csv);
  REQUIRE(points.size() == 1001);
  CHECK(points.front().runs == 0);
  CHECK(points.back().runs == 1000);
  CHECK(points.back().cumulative_usd == doctest::Approx(-57833.3).epsilon(0.001));

  std::string chart = slurp(svg);
  CHECK(chart.starts_with("<svg"));
  CHECK(chart.find("</svg>") != std::string::npos);
}

TEST_CASE("sensitivity sweeps a grid and solves frontiers") {
  fs::path csv = temp_path("navecon_grid.csv");
  auto grid = run_cli("sensitivity --paper-baseline --axis collision_rate=0:1:5 --csv " +
                      csv.string());
  CHECK(grid.exit_code == 0);
  std::string text = slurp(csv);
  CHECK(text.starts_with("# navecon-csv v1 sweep"));
  CHECK(std::count(text.begin(), text.end(), '\n') == 7);  // comment + header + 5 cells

  auto frontier = run_cli(
      "sensitivity --paper-baseline --axis collision_rate=0:1:2 --frontier collision_rate");
  CHECK(frontier.exit_code == 0);
  CHECK(frontier.out.find("collision_rate_root") != std::string::npos);

  // profit stays negative across this whole bracket: no root, exit 3
  auto no_root = run_cli(
      "sensitivity --paper-baseline --axis sla_compliance=0:0.4:2 --frontier sla_compliance");
  CHECK(no_root.exit_code == 3);

  CHECK(run_cli("sensitivity --paper-baseline --axis collision_rate=bad").exit_code == 1);
  CHECK(run_cli("sensitivity --paper-baseline --axis collision_rate=0:2:5").exit_code == 1);
}

TEST_CASE("leaderboard ranks simulated policies") {
  fs::path pf = temp_path("navecon_lb_pf.jsonl");
  fs::path nh = temp_path("navecon_lb_nh.jsonl");
  CHECK(run_cli("simulate --level l2 --policy potential-field --episodes 60 --seed 5 "
                "--out " + pf.string()).exit_code == 0);
  CHECK(run_cli("simulate --level l2 --policy noisy-heading --episodes 60 --seed 5 "
                "--out " + nh.string()).exit_code == 0);

  fs::path csv = temp_path("navecon_lb.csv");
  auto result = run_cli("leaderboard --entry potential-field=" + pf.string() +
                        " --entry noisy-heading=" + nh.string() + " --csv " + csv.string());
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("potential-field") != std::string::npos);
  CHECK(result.out.find("noisy-heading") != std::string::npos);
  // the avoidance policy earns more than the noisy one
  CHECK(result.out.find("potential-field") < result.out.find("noisy-heading"));

  std::string text = slurp(csv);
  CHECK(text.starts_with("# navecon-csv v1 leaderboard"));

  CHECK(run_cli("leaderboard --entry nodelim").exit_code == 1);
}

TEST_CASE("validate reports schema violations with line numbers") {
  fs::path log = temp_path("navecon_validate.jsonl");
  CHECK(run_cli("simulate --level l1 --policy straight-line --episodes 5 --seed 2 "
                "--out " + log.string()).exit_code == 0);
  auto ok = run_cli("validate --log " + log.string());
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("ok: 5 records") != std::string::npos);

  // corrupt one line and expect a line-numbered rejection
  std::string text = slurp(log);
  auto second_line = text.find('\n') + 1;
  text.insert(second_line, "{\"garbage\":true}\n");
  std::ofstream(log, std::ios::binary) << text;
  auto bad = run_cli("validate --log " + log.string());
  CHECK(bad.exit_code == 1);
  CHECK(bad.err.find("line 2") != std::string::npos);

  CHECK(run_cli("validate --log /nonexistent/file.jsonl").exit_code == 2);
}

TEST_CASE("config file values apply under flag precedence") {
  fs::path config = temp_path("navecon.ini");
  std::ofstream(config) << "[simulate]\nepisodes=5\nseed=9\n";

  fs::path log = temp_path("navecon_config.jsonl");
  auto from_config = run_cli("--config " + config.string() + " simulate --out " +
                             log.string());
  CHECK(from_config.exit_code == 0);
  CHECK(from_config.out.find("episodes=5") != std::string::npos);

  // a command-line flag beats the config value
  auto overridden = run_cli("--config " + config.string() + " simulate --episodes 2 "
                            "--out " + log.string());
  CHECK(overridden.exit_code == 0);
  CHECK(overridden.out.find("episodes=2") != std::string::npos);
}

TEST_CASE("help exits cleanly and lists every subcommand") {
  auto help = run_cli("--help");
  CHECK(help.exit_code == 0);
  for (const char* name :
       {"simulate", "evaluate", "breakeven", "sensitivity", "leaderboard", "validate"}) {
    CHECK(help.out.find(name) != std::string::npos);
  }
}

TEST_CASE("every registered flag is documented and vice versa") {
  const char* subcommands[] = {"simulate", "evaluate", "breakeven",
                               "sensitivity", "leaderboard", "validate"};
  for (const char* name : subcommands) {
    CAPTURE(name);
    auto documented = readme_flags(std::string("navecon ") + name);
    auto registered = registry_flags(name);
    CHECK(documented == registered);
  }
  CHECK(readme_flags("Global flags") == registry_flags(""));
}
