#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dfmo/app.hpp"
#include "dfmo/suite.hpp"

namespace {

struct CommonFlags {
  std::string config_path;
  std::optional<double> eps;
  std::optional<std::size_t> budget;
  std::optional<std::string> root;
  std::optional<std::string> tag;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path, "JSON configuration file");
  cmd->add_option("--eps", flags.eps, "Penalty parameter (overrides the config)");
  cmd->add_option("--budget", flags.budget, "Maximum number of black-box evaluations");
  cmd->add_option("--root", flags.root, "Results root (default $DFMOINT_RESULTS or ./results)");
  cmd->add_option("--tag", flags.tag, "Solver tag used as the results subdirectory");
}

dfmo::io::RunConfigFile load_config(const CommonFlags& flags) {
  dfmo::io::RunConfigFile config;
  if (!flags.config_path.empty()) {
    config = dfmo::io::parse_config_text(dfmo::io::read_file(flags.config_path));
  }
  if (flags.eps) {
    config.solver.eps = *flags.eps;
    config.eps_schedule.clear();
  }
  if (flags.budget) config.solver.max_evals = *flags.budget;
  config.solver.validate();
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dfmoint: derivative-free mixed-integer multiobjective solver"};
  app.require_subcommand(1);

  CommonFlags solve_flags;
  std::string instance;
  std::string problem;
  std::string out;
  CLI::App* solve = app.add_subcommand("solve", "Solve one suite instance or user problem");
  add_common(solve, solve_flags);
  solve->add_option("--instance", instance, "Suite instance id, e.g. UF1-n10 or UF3-n20-fam4");
  solve->add_option("--problem", problem, "JSON description of a subprocess black box");
  solve->add_option("--out", out, "Output directory (default <root>/<tag>/<instance>)");

  CommonFlags bench_flags;
  std::optional<std::string> filter;
  std::optional<std::size_t> jobs;
  CLI::App* bench = app.add_subcommand("bench", "Solve every suite instance matching a filter");
  add_common(bench, bench_flags);
  bench->add_option("--filter", filter, "Comma-separated terms: q=2, n=10, uf=3, fam=4, bound, constrained, all");
  bench->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<std::string> solver_dirs;
  std::string metrics_out = ".";
  CLI::App* metrics = app.add_subcommand("metrics", "Purity, spread and performance profiles");
  metrics->add_option("dirs", solver_dirs, "One results directory per solver")->required();
  metrics->add_option("--out", metrics_out, "Directory for metrics.csv and profile CSVs");

  std::string list_filter = "all";
  CLI::App* list = app.add_subcommand("list", "Print the suite instance ids matching a filter");
  list->add_option("--filter", list_filter, "Filter terms as for bench");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      dfmo::app::SolveOptions o;
      o.config = load_config(solve_flags);
      if (!instance.empty()) o.instance = instance;
      else if (o.config.instance) o.instance = *o.config.instance;
      if (!problem.empty()) o.problem = problem;
      if (o.instance && o.problem) throw dfmo::UsageError("--instance and --problem are exclusive");
      if (!out.empty()) o.out_dir = out;
      else if (o.config.output) o.out_dir = *o.config.output;
      if (solve_flags.root) o.root = *solve_flags.root;
      if (solve_flags.tag) o.tag = *solve_flags.tag;
      else if (o.config.tag) o.tag = *o.config.tag;
      return dfmo::app::cmd_solve(o, std::cout);
    }
    if (*bench) {
      dfmo::app::BenchOptions o;
      o.config = load_config(bench_flags);
      if (filter) o.filter = *filter;
      else if (o.config.filter) o.filter = *o.config.filter;
      if (jobs) o.jobs = *jobs;
      else if (o.config.jobs) o.jobs = *o.config.jobs;
      if (bench_flags.root) o.root = *bench_flags.root;
      else if (o.config.output) o.root = *o.config.output;
      if (bench_flags.tag) o.tag = *bench_flags.tag;
      else if (o.config.tag) o.tag = *o.config.tag;
      return dfmo::app::cmd_bench(o, std::cout);
    }
    if (*metrics) {
      dfmo::app::MetricsOptions o;
      o.solver_dirs.assign(solver_dirs.begin(), solver_dirs.end());
      o.out_dir = metrics_out;
      return dfmo::app::cmd_metrics(o, std::cerr);
    }
    if (*list) {
      for (const dfmo::SuiteInstance& s : dfmo::filter_suite(list_filter)) std::cout << s.id() << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return dfmo::app::kError;
  }
  return dfmo::app::kError;
}
