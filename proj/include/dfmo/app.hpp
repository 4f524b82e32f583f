#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dfmo/io.hpp"
#include "dfmo/solver.hpp"

namespace dfmo::app {

enum ExitCode : int { kSuccess = 0, kError = 1, kBudgetEmpty = 2 };

/// Results root: $DFMOINT_RESULTS when set, otherwise "results".
std::filesystem::path default_results_root();

/// Runs one problem with a fixed eps, or over config.eps_schedule when set.
RunRecord run_problem(const ProblemSpec& problem, const io::RunConfigFile& config);

/// Writes front.csv and run.json into `dir`, each atomically.
void write_run(const std::filesystem::path& dir, const ProblemSpec& problem,
               const RunRecord& record, const SolverConfig& config);

struct SolveOptions {
  std::optional<std::string> instance;              // suite id such as "UF1-n10"
  std::optional<std::filesystem::path> problem;     // subprocess problem JSON
  io::RunConfigFile config;
  std::filesystem::path out_dir;                    // empty: <root>/<tag>/<name>
  std::filesystem::path root = default_results_root();
  std::string tag = "dfmoint";
};

int cmd_solve(const SolveOptions& options, std::ostream& log);

struct BenchOptions {
  std::string filter = "all";
  io::RunConfigFile config;
  std::filesystem::path root = default_results_root();
  std::string tag = "dfmoint";
  std::size_t jobs = 1;
};

/// Solves every instance matching the filter into <root>/<tag>/<instance>/.
/// A failing instance gets an error.txt and the sweep continues; the exit code
/// is then kError.
int cmd_bench(const BenchOptions& options, std::ostream& log);

struct MetricsOptions {
  /// One directory per solver, holding <instance>/front.csv; the directory
  /// name is the solver name.
  std::vector<std::filesystem::path> solver_dirs;
  std::filesystem::path out_dir;
  double feasibility_tolerance = 1e-6;
};

/// Writes metrics.csv and profile_{purity,gamma,delta}.csv into out_dir.
int cmd_metrics(const MetricsOptions& options, std::ostream& log);

}  // namespace dfmo::app
