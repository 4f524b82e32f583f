#include "dfmo/app.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <thread>

#include "dfmo/metrics.hpp"
#include "dfmo/subprocess_problem.hpp"
#include "dfmo/suite.hpp"

namespace dfmo::app {

namespace fs = std::filesystem;

std::filesystem::path default_results_root() {
  const char* env = std::getenv("DFMOINT_RESULTS");
  return env && *env ? fs::path(env) : fs::path("results");
}

RunRecord run_problem(const ProblemSpec& problem, const io::RunConfigFile& config) {
  if (config.eps_schedule.empty()) return solve(problem, config.solver);
  return solve_with_eps_schedule(problem, config.solver, config.eps_schedule);
}

void write_run(const fs::path& dir, const ProblemSpec& problem, const RunRecord& record,
               const SolverConfig& config) {
  const io::FrontTable table =
      io::front_table(final_front(record.list), problem.partition(), problem.num_objectives());
  io::write_file_atomic(dir / "front.csv", io::write_front_csv(table));
  io::write_file_atomic(dir / "run.json",
                        io::run_record_json(record, problem.name(), config).dump(2) + "\n");
}

int cmd_solve(const SolveOptions& options, std::ostream& log) {
  if (options.instance.has_value() == options.problem.has_value()) {
    throw UsageError("give exactly one of an instance id or a problem file");
  }
  std::optional<ProblemSpec> problem;
  if (options.instance) {
    const auto inst = parse_instance_id(*options.instance);
    if (!inst) throw UsageError("unknown instance id '" + *options.instance + "'");
    problem = inst->build();
  } else {
    const auto doc = nlohmann::json::parse(io::read_file(*options.problem), nullptr, false);
    if (doc.is_discarded()) throw UsageError("problem file is not valid JSON");
    problem = subprocess_problem(parse_subprocess_description(doc));
  }
  const fs::path dir =
      options.out_dir.empty() ? options.root / options.tag / problem->name() : options.out_dir;
  const RunRecord record = run_problem(*problem, options.config);
  write_run(dir, *problem, record, options.config.solver);
  const std::size_t front_size = final_front(record.list).size();
  log << problem->name() << ": " << front_size << " points, " << record.evaluations_used
      << " evaluations, " << termination_name(record.termination) << ", written to "
      << dir.string() << "\n";
  if (front_size == 0 && record.termination == Termination::budget) return kBudgetEmpty;
  return kSuccess;
}

int cmd_bench(const BenchOptions& options, std::ostream& log) {
  const std::vector<SuiteInstance> instances = filter_suite(options.filter);
  const fs::path base = options.root / options.tag;
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> failures{0};
  std::mutex log_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      const SuiteInstance& inst = instances[i];
      const fs::path dir = base / inst.id();
      std::string message;
      try {
        const ProblemSpec problem = inst.build();
        const RunRecord record = run_problem(problem, options.config);
        write_run(dir, problem, record, options.config.solver);
        std::error_code ec;
        fs::remove(dir / "error.txt", ec);
        message = inst.id() + ": " + std::to_string(final_front(record.list).size()) +
                  " points, " + std::to_string(record.evaluations_used) + " evaluations";
      } catch (const std::exception& e) {
        ++failures;
        message = inst.id() + ": failed: " + e.what();
        try {
          io::write_file_atomic(dir / "error.txt", std::string(e.what()) + "\n");
        } catch (const std::exception&) {
        }
      }
      std::lock_guard lock(log_mutex);
      log << message << "\n";
    }
  };

  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, instances.size()));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  log << instances.size() << " instances, " << failures.load() << " failed, results in "
      << base.string() << "\n";
  return failures.load() == 0 ? kSuccess : kError;
}

namespace {

std::set<std::string> instances_in(const fs::path& dir) {
  std::set<std::string> out;
  if (!fs::is_directory(dir)) throw UsageError("not a directory: " + dir.string());
  for (const fs::directory_entry& e : fs::directory_iterator(dir)) {
    if (e.is_directory() && fs::exists(e.path() / "front.csv")) {
      out.insert(e.path().filename().string());
    }
  }
  return out;
}

std::string profile_csv(const metrics::ProfileTable& table) {
  std::string out = "tau,solver,rho\n";
  std::vector<double> taus = table.breakpoints();
  for (std::size_t s = 0; s < table.solvers.size(); ++s) {
    for (double tau : taus) {
      out += io::format_double(tau) + "," + table.solvers[s] + "," +
             io::format_double(table.rho(s, tau)) + "\n";
    }
  }
  return out;
}

}  // namespace

int cmd_metrics(const MetricsOptions& options, std::ostream& log) {
  if (options.solver_dirs.empty()) throw UsageError("metrics needs at least one results directory");

  std::vector<std::string> solvers;
  std::vector<std::set<std::string>> sets;
  for (const fs::path& dir : options.solver_dirs) {
    fs::path clean = dir.lexically_normal();
    if (clean.filename().empty()) clean = clean.parent_path();
    solvers.push_back(clean.filename().string());
    sets.push_back(instances_in(dir));
  }
  std::set<std::string> common = sets.front();
  std::set<std::string> all = sets.front();
  for (std::size_t s = 1; s < sets.size(); ++s) {
    std::set<std::string> both;
    std::set_intersection(common.begin(), common.end(), sets[s].begin(), sets[s].end(),
                          std::inserter(both, both.end()));
    common = std::move(both);
    all.insert(sets[s].begin(), sets[s].end());
  }
  if (common.size() != all.size()) {
    log << "warning: instance sets differ; using the " << common.size() << " common of "
        << all.size() << " instances\n";
  }

  std::vector<std::string> problems(common.begin(), common.end());
  std::vector<std::vector<double>> purity(problems.size());
  std::vector<std::vector<double>> gamma(problems.size());
  std::vector<std::vector<double>> delta(problems.size());
  std::string table = "instance,solver,points,purity,gamma,delta\n";

  for (std::size_t p = 0; p < problems.size(); ++p) {
    std::vector<metrics::Front> fronts;
    for (const fs::path& dir : options.solver_dirs) {
      const io::FrontTable t = io::read_front_csv(io::read_file(dir / problems[p] / "front.csv"));
      metrics::Front f;
      for (std::size_t r = 0; r < t.size(); ++r) {
        if (t.violation[r] <= options.feasibility_tolerance) f.push_back(metrics::canonical(t.f[r]));
      }
      fronts.push_back(metrics::nondominated(f));
    }
    const metrics::Front reference = metrics::reference_front(fronts);
    std::optional<metrics::Extremes> extremes;
    if (!reference.empty()) extremes = metrics::extremes_of(reference);
    for (std::size_t s = 0; s < solvers.size(); ++s) {
      const double pu = metrics::purity(fronts[s], reference);
      const double ga = extremes ? metrics::gamma_spread(fronts[s], *extremes) : metrics::kFailure;
      const double de = extremes ? metrics::delta_spread(fronts[s], *extremes) : metrics::kFailure;
      purity[p].push_back(pu);
      gamma[p].push_back(ga);
      delta[p].push_back(de);
      table += problems[p] + "," + solvers[s] + "," + std::to_string(fronts[s].size()) + "," +
               io::format_double(pu) + "," + io::format_double(ga) + "," + io::format_double(de) +
               "\n";
    }
  }

  const auto write_profile = [&](const std::string& name, const std::vector<std::vector<double>>& v,
                                 bool higher_is_better) {
    const metrics::ProfileTable t = metrics::performance_profile(v, solvers, problems, higher_is_better);
    for (const std::string& d : t.dropped) {
      log << "warning: " << name << " profile drops " << d << " (no solver produced a front)\n";
    }
    io::write_file_atomic(options.out_dir / ("profile_" + name + ".csv"), profile_csv(t));
  };
  io::write_file_atomic(options.out_dir / "metrics.csv", table);
  write_profile("purity", purity, true);
  write_profile("gamma", gamma, false);
  write_profile("delta", delta, false);
  log << problems.size() << " instances, " << solvers.size() << " solvers, written to "
      << options.out_dir.string() << "\n";
  return kSuccess;
}

}  // namespace dfmo::app
