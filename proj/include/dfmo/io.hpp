#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dfmo/front_list.hpp"
#include "dfmo/solver.hpp"

namespace dfmo::io {

/// Shortest decimal string that reads back to the same double. Independent of
/// the C locale. Non-finite values print as "inf", "-inf" and "nan".
std::string format_double(double v);

/// Locale-independent inverse of format_double. Throws UsageError on junk.
double parse_double(std::string_view s);

/// A front in the exchange format: one row per point with its coordinates,
/// objective values and constraint violation.
struct FrontTable {
  std::size_t n = 0;
  std::size_t q = 0;
  std::vector<std::vector<double>> x;
  std::vector<ObjectiveVector> f;
  std::vector<double> violation;

  std::size_t size() const noexcept { return f.size(); }
};

FrontTable front_table(const std::vector<ReportedPoint>& front, const IndexPartition& partition,
                       std::size_t q);

/// Header "x_0,...,x_{n-1},f_1,...,f_q,viol" followed by one line per point.
std::string write_front_csv(const FrontTable& table);

/// Parses the front CSV. The header fixes n and q. Throws UsageError with the
/// offending line number on malformed input.
FrontTable read_front_csv(std::string_view text);

/// Versioned, deterministic JSON summary of a run (no timings).
nlohmann::json run_record_json(const RunRecord& record, std::string_view instance,
                               const SolverConfig& config);

inline constexpr std::string_view kRunSchema = "dfmoint.run/1";

/// A parsed configuration file: solver settings plus optional selectors.
struct RunConfigFile {
  SolverConfig solver;
  std::vector<double> eps_schedule;  // empty means a single run at solver.eps
  std::optional<std::string> instance;
  std::optional<std::string> filter;
  std::optional<std::string> output;
  std::optional<std::string> tag;
  std::optional<std::size_t> jobs;
};

/// Validates a config document. Unknown keys and wrongly typed values raise
/// UsageError naming the key.
RunConfigFile parse_config(const nlohmann::json& doc);
RunConfigFile parse_config_text(std::string_view text);

std::string read_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it over `path`, so readers
/// never observe a partially written file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace dfmo::io
