#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "dfmo/model.hpp"

namespace dfmo {

/// A user black box living in another process. The child reads one point per
/// line (space-separated coordinates) on stdin and answers one line
/// "f_1 ... f_q;g_1 ... g_m" on stdout. Numbers use '.' as the decimal point
/// regardless of locale.
struct SubprocessProblemDescription {
  std::string name = "user";
  std::vector<std::string> command;  // argv, command[0] looked up on PATH
  std::size_t q = 2;
  std::size_t m = 0;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<std::size_t> integer_indices;
};

/// Reads {"name", "command", "q", "m", "lower", "upper", "integer_indices"};
/// unknown keys raise UsageError.
SubprocessProblemDescription parse_subprocess_description(const nlohmann::json& doc);

/// Starts the child and wraps it as a ProblemSpec. The child lives as long as
/// any copy of the returned spec's black box. A malformed reply or a dead
/// child raises EvaluationError.
ProblemSpec subprocess_problem(const SubprocessProblemDescription& description);

/// Parses one reply line into an Evaluation (exposed for testing).
Evaluation parse_reply(std::string_view line, std::size_t q, std::size_t m);

}  // namespace dfmo
