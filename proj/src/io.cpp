#include "dfmo/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

namespace dfmo::io {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

double get_number(const nlohmann::json& value, const std::string& key) {
  if (!value.is_number()) throw UsageError("config key '" + key + "' must be a number");
  return value.get<double>();
}

std::size_t get_count(const nlohmann::json& value, const std::string& key) {
  if (!value.is_number_unsigned()) {
    throw UsageError("config key '" + key + "' must be a nonnegative integer");
  }
  return value.get<std::size_t>();
}

bool get_bool(const nlohmann::json& value, const std::string& key) {
  if (!value.is_boolean()) throw UsageError("config key '" + key + "' must be true or false");
  return value.get<bool>();
}

std::string get_string(const nlohmann::json& value, const std::string& key) {
  if (!value.is_string()) throw UsageError("config key '" + key + "' must be a string");
  return value.get<std::string>();
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

double parse_double(std::string_view s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  double v = 0.0;
  const char* begin = s.data();
  if (s.size() > 1 && s[0] == '+' && s[1] != '-') ++begin;
  auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("not a number: '" + std::string(s) + "'");
  }
  return v;
}

FrontTable front_table(const std::vector<ReportedPoint>& front, const IndexPartition& partition,
                       std::size_t q) {
  FrontTable t;
  t.n = partition.size();
  t.q = q;
  for (const ReportedPoint& p : front) {
    t.x.push_back(p.x.dense(partition));
    t.f.push_back(p.f);
    t.violation.push_back(p.violation);
  }
  return t;
}

std::string write_front_csv(const FrontTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.n; ++i) out += "x_" + std::to_string(i) + ",";
  for (std::size_t i = 1; i <= table.q; ++i) out += "f_" + std::to_string(i) + ",";
  out += "viol\n";
  for (std::size_t r = 0; r < table.size(); ++r) {
    for (double v : table.x[r]) out += format_double(v) + ",";
    for (double v : table.f[r]) out += format_double(v) + ",";
    out += format_double(table.violation[r]) + "\n";
  }
  return out;
}

FrontTable read_front_csv(std::string_view text) {
  FrontTable t;
  std::size_t line_no = 0;
  bool have_header = false;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    const std::string_view line = strip_cr(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (!have_header) {
      std::size_t i = 0;
      while (i < cells.size() && cells[i] == "x_" + std::to_string(i)) ++i;
      t.n = i;
      while (i < cells.size() && cells[i] == "f_" + std::to_string(i - t.n + 1)) ++i;
      t.q = i - t.n;
      if (t.q == 0 || i + 1 != cells.size() || cells[i] != "viol") {
        throw UsageError("front CSV line 1: expected header x_0..,f_1..,viol");
      }
      have_header = true;
      continue;
    }
    if (cells.size() != t.n + t.q + 1) {
      throw UsageError("front CSV line " + std::to_string(line_no) + ": expected " +
                       std::to_string(t.n + t.q + 1) + " fields");
    }
    std::vector<double> row;
    try {
      for (std::string_view c : cells) row.push_back(parse_double(c));
    } catch (const UsageError& e) {
      throw UsageError("front CSV line " + std::to_string(line_no) + ": " + e.what());
    }
    t.x.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(t.n));
    t.f.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(t.n),
                     row.begin() + static_cast<std::ptrdiff_t>(t.n + t.q));
    t.violation.push_back(row.back());
  }
  if (!have_header) throw UsageError("front CSV is empty");
  return t;
}

nlohmann::json run_record_json(const RunRecord& record, std::string_view instance,
                               const SolverConfig& config) {
  nlohmann::json entries = nlohmann::json::array();
  for (const FrontEntry& e : record.list.entries()) {
    entries.push_back({{"alpha_c", e.alpha_c}, {"xi", e.xi}, {"violation", e.violation}});
  }
  return {
      {"schema", kRunSchema},
      {"instance", instance},
      {"eps", record.eps},
      {"termination", termination_name(record.termination)},
      {"evaluations_used", record.evaluations_used},
      {"max_evals", config.max_evals},
      {"black_box_calls", record.black_box_calls},
      {"cache_hits", record.cache_hits},
      {"iterations", record.iterations},
      {"directions", record.directions},
      {"direction_level", record.direction_level},
      {"list_size", record.list.size()},
      {"front_size", final_front(record.list).size()},
      {"config",
       {{"eps", config.eps},
        {"gamma", config.expansion.gamma},
        {"delta", config.expansion.delta},
        {"theta", config.expansion.theta},
        {"xi0", config.xi0},
        {"max_evals", config.max_evals},
        {"opposite_direction", config.opposite_direction},
        {"coordinate_directions_first", config.coordinate_directions_first},
        {"min_alpha_c", config.min_alpha_c},
        {"xi_floor", config.xi_floor},
        {"max_new_directions", config.max_new_directions},
        {"max_idle_iterations", config.max_idle_iterations}}},
      {"entries", entries},
  };
}

RunConfigFile parse_config(const nlohmann::json& doc) {
  if (!doc.is_object()) throw UsageError("config must be a JSON object");
  RunConfigFile c;
  SolverConfig& s = c.solver;
  for (const auto& [key, value] : doc.items()) {
    if (key == "eps") {
      s.eps = get_number(value, key);
    } else if (key == "gamma") {
      s.expansion.gamma = get_number(value, key);
    } else if (key == "delta") {
      s.expansion.delta = get_number(value, key);
    } else if (key == "theta") {
      s.expansion.theta = get_number(value, key);
    } else if (key == "xi0") {
      s.xi0 = get_number(value, key);
    } else if (key == "max_evals") {
      s.max_evals = get_count(value, key);
    } else if (key == "opposite_direction") {
      s.opposite_direction = get_bool(value, key);
    } else if (key == "coordinate_directions_first") {
      s.coordinate_directions_first = get_bool(value, key);
    } else if (key == "min_alpha_c") {
      s.min_alpha_c = get_number(value, key);
    } else if (key == "xi_floor") {
      s.xi_floor = get_number(value, key);
    } else if (key == "max_new_directions") {
      s.max_new_directions = get_count(value, key);
    } else if (key == "max_idle_iterations") {
      s.max_idle_iterations = get_count(value, key);
    } else if (key == "eps_schedule") {
      if (!value.is_array()) throw UsageError("config key 'eps_schedule' must be an array");
      for (const auto& v : value) c.eps_schedule.push_back(get_number(v, key));
    } else if (key == "instance") {
      c.instance = get_string(value, key);
    } else if (key == "filter") {
      c.filter = get_string(value, key);
    } else if (key == "output") {
      c.output = get_string(value, key);
    } else if (key == "tag") {
      c.tag = get_string(value, key);
    } else if (key == "jobs") {
      c.jobs = get_count(value, key);
    } else {
      throw UsageError("unknown config key '" + key + "'");
    }
  }
  for (double e : c.eps_schedule) {
    if (!(e > 0.0)) throw UsageError("config key 'eps_schedule' must hold positive values");
  }
  try {
    s.validate();
  } catch (const UsageError& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  return c;
}

RunConfigFile parse_config_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(doc);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw std::runtime_error("write failed for " + path.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace dfmo::io
