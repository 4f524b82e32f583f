#include "dfmo/subprocess_problem.hpp"

#include <csignal>
#include <cstdio>
#include <memory>
#include <mutex>
#include <sys/wait.h>
#include <unistd.h>

#include "dfmo/io.hpp"

namespace dfmo {

namespace {

std::vector<double> parse_numbers(std::string_view s) {
  std::vector<double> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i == s.size()) break;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    out.push_back(io::parse_double(s.substr(i, j - i)));
    i = j;
  }
  return out;
}

// One child process plus the two pipe ends the parent talks through.
class Child {
 public:
  explicit Child(const std::vector<std::string>& command) {
    static std::once_flag ignore_sigpipe;
    std::call_once(ignore_sigpipe, [] { std::signal(SIGPIPE, SIG_IGN); });

    int to_child[2];
    int from_child[2];
    if (::pipe(to_child) != 0) throw std::runtime_error("pipe failed");
    if (::pipe(from_child) != 0) {
      ::close(to_child[0]);
      ::close(to_child[1]);
      throw std::runtime_error("pipe failed");
    }
    std::vector<char*> argv;
    for (const std::string& a : command) argv.push_back(const_cast<char*>(a.c_str()));
    argv.push_back(nullptr);

    pid_ = ::fork();
    if (pid_ < 0) throw std::runtime_error("fork failed");
    if (pid_ == 0) {
      ::dup2(to_child[0], STDIN_FILENO);
      ::dup2(from_child[1], STDOUT_FILENO);
      ::close(to_child[0]);
      ::close(to_child[1]);
      ::close(from_child[0]);
      ::close(from_child[1]);
      ::execvp(argv[0], argv.data());
      ::_exit(127);
    }
    ::close(to_child[0]);
    ::close(from_child[1]);
    in_ = ::fdopen(to_child[1], "w");
    out_ = ::fdopen(from_child[0], "r");
  }

  Child(const Child&) = delete;
  Child& operator=(const Child&) = delete;

  ~Child() {
    if (in_) std::fclose(in_);
    if (out_) std::fclose(out_);
    if (pid_ > 0) {
      int status = 0;
      ::waitpid(pid_, &status, 0);
    }
  }

  std::string round_trip(std::span<const double> x) {
    std::lock_guard lock(mutex_);
    std::string line;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i) line += ' ';
      line += io::format_double(x[i]);
    }
    line += '\n';
    if (std::fwrite(line.data(), 1, line.size(), in_) != line.size() || std::fflush(in_) != 0) {
      throw EvaluationError("user black box closed its input", {x.begin(), x.end()});
    }
    std::string reply;
    int c = 0;
    while ((c = std::fgetc(out_)) != EOF && c != '\n') reply.push_back(static_cast<char>(c));
    if (c == EOF && reply.empty()) {
      throw EvaluationError("user black box exited without answering", {x.begin(), x.end()});
    }
    if (!reply.empty() && reply.back() == '\r') reply.pop_back();
    return reply;
  }

 private:
  pid_t pid_ = -1;
  std::FILE* in_ = nullptr;
  std::FILE* out_ = nullptr;
  std::mutex mutex_;
};

}  // namespace

Evaluation parse_reply(std::string_view line, std::size_t q, std::size_t m) {
  const std::size_t semi = line.find(';');
  const std::string_view f_part = line.substr(0, semi);
  const std::string_view g_part =
      semi == std::string_view::npos ? std::string_view{} : line.substr(semi + 1);
  Evaluation e;
  try {
    e.f = parse_numbers(f_part);
    e.g = parse_numbers(g_part);
  } catch (const UsageError& err) {
    throw EvaluationError(std::string("malformed reply: ") + err.what(), {});
  }
  if (e.f.size() != q || e.g.size() != m) {
    throw EvaluationError("reply has " + std::to_string(e.f.size()) + " objectives and " +
                              std::to_string(e.g.size()) + " constraints, expected " +
                              std::to_string(q) + " and " + std::to_string(m),
                          {});
  }
  return e;
}

SubprocessProblemDescription parse_subprocess_description(const nlohmann::json& doc) {
  if (!doc.is_object()) throw UsageError("problem description must be a JSON object");
  SubprocessProblemDescription d;
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "name") {
        d.name = value.get<std::string>();
      } else if (key == "command") {
        d.command = value.get<std::vector<std::string>>();
      } else if (key == "q") {
        d.q = value.get<std::size_t>();
      } else if (key == "m") {
        d.m = value.get<std::size_t>();
      } else if (key == "lower") {
        d.lower = value.get<std::vector<double>>();
      } else if (key == "upper") {
        d.upper = value.get<std::vector<double>>();
      } else if (key == "integer_indices") {
        d.integer_indices = value.get<std::vector<std::size_t>>();
      } else {
        throw UsageError("unknown problem key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("problem description: ") + e.what());
  }
  if (d.command.empty()) throw UsageError("problem key 'command' must name a program");
  if (d.q == 0) throw UsageError("problem key 'q' must be positive");
  return d;
}

ProblemSpec subprocess_problem(const SubprocessProblemDescription& d) {
  IndexPartition partition(d.lower.size(), d.integer_indices);
  Box box{d.lower, d.upper};
  box.validate(partition);
  auto child = std::make_shared<Child>(d.command);
  const std::size_t q = d.q;
  const std::size_t m = d.m;
  BlackBox bb = [child, q, m](std::span<const double> x) {
    try {
      return parse_reply(child->round_trip(x), q, m);
    } catch (const EvaluationError& e) {
      if (!e.point().empty()) throw;
      throw EvaluationError(e.what(), {x.begin(), x.end()});
    }
  };
  return ProblemSpec(d.name, std::move(partition), std::move(box), q, m, std::move(bb));
}

}  // namespace dfmo
