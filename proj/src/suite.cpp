#include <algorithm>
#include <charconv>
#include <sstream>

#include "dfmo/suite.hpp"

namespace dfmo {

namespace {

constexpr std::size_t kDimensions[] = {10, 15, 20, 25, 30};
constexpr double kIntegerLevels = 100.0;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::optional<long> to_long(std::string_view s) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

IndexPartition DiscretizedProblem::partition() const {
  const std::size_t n = base.dimension();
  return IndexPartition::trailing_integers(n, n - n_continuous);
}

Box DiscretizedProblem::box() const {
  Box b{base.lower, base.upper};
  for (std::size_t i = n_continuous; i < base.dimension(); ++i) {
    b.lower[i] = 0.0;
    b.upper[i] = kIntegerLevels;
  }
  return b;
}

std::vector<double> DiscretizedProblem::decode(std::span<const double> x) const {
  std::vector<double> out(x.begin(), x.end());
  for (std::size_t i = n_continuous; i < out.size(); ++i) {
    out[i] = base.lower[i] + (base.upper[i] - base.lower[i]) / kIntegerLevels * x[i];
  }
  return out;
}

ProblemSpec DiscretizedProblem::spec() const {
  auto self = *this;
  BlackBox bb = [self](std::span<const double> x) {
    return Evaluation{self.base.objectives(self.decode(x)), {}};
  };
  return ProblemSpec(base.name + "-n" + std::to_string(base.dimension()), partition(), box(),
                     base.q, 0, std::move(bb));
}

DiscretizedProblem discretize(ContinuousProblem base) {
  DiscretizedProblem d;
  d.n_continuous = base.dimension() / 2;
  d.base = std::move(base);
  return d;
}

std::size_t constraint_count(int family, std::size_t n) {
  switch (family) {
    case 1:
    case 2:
    case 5:
      return n - 2;
    case 3:
    case 4:
      return n - 1;
    case 6:
      return 1;
    default:
      throw UsageError("unknown constraint family " + std::to_string(family));
  }
}

std::vector<double> constraint_values(int family, std::span<const double> x) {
  const std::size_t n = x.size();
  if (n < 3) throw UsageError("constraint families need n >= 3");
  std::vector<double> g;
  g.reserve(constraint_count(family, n));
  auto cubic_like = [&](std::size_t j, double a, double c) {
    return (3.0 - a * x[j + 1]) * x[j + 1] - x[j] - 2.0 * x[j + 2] + c;
  };
  switch (family) {
    case 1:
      for (std::size_t j = 0; j + 2 < n; ++j) g.push_back(cubic_like(j, 2.0, 1.0));
      break;
    case 2:
      for (std::size_t j = 0; j + 2 < n; ++j) g.push_back(cubic_like(j, 2.0, 2.5));
      break;
    case 3:
      for (std::size_t j = 0; j + 1 < n; ++j) {
        g.push_back(x[j] * x[j] + x[j + 1] * x[j + 1] + x[j] * x[j + 1] - 2.0 * x[j] -
                    2.0 * x[j + 1] + 1.0);
      }
      break;
    case 4:
      for (std::size_t j = 0; j + 1 < n; ++j) {
        g.push_back(x[j] * x[j] + x[j + 1] * x[j + 1] + x[j] * x[j + 1] - 1.0);
      }
      break;
    case 5:
      for (std::size_t j = 0; j + 2 < n; ++j) g.push_back(cubic_like(j, 0.5, 1.0));
      break;
    case 6: {
      double s = 0.0;
      for (std::size_t j = 0; j + 2 < n; ++j) s += cubic_like(j, 0.5, 1.0);
      g.push_back(s);
      break;
    }
    default:
      throw UsageError("unknown constraint family " + std::to_string(family));
  }
  return g;
}

ProblemSpec attach_constraints(const DiscretizedProblem& problem, int family) {
  const std::size_t n = problem.base.dimension();
  const std::size_t m = constraint_count(family, n);
  auto self = problem;
  BlackBox bb = [self, family](std::span<const double> x) {
    const std::vector<double> xt = self.decode(x);
    return Evaluation{self.base.objectives(xt), constraint_values(family, xt)};
  };
  return ProblemSpec(problem.base.name + "-n" + std::to_string(n) + "-fam" + std::to_string(family),
                     problem.partition(), problem.box(), problem.base.q, m, std::move(bb));
}

std::string SuiteInstance::id() const {
  std::string s = "UF" + std::to_string(uf) + "-n" + std::to_string(n);
  if (family != 0) s += "-fam" + std::to_string(family);
  return s;
}

ProblemSpec SuiteInstance::build() const {
  DiscretizedProblem d = discretize(make_uf(uf, n));
  return family == 0 ? d.spec() : attach_constraints(d, family);
}

std::optional<SuiteInstance> parse_instance_id(std::string_view id) {
  // UF<k>-n<n>[-fam<f>]
  if (!id.starts_with("UF")) return std::nullopt;
  id.remove_prefix(2);
  const auto dash = id.find("-n");
  if (dash == std::string_view::npos) return std::nullopt;
  const auto uf = to_long(id.substr(0, dash));
  id.remove_prefix(dash + 2);
  std::optional<long> fam = 0;
  const auto fam_pos = id.find("-fam");
  std::optional<long> n;
  if (fam_pos == std::string_view::npos) {
    n = to_long(id);
  } else {
    n = to_long(id.substr(0, fam_pos));
    fam = to_long(id.substr(fam_pos + 4));
  }
  if (!uf || !n || !fam || *uf < 1 || *uf > 10 || *n < 3 || *fam < 0 || *fam > 6) {
    return std::nullopt;
  }
  if (fam_pos != std::string_view::npos && *fam == 0) return std::nullopt;
  return SuiteInstance{static_cast<int>(*uf), static_cast<std::size_t>(*n), static_cast<int>(*fam)};
}

std::vector<SuiteInstance> enumerate_suite() {
  std::vector<SuiteInstance> out;
  for (int family = 0; family <= 6; ++family) {
    for (int uf = 1; uf <= 10; ++uf) {
      for (std::size_t n : kDimensions) out.push_back({uf, n, family});
    }
  }
  return out;
}

std::vector<SuiteInstance> filter_suite(std::string_view filter) {
  using Pred = std::function<bool(const SuiteInstance&)>;
  std::vector<Pred> preds;
  std::stringstream ss{std::string(filter)};
  std::string raw;
  while (std::getline(ss, raw, ',')) {
    const std::string term = trim(raw);
    if (term.empty() || term == "all") continue;
    if (term == "bound" || term == "bound-constrained") {
      preds.push_back([](const SuiteInstance& s) { return !s.constrained(); });
      continue;
    }
    if (term == "constrained") {
      preds.push_back([](const SuiteInstance& s) { return s.constrained(); });
      continue;
    }
    if (term.size() > 2 && (term[0] == 'U' || term[0] == 'u') && (term[1] == 'F' || term[1] == 'f')) {
      const auto v = to_long(std::string_view(term).substr(2));
      if (!v) throw UsageError("bad filter term '" + term + "'");
      preds.push_back([k = *v](const SuiteInstance& s) { return s.uf == k; });
      continue;
    }
    const auto eq = term.find('=');
    if (eq == std::string::npos) throw UsageError("bad filter term '" + term + "'");
    const std::string key = trim(std::string_view(term).substr(0, eq));
    const auto v = to_long(trim(std::string_view(term).substr(eq + 1)));
    if (!v) throw UsageError("bad filter value in '" + term + "'");
    const long k = *v;
    if (key == "q") {
      preds.push_back([k](const SuiteInstance& s) { return static_cast<long>(s.q()) == k; });
    } else if (key == "n") {
      preds.push_back([k](const SuiteInstance& s) { return static_cast<long>(s.n) == k; });
    } else if (key == "uf") {
      preds.push_back([k](const SuiteInstance& s) { return s.uf == k; });
    } else if (key == "fam" || key == "family") {
      preds.push_back([k](const SuiteInstance& s) { return s.family == k; });
    } else {
      throw UsageError("unknown filter key '" + key + "'");
    }
  }
  std::vector<SuiteInstance> out;
  for (const SuiteInstance& s : enumerate_suite()) {
    if (std::all_of(preds.begin(), preds.end(), [&](const Pred& p) { return p(s); })) {
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace dfmo
