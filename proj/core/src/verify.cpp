#include "strongdim/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "strongdim/closed_forms.hpp"
#include "strongdim/exact.hpp"
#include "strongdim/graph_io.hpp"
#include "strongdim/rng.hpp"
#include "strongdim/spectral.hpp"

namespace smd {

namespace {

constexpr double kCliqueBoundSlack = 1e-9;
constexpr const char* kSelftestTag = "selftest-off-by-one";

struct TrialOutcome {
  std::string case_id;
  std::vector<std::pair<std::string, long long>> params;
  std::vector<std::pair<std::string, std::string>> graphs;
  double expected = 0.0;
  double oracle = 0.0;
  bool failed = false;
};

Graph draw_gnp(std::mt19937_64& engine, int n, double p) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng::unit(engine) < p) g.add_edge(u, v);
  return g;
}

Graph draw_connected(std::mt19937_64& engine, int n, double p) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Graph g = draw_gnp(engine, n, p);
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("verify: no connected draw within 10000 attempts");
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

bool is_complete(const Graph& g) {
  const long long n = g.order();
  return g.edge_count() == n * (n - 1) / 2;
}

// Base drivers; group and case tags map onto one of these.
enum class Driver {
  diam2_varpi,
  diam2_omega,
  join_varpi,
  join_dims,
  corona_reduction,
  corona_formula,
  corona_triangle_free,
  corona_relations,
  kr_plus_h,
  spectral_clique,
  spectral_dims,
  selftest,
};

std::optional<Driver> driver_for(const std::string& tag) {
  auto is = [&](const char* t) { return tag == t; };
  auto in = [&](std::initializer_list<const char*> ts) {
    for (const char* t : ts)
      if (tag == t) return true;
    return false;
  };
  if (is("twin-clique-diam2")) return Driver::diam2_varpi;
  if (in({"diam2-omega", "diam2-omega-twins"})) return Driver::diam2_omega;
  if (in({"join-varpi", "join-varpi-i", "join-varpi-ii"})) return Driver::join_varpi;
  if (in({"join-dims", "join-dims-i", "join-dims-ii", "join-dims-iii"})) return Driver::join_dims;
  if (is("corona-reduction")) return Driver::corona_reduction;
  if (in({"corona-dims", "corona-dims-i", "corona-dims-ii", "corona-k1"}))
    return Driver::corona_formula;
  if (is("corona-triangle-free")) return Driver::corona_triangle_free;
  if (in({"relations", "relations-i", "relations-ii", "relations-iii"}))
    return Driver::corona_relations;
  if (in({"kr-plus-h", "kr-plus-h-i", "kr-plus-h-ii", "kr-plus-h-iii"})) return Driver::kr_plus_h;
  if (is("spectral-clique")) return Driver::spectral_clique;
  if (is("spectral-dims")) return Driver::spectral_dims;
  if (is(kSelftestTag)) return Driver::selftest;
  return std::nullopt;
}

// tag matches a resolved case id when equal or a "-case" refinement of it
bool tag_matches(const std::string& tag, const std::string& case_id) {
  if (case_id == tag) return true;
  return case_id.size() > tag.size() + 1 && case_id.compare(0, tag.size(), tag) == 0 &&
         case_id[tag.size()] == '-';
}

TrialOutcome make_single(const std::string& case_id, int n, const Graph& g, double expected,
                         double oracle, bool failed) {
  return {case_id,
          {{"n", n}},
          {{"graph", graph_to_text(g)}},
          expected,
          oracle,
          failed};
}

TrialOutcome make_pair(const std::string& case_id, const char* left_name, long long left_value,
                       int n2, const Graph* left, const Graph& right, const Graph& constructed,
                       double expected, double oracle) {
  TrialOutcome out;
  out.case_id = case_id;
  out.params = {{left_name, left_value}, {"n2", n2}};
  if (left != nullptr) out.graphs.emplace_back("left", graph_to_text(*left));
  out.graphs.emplace_back("right", graph_to_text(right));
  out.graphs.emplace_back("constructed", graph_to_text(constructed));
  out.expected = expected;
  out.oracle = oracle;
  out.failed = expected != oracle;
  return out;
}

std::optional<TrialOutcome> run_trial(Driver driver, const TrialRanges& r,
                                      std::mt19937_64& engine) {
  switch (driver) {
    case Driver::diam2_varpi:
    case Driver::diam2_omega: {
      const int n = rng::between(engine, r.left_min, r.left_max);
      const Graph g = draw_connected(engine, n, r.p);
      try {
        const FormulaResult fr = driver == Driver::diam2_varpi ? dims_diameter_two(g)
                                                               : dims_diameter_two_omega(g);
        const int oracle = dims_exact(g).value;
        return make_single(fr.theorem_id, n, g, fr.value, oracle, fr.value != oracle);
      } catch (const hypothesis_error&) {
        return std::nullopt;
      }
    }
    case Driver::join_varpi:
    case Driver::join_dims: {
      const int n1 = rng::between(engine, r.left_min, r.left_max);
      const int n2 = rng::between(engine, r.right_min, r.right_max);
      const Graph g = draw_connected(engine, n1, r.p);
      const Graph h = draw_connected(engine, n2, r.p);
      const Graph joined = join(g, h);
      try {
        const FormulaResult fr = driver == Driver::join_varpi ? varpi_join(g, h)
                                                              : dims_join(g, h);
        const int oracle = driver == Driver::join_varpi ? twin_free_clique_number(joined).value
                                                        : dims_exact(joined).value;
        return make_pair(fr.theorem_id, "n1", n1, n2, &g, h, joined, fr.value, oracle);
      } catch (const hypothesis_error&) {
        return std::nullopt;
      }
    }
    case Driver::corona_reduction: {
      const int n1 = rng::between(engine, r.left_min, r.left_max);
      const int n2 = rng::between(engine, r.right_min, r.right_max);
      const Graph g = draw_connected(engine, n1, r.p);
      const Graph h = draw_gnp(engine, n2, r.p);
      const Graph product = corona(g, h);
      const int expected = dims_exact(corona_reduction_graph(g, h)).value;
      const int oracle = dims_exact(product).value;
      return make_pair("corona-reduction", "n1", n1, n2, &g, h, product, expected, oracle);
    }
    case Driver::corona_formula:
    case Driver::corona_triangle_free:
    case Driver::corona_relations: {
      const int n1 = rng::between(engine, r.left_min, r.left_max);
      const int n2 = rng::between(engine, r.right_min, r.right_max);
      const Graph g = draw_connected(engine, n1, r.p);
      const Graph h = draw_gnp(engine, n2, r.p);
      try {
        const FormulaResult fr = driver == Driver::corona_formula ? dims_corona(g, h)
                                 : driver == Driver::corona_triangle_free
                                     ? dims_corona_triangle_free(g, h)
                                     : dims_corona_relations(g, h);
        const Graph product = corona(g, h);
        const int oracle = dims_exact(product).value;
        return make_pair(fr.theorem_id, "n1", n1, n2, &g, h, product, fr.value, oracle);
      } catch (const hypothesis_error&) {
        return std::nullopt;
      }
    }
    case Driver::kr_plus_h: {
      const int kr = rng::between(engine, r.left_min, r.left_max);
      const int n2 = rng::between(engine, r.right_min, r.right_max);
      const Graph h = draw_gnp(engine, n2, r.p);
      try {
        const FormulaResult fr = dims_kr_plus_h(kr, h);
        const Graph product = join(complete_graph(kr), h);
        const int oracle = dims_exact(product).value;
        return make_pair(fr.theorem_id, "r", kr, n2, nullptr, h, product, fr.value, oracle);
      } catch (const hypothesis_error&) {
        return std::nullopt;
      }
    }
    case Driver::spectral_clique: {
      const int n = rng::between(engine, r.left_min, r.left_max);
      const Graph g = draw_connected(engine, n, r.p);
      if (is_complete(g)) return std::nullopt;
      const double bound = spectral_clique_upper_bound(g);
      const int omega = clique_number(g).value;
      return make_single("spectral-clique", n, g, bound, omega,
                         static_cast<double>(omega) > bound + kCliqueBoundSlack);
    }
    case Driver::spectral_dims: {
      const int n = rng::between(engine, r.left_min, r.left_max);
      const Graph g = draw_connected(engine, n, r.p);
      if (profile(g).diameter != 2) return std::nullopt;
      const int bound = spectral_dims_lower_bound(g);
      const int oracle = dims_exact(g).value;
      return make_single("spectral-dims", n, g, bound, oracle, bound > oracle);
    }
    case Driver::selftest: {
      const int n = rng::between(engine, r.left_min, r.left_max);
      const Graph g = draw_connected(engine, n, r.p);
      const int oracle = dims_exact(g).value;
      return make_single(kSelftestTag, n, g, oracle + 1, oracle, true);
    }
  }
  return std::nullopt;
}

void validate_ranges(Driver driver, const TrialRanges& r) {
  auto fail = [](const std::string& why) {
    throw std::invalid_argument("verify: " + why);
  };
  if (r.left_min < 1 || r.left_min > r.left_max || r.right_min < 1 ||
      r.right_min > r.right_max)
    fail("order ranges must be nonempty and start at 1 or above");
  if (r.p < 0.0 || r.p > 1.0) fail("p must lie in [0,1]");
  const long long lmax = r.left_max;
  const long long rmax = r.right_max;
  const std::string cap = " exceeds the exact-solver cap";
  switch (driver) {
    case Driver::diam2_varpi:
    case Driver::diam2_omega:
    case Driver::spectral_dims:
    case Driver::selftest:
      if (lmax > kStrongDimOrderCap) fail("graph order" + cap);
      break;
    case Driver::spectral_clique:
      if (lmax > kCliqueOrderCap) fail("graph order" + cap);
      break;
    case Driver::join_varpi:
      if (lmax + rmax > kCliqueOrderCap) fail("join order" + cap);
      break;
    case Driver::join_dims:
    case Driver::kr_plus_h:
      if (lmax + rmax > kStrongDimOrderCap) fail("join order" + cap);
      break;
    case Driver::corona_reduction:
    case Driver::corona_formula:
    case Driver::corona_triangle_free:
    case Driver::corona_relations:
      if (lmax * (1 + rmax) > kStrongDimOrderCap) fail("corona order" + cap);
      break;
  }
  if ((driver == Driver::diam2_varpi || driver == Driver::diam2_omega ||
       driver == Driver::join_varpi || driver == Driver::join_dims) &&
      r.p == 0.0)
    fail("p must be positive for connected factors");
}

std::string format_number(double x) {
  if (x == std::floor(x) && std::abs(x) < 9e15) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(x));
    return buf;
  }
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

nlohmann::ordered_json number_json(double x) {
  if (x == std::floor(x) && std::abs(x) < 9e15)
    return nlohmann::ordered_json(static_cast<long long>(x));
  return nlohmann::ordered_json(x);
}

}  // namespace

const std::vector<std::string>& known_theorem_tags() {
  static const std::vector<std::string> tags = {
      "twin-clique-diam2",
      "join-varpi", "join-varpi-i", "join-varpi-ii",
      "join-dims", "join-dims-i", "join-dims-ii", "join-dims-iii",
      "corona-reduction",
      "corona-dims", "corona-dims-i", "corona-dims-ii", "corona-k1",
      "corona-triangle-free",
      "relations", "relations-i", "relations-ii", "relations-iii",
      "kr-plus-h", "kr-plus-h-i", "kr-plus-h-ii", "kr-plus-h-iii",
      "diam2-omega", "diam2-omega-twins",
      "spectral-clique", "spectral-dims",
  };
  return tags;
}

bool is_known_theorem(const std::string& theorem_id) {
  return driver_for(theorem_id).has_value();
}

TrialRanges default_trial_ranges(const std::string& theorem_id) {
  const auto driver = driver_for(theorem_id);
  if (!driver) throw std::invalid_argument("verify: unknown theorem tag " + theorem_id);
  switch (*driver) {
    case Driver::diam2_varpi:
    case Driver::diam2_omega: return {4, 9, 1, 1, 0.5};
    case Driver::join_varpi:
    case Driver::join_dims: return {2, 6, 2, 6, 0.5};
    case Driver::corona_reduction: return {1, 3, 1, 3, 0.5};
    case Driver::corona_formula:
      return theorem_id == "corona-k1" ? TrialRanges{2, 9, 1, 1, 0.5}
                                       : TrialRanges{1, 4, 1, 3, 0.5};
    case Driver::corona_triangle_free: return {1, 3, 3, 4, 0.35};
    case Driver::corona_relations: return {1, 3, 2, 4, 0.45};
    case Driver::kr_plus_h: return {1, 3, 2, 6, 0.45};
    case Driver::spectral_clique: return {4, 12, 1, 1, 0.5};
    case Driver::spectral_dims: return {4, 10, 1, 1, 0.5};
    case Driver::selftest: return {3, 6, 1, 1, 0.5};
  }
  throw std::logic_error("unhandled driver");
}

VerificationReport verify_theorem(const std::string& theorem_id, const TrialRanges& ranges,
                                  int trials, std::uint64_t seed) {
  const auto driver = driver_for(theorem_id);
  if (!driver) throw std::invalid_argument("verify: unknown theorem tag " + theorem_id);
  if (trials < 0) throw std::invalid_argument("verify: trials must be nonnegative");
  validate_ranges(*driver, ranges);

  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.theorem_id = theorem_id;
  report.ranges = ranges;
  report.seed = seed;
  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937_64 engine(rng::substream(seed, static_cast<std::uint64_t>(trial)));
    ++report.trials_attempted;
    const auto outcome = run_trial(*driver, ranges, engine);
    if (!outcome || !tag_matches(theorem_id, outcome->case_id)) continue;
    ++report.trials_applicable;
    if (outcome->failed) {
      ++report.failures;
      report.counterexamples.push_back(
          {trial, outcome->case_id, outcome->params, outcome->graphs, outcome->expected,
           outcome->oracle});
    }
  }
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport verify_theorem(const std::string& theorem_id, int trials, std::uint64_t seed) {
  return verify_theorem(theorem_id, default_trial_ranges(theorem_id), trials, seed);
}

std::pair<double, double> replay_counterexample(const Counterexample& ce) {
  auto graph_labeled = [&](const char* label) -> Graph {
    for (const auto& [name, text] : ce.graphs)
      if (name == label) return graph_from_text(text);
    throw std::invalid_argument("replay: counterexample lacks graph \"" + std::string(label) +
                                "\"");
  };
  auto param = [&](const char* name) -> long long {
    for (const auto& [key, value] : ce.params)
      if (key == name) return value;
    throw std::invalid_argument("replay: counterexample lacks param \"" + std::string(name) +
                                "\"");
  };
  const std::string& id = ce.case_id;
  if (id == "twin-clique-diam2") {
    const Graph g = graph_labeled("graph");
    return {dims_diameter_two(g).value, dims_exact(g).value};
  }
  if (id == "diam2-omega" || id == "diam2-omega-twins") {
    const Graph g = graph_labeled("graph");
    return {dims_diameter_two_omega(g).value, dims_exact(g).value};
  }
  if (id.rfind("join-varpi", 0) == 0) {
    const Graph g = graph_labeled("left");
    const Graph h = graph_labeled("right");
    return {varpi_join(g, h).value, twin_free_clique_number(join(g, h)).value};
  }
  if (id.rfind("join-dims", 0) == 0) {
    const Graph g = graph_labeled("left");
    const Graph h = graph_labeled("right");
    return {dims_join(g, h).value, dims_exact(join(g, h)).value};
  }
  if (id == "corona-reduction") {
    const Graph g = graph_labeled("left");
    const Graph h = graph_labeled("right");
    return {dims_exact(corona_reduction_graph(g, h)).value, dims_exact(corona(g, h)).value};
  }
  if (id.rfind("corona-dims", 0) == 0 || id == "corona-k1") {
    const Graph g = graph_labeled("left");
    const Graph h = graph_labeled("right");
    return {dims_corona(g, h).value, dims_exact(corona(g, h)).value};
  }
  if (id == "corona-triangle-free") {
    const Graph g = graph_labeled("left");
    const Graph h = graph_labeled("right");
    return {dims_corona_triangle_free(g, h).value, dims_exact(corona(g, h)).value};
  }
  if (id.rfind("relations", 0) == 0) {
    const Graph g = graph_labeled("left");
    const Graph h = graph_labeled("right");
    return {dims_corona_relations(g, h).value, dims_exact(corona(g, h)).value};
  }
  if (id.rfind("kr-plus-h", 0) == 0) {
    const Graph h = graph_labeled("right");
    const int kr = static_cast<int>(param("r"));
    return {dims_kr_plus_h(kr, h).value, dims_exact(join(complete_graph(kr), h)).value};
  }
  if (id == "spectral-clique") {
    const Graph g = graph_labeled("graph");
    return {spectral_clique_upper_bound(g), clique_number(g).value};
  }
  if (id == "spectral-dims") {
    const Graph g = graph_labeled("graph");
    return {spectral_dims_lower_bound(g), dims_exact(g).value};
  }
  if (id == kSelftestTag) {
    const Graph g = graph_labeled("graph");
    const int oracle = dims_exact(g).value;
    return {oracle + 1, oracle};
  }
  throw std::invalid_argument("replay: unknown case id " + id);
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["theorem_id"] = report.theorem_id;
  j["family"] = {{"family", "gnp-random-connected"},
                 {"left_min", report.ranges.left_min},
                 {"left_max", report.ranges.left_max},
                 {"right_min", report.ranges.right_min},
                 {"right_max", report.ranges.right_max},
                 {"p", report.ranges.p}};
  j["seed"] = report.seed;
  j["trials_attempted"] = report.trials_attempted;
  j["trials_applicable"] = report.trials_applicable;
  j["failures"] = report.failures;
  nlohmann::ordered_json ces = nlohmann::ordered_json::array();
  for (const auto& ce : report.counterexamples) {
    nlohmann::ordered_json c;
    c["trial"] = ce.trial;
    c["case_id"] = ce.case_id;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [name, value] : ce.params) params[name] = value;
    c["params"] = params;
    nlohmann::ordered_json graphs = nlohmann::ordered_json::object();
    for (const auto& [name, text] : ce.graphs) graphs[name] = text;
    c["graphs"] = graphs;
    c["expected"] = number_json(ce.expected);
    c["oracle"] = number_json(ce.oracle);
    ces.push_back(std::move(c));
  }
  j["counterexamples"] = std::move(ces);
  return j.dump(2) + "\n";
}

void report_to_text(std::ostream& out, const VerificationReport& report) {
  out << "theorem_id: " << report.theorem_id << '\n'
      << "family: gnp-random-connected left=[" << report.ranges.left_min << ','
      << report.ranges.left_max << "] right=[" << report.ranges.right_min << ','
      << report.ranges.right_max << "] p=" << format_number(report.ranges.p) << '\n'
      << "seed: " << report.seed << '\n'
      << "trials_attempted: " << report.trials_attempted << '\n'
      << "trials_applicable: " << report.trials_applicable << '\n'
      << "failures: " << report.failures << '\n';
  for (const auto& ce : report.counterexamples) {
    out << "counterexample trial=" << ce.trial << " case=" << ce.case_id
        << " expected=" << format_number(ce.expected) << " oracle=" << format_number(ce.oracle)
        << '\n';
    for (const auto& [name, value] : ce.params) out << "  param " << name << '=' << value << '\n';
    for (const auto& [name, text] : ce.graphs) {
      out << "  graph " << name << ":\n";
      std::size_t pos = 0;
      while (pos < text.size()) {
        const std::size_t next = text.find('\n', pos);
        out << "    " << text.substr(pos, next == std::string::npos ? next : next - pos) << '\n';
        if (next == std::string::npos) break;
        pos = next + 1;
      }
    }
  }
  out << "result: " << (report.failures == 0 ? "VERIFIED" : "FAILED") << '\n';
}

}  // namespace smd
