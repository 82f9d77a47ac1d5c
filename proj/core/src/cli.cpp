#include "strongdim/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "strongdim/exact.hpp"
#include "strongdim/families.hpp"
#include "strongdim/graph_io.hpp"
#include "strongdim/metric.hpp"
#include "strongdim/spectral.hpp"
#include "strongdim/verify.hpp"

namespace smd {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInputError = 2;

std::string format_mu(double mu) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", mu);
  return buf;
}

Graph load(const std::string& path) {
  try {
    return read_graph_file(path);
  } catch (const parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

int run_compute(const std::string& input, const std::string& invariant,
                const std::string& format, std::ostream& out) {
  const Graph g = load(input);
  const bool as_json = format == "json";
  nlohmann::ordered_json j;
  j["invariant"] = invariant;
  if (invariant == "dims") {
    const int value = dims_exact(g).value;
    if (as_json) j["value"] = value; else out << "dims=" << value << '\n';
  } else if (invariant == "varpi") {
    const int value = twin_free_clique_number(g).value;
    if (as_json) j["value"] = value; else out << "varpi=" << value << '\n';
  } else if (invariant == "omega") {
    const int value = clique_number(g).value;
    if (as_json) j["value"] = value; else out << "omega=" << value << '\n';
  } else if (invariant == "mu") {
    const double value = algebraic_connectivity(g, 1e-12);
    if (as_json) j["value"] = value; else out << "mu=" << format_mu(value) << '\n';
  } else if (invariant == "diameter") {
    const int value = profile(g).diameter;
    if (as_json) j["value"] = value; else out << "diameter=" << value << '\n';
  } else if (invariant == "mmd") {
    const Graph mmd = mmd_graph(g).graph;
    if (as_json) {
      auto edges = nlohmann::ordered_json::array();
      for (const auto& [u, v] : mmd.edges()) edges.push_back({u, v});
      j["edges"] = std::move(edges);
    } else {
      out << "mmd=" << mmd.edge_count() << '\n';
      for (const auto& [u, v] : mmd.edges()) out << u << ' ' << v << '\n';
    }
  } else {  // profile
    const GraphProfile p = profile(g);
    if (as_json) {
      j["connected"] = p.connected;
      j["diameter"] = p.diameter;
      j["max_degree"] = p.max_degree;
      j["universal_count"] = p.universal_count;
      auto twins = nlohmann::ordered_json::array();
      for (const auto& [u, v] : p.true_twin_pairs) twins.push_back({u, v});
      j["true_twin_pairs"] = std::move(twins);
    } else {
      out << "connected=" << (p.connected ? 1 : 0) << '\n'
          << "diameter=" << p.diameter << '\n'
          << "max_degree=" << p.max_degree << '\n'
          << "universal_count=" << p.universal_count << '\n'
          << "true_twin_pairs=" << p.true_twin_pairs.size() << '\n';
      for (const auto& [u, v] : p.true_twin_pairs) out << u << ' ' << v << '\n';
    }
  }
  if (as_json) out << j.dump(2) << '\n';
  return kExitOk;
}

int run_product(const std::string& op, const std::string& left, const std::string& right,
                const std::string& out_path) {
  const Graph g = load(left);
  const Graph h = load(right);
  Graph result;
  if (op == "corona") result = corona(g, h);
  else if (op == "join") result = join(g, h);
  else result = cartesian(g, h);
  write_graph_file(out_path, result);
  return kExitOk;
}

int run_gen(const std::string& family, int n, double p, std::uint64_t seed,
            const std::string& out_path) {
  const auto tag = parse_family(family);
  if (!tag) throw std::runtime_error("unknown family " + family);
  GraphFamilySpec spec;
  spec.family = *tag;
  spec.n = n;
  spec.p = p;
  spec.seed = seed;
  write_graph_file(out_path, generate(spec));
  return kExitOk;
}

int run_verify(const std::string& theorem, int trials, std::uint64_t seed, int max_n,
               const std::string& format, std::ostream& out) {
  if (!is_known_theorem(theorem))
    throw std::runtime_error("unknown theorem tag " + theorem);
  TrialRanges ranges = default_trial_ranges(theorem);
  if (max_n > 0) {
    ranges.left_max = std::min(ranges.left_max, max_n);
    ranges.right_max = std::min(ranges.right_max, max_n);
    ranges.left_min = std::min(ranges.left_min, ranges.left_max);
    ranges.right_min = std::min(ranges.right_min, ranges.right_max);
  }
  const VerificationReport report = verify_theorem(theorem, ranges, trials, seed);
  if (format == "json") out << report_to_json(report);
  else report_to_text(out, report);
  return report.failures == 0 ? kExitOk : kExitCounterexample;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"strong metric dimension toolkit", "strongdim"};
  app.require_subcommand(1);

  std::string input, invariant, format = "text";
  auto* compute = app.add_subcommand("compute", "compute an invariant of a graph file");
  compute->add_option("--input", input, "graph file")->required();
  compute->add_option("--invariant", invariant, "what to compute")
      ->required()
      ->check(CLI::IsMember({"dims", "varpi", "omega", "mu", "mmd", "diameter", "profile"}));
  compute->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string op, left, right, out_path;
  auto* product = app.add_subcommand("product", "write a product of two graph files");
  product->add_option("--op", op, "product operation")
      ->required()
      ->check(CLI::IsMember({"corona", "join", "cartesian"}));
  product->add_option("--left", left, "left factor file")->required();
  product->add_option("--right", right, "right factor file")->required();
  product->add_option("--out", out_path, "output file")->required();

  std::string family;
  int n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "write a generated family member");
  gen->add_option("--family", family, "family tag")->required();
  gen->add_option("--n", n, "order")->required();
  gen->add_option("--p", p, "edge probability (gnp-random-connected)");
  gen->add_option("--seed", seed, "prng seed");
  gen->add_option("--out", out_path, "output file")->required();

  std::string theorem;
  int trials = 0;
  int max_n = 0;
  auto* verify = app.add_subcommand("verify", "fuzz a theorem against the exact oracles");
  verify->add_option("--theorem", theorem, "theorem tag")->required();
  verify->add_option("--trials", trials, "number of seeded trials")->required();
  verify->add_option("--seed", seed, "prng seed")->required();
  verify->add_option("--max-n", max_n, "cap the drawn orders");
  verify->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (compute->parsed()) return run_compute(input, invariant, format, out);
    if (product->parsed()) return run_product(op, left, right, out_path);
    if (gen->parsed()) return run_gen(family, n, p, seed, out_path);
    return run_verify(theorem, trials, seed, max_n, format, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace smd
