#include "strongdim/families.hpp"

#include <random>
#include <set>
#include <stdexcept>

#include "strongdim/rng.hpp"

namespace smd {

namespace {

constexpr int kGnpRejectionCap = 10000;

Graph make_path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph make_cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph make_complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph make_star(int n) {
  Graph g(n);
  for (int leaf = 1; leaf < n; ++leaf) g.add_edge(0, leaf);
  return g;
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph make_petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

// Uniform labeled tree from a random Pruefer sequence.
Graph make_random_tree(int n, std::uint64_t seed) {
  Graph g(n);
  if (n <= 1) return g;
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  std::mt19937_64 engine(seed);
  std::vector<int> seq(static_cast<std::size_t>(n - 2));
  for (auto& a : seq) a = static_cast<int>(rng::below(engine, static_cast<std::uint64_t>(n)));
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int a : seq) ++degree[static_cast<std::size_t>(a)];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
  for (int a : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    g.add_edge(leaf, a);
    if (--degree[static_cast<std::size_t>(a)] == 1) leaves.insert(a);
  }
  int u = *leaves.begin();
  int v = *std::next(leaves.begin());
  g.add_edge(u, v);
  return g;
}

Graph draw_gnp(int n, double p, std::mt19937_64& engine) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng::unit(engine) < p) g.add_edge(u, v);
  return g;
}

Graph make_gnp_connected(int n, double p, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  for (int attempt = 0; attempt < kGnpRejectionCap; ++attempt) {
    Graph g = draw_gnp(n, p, engine);
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("gnp-random-connected: no connected draw within " +
                           std::to_string(kGnpRejectionCap) + " attempts (n=" +
                           std::to_string(n) + ", p=" + std::to_string(p) + ")");
}

void validate(const GraphFamilySpec& spec) {
  const int n = spec.n;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument(family_name(spec.family) + ": " + why);
  };
  switch (spec.family) {
    case GraphFamily::empty:
      if (n < 0) fail("n must be >= 0");
      break;
    case GraphFamily::cycle:
      if (n < 3) fail("n must be >= 3");
      break;
    case GraphFamily::petersen:
      if (n != 10) fail("n must be 10");
      break;
    case GraphFamily::gnp_random_connected:
      if (n < 1) fail("n must be >= 1");
      if (spec.p < 0.0 || spec.p > 1.0) fail("p must lie in [0,1]");
      if (spec.p == 0.0 && n >= 2) fail("connectivity unreachable with p=0");
      break;
    default:
      if (n < 1) fail("n must be >= 1");
      break;
  }
}

}  // namespace

Graph generate(const GraphFamilySpec& spec) {
  validate(spec);
  switch (spec.family) {
    case GraphFamily::path: return make_path(spec.n);
    case GraphFamily::cycle: return make_cycle(spec.n);
    case GraphFamily::complete: return make_complete(spec.n);
    case GraphFamily::star: return make_star(spec.n);
    case GraphFamily::empty: return Graph(spec.n);
    case GraphFamily::petersen: return make_petersen();
    case GraphFamily::tree_random: return make_random_tree(spec.n, spec.seed);
    case GraphFamily::gnp_random_connected:
      return make_gnp_connected(spec.n, spec.p, spec.seed);
  }
  throw std::logic_error("unhandled graph family");
}

std::optional<GraphFamily> parse_family(std::string_view name) {
  if (name == "path") return GraphFamily::path;
  if (name == "cycle") return GraphFamily::cycle;
  if (name == "complete") return GraphFamily::complete;
  if (name == "star") return GraphFamily::star;
  if (name == "empty") return GraphFamily::empty;
  if (name == "petersen") return GraphFamily::petersen;
  if (name == "tree-random") return GraphFamily::tree_random;
  if (name == "gnp-random-connected") return GraphFamily::gnp_random_connected;
  return std::nullopt;
}

std::string family_name(GraphFamily family) {
  switch (family) {
    case GraphFamily::path: return "path";
    case GraphFamily::cycle: return "cycle";
    case GraphFamily::complete: return "complete";
    case GraphFamily::star: return "star";
    case GraphFamily::empty: return "empty";
    case GraphFamily::petersen: return "petersen";
    case GraphFamily::tree_random: return "tree-random";
    case GraphFamily::gnp_random_connected: return "gnp-random-connected";
  }
  return "?";
}

}  // namespace smd
