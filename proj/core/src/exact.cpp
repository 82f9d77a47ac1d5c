#include "strongdim/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "strongdim/metric.hpp"

namespace smd {

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

// Bits v..n-1.
Mask suffix_mask(int v, int n) {
  Mask all = (n == 64) ? ~Mask{0} : (bit(n) - 1);
  return all & ~(bit(v) - 1);
}

std::vector<int> mask_to_vertices(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

// Completes `chosen` with the `remaining` smallest unused vertices >= v.
// Only reachable when a feasible subset smaller than the current target
// cardinality exists, which the ascending-cardinality outer loops exclude;
// kept so the search is total.
bool pad_smallest(Mask& chosen, int v, int remaining, int n) {
  for (int u = v; u < n && remaining > 0; ++u) {
    if (!(chosen & bit(u))) {
      chosen |= bit(u);
      --remaining;
    }
  }
  return remaining == 0;
}

// Lexicographic DFS for an exact-size subset hitting every requirement mask.
// Vertices are taken in ascending order, so the first hit is the
// lexicographically least subset of that cardinality.
bool hitting_set_rec(int v, int remaining, Mask chosen, const std::vector<Mask>& requirements,
                     int n, Mask& out) {
  const Mask avail = suffix_mask(v, n);
  bool all_hit = true;
  for (Mask req : requirements) {
    if (req & chosen) continue;
    if (!(req & avail)) return false;  // nothing left can hit this requirement
    all_hit = false;
  }
  if (all_hit) {
    if (!pad_smallest(chosen, v, remaining, n)) return false;
    out = chosen;
    return true;
  }
  if (remaining == 0) return false;
  for (int u = v; u <= n - remaining; ++u)
    if (hitting_set_rec(u + 1, remaining - 1, chosen | bit(u), requirements, n, out)) return true;
  return false;
}

WitnessedValue min_hitting_set(const std::vector<Mask>& requirements, int n) {
  for (int k = 0; k <= n; ++k) {
    Mask out = 0;
    if (hitting_set_rec(0, k, 0, requirements, n, out)) return {k, mask_to_vertices(out)};
  }
  throw std::logic_error("min_hitting_set: unhittable requirement");
}

// Lexicographic max-clique DFS over adjacency masks. Cliques are enumerated
// as ascending vertex chains, i.e. in lexicographic order of their sorted
// vertex lists, and the incumbent is replaced only on strict improvement, so
// the final witness is the lexicographically least maximum clique.
struct CliqueSearch {
  int n;
  const std::vector<Mask>& adj;
  int best_size = 0;
  Mask best = 0;

  void expand(Mask clique, int size, Mask cand) {
    int rem = std::popcount(cand);
    while (cand) {
      if (size + rem <= best_size) return;
      const int v = std::countr_zero(cand);
      cand &= cand - 1;
      const Mask grown = clique | bit(v);
      if (size + 1 > best_size) {
        best_size = size + 1;
        best = grown;
      }
      const Mask next = cand & adj[static_cast<std::size_t>(v)];
      if (next) expand(grown, size + 1, next);
      --rem;
    }
  }
};

WitnessedValue max_clique_masks(const std::vector<Mask>& adj, int n) {
  CliqueSearch search{n, adj};
  search.expand(0, 0, suffix_mask(0, n));
  return {search.best_size, mask_to_vertices(search.best)};
}

std::vector<Mask> adjacency_masks(const Graph& g) {
  const int n = g.order();
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= bit(w);
  return adj;
}

void check_clique_scale(const Graph& g, const char* op) {
  if (g.order() < 1) throw std::invalid_argument(std::string(op) + ": graph must be nonempty");
  if (g.order() > kCliqueOrderCap)
    throw std::invalid_argument(std::string(op) + ": order exceeds cap " +
                                std::to_string(kCliqueOrderCap));
}

}  // namespace

WitnessedValue dims_exact(const Graph& g) {
  const int n = g.order();
  if (n < 1) throw std::invalid_argument("dims_exact: graph must be nonempty");
  if (n > kStrongDimOrderCap)
    throw std::invalid_argument("dims_exact: order exceeds cap " +
                                std::to_string(kStrongDimOrderCap));
  if (!is_connected(g)) throw std::invalid_argument("dims_exact: graph must be connected");
  if (n == 1) return {0, {}};

  const DistanceMatrix d = all_pairs_distances(g);
  std::vector<Mask> resolver;
  resolver.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      Mask m = 0;
      for (int w = 0; w < n; ++w)
        if (strongly_resolves(d, w, u, v)) m |= bit(w);
      resolver.push_back(m);
    }
  }
  std::sort(resolver.begin(), resolver.end());
  resolver.erase(std::unique(resolver.begin(), resolver.end()), resolver.end());
  // most constrained pairs first: cheap fail-fast, result unaffected
  std::stable_sort(resolver.begin(), resolver.end(),
                   [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
  return min_hitting_set(resolver, n);
}

WitnessedValue twin_free_clique_number(const Graph& g) {
  check_clique_scale(g, "twin_free_clique_number");
  const int n = g.order();
  std::vector<Mask> adj = adjacency_masks(g);
  std::vector<Mask> closed(adj);
  for (int v = 0; v < n; ++v) closed[static_cast<std::size_t>(v)] |= bit(v);
  // drop edges between true twins; twin-free cliques of g = cliques here
  std::vector<Mask> reduced(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if ((adj[static_cast<std::size_t>(u)] & bit(v)) &&
          closed[static_cast<std::size_t>(u)] != closed[static_cast<std::size_t>(v)]) {
        reduced[static_cast<std::size_t>(u)] |= bit(v);
        reduced[static_cast<std::size_t>(v)] |= bit(u);
      }
    }
  }
  return max_clique_masks(reduced, n);
}

WitnessedValue clique_number(const Graph& g) {
  check_clique_scale(g, "clique_number");
  return max_clique_masks(adjacency_masks(g), g.order());
}

WitnessedValue min_vertex_cover(const Graph& g) {
  const int n = g.order();
  if (n > kCliqueOrderCap)
    throw std::invalid_argument("min_vertex_cover: order exceeds cap " +
                                std::to_string(kCliqueOrderCap));
  std::vector<Mask> edge_masks;
  for (const auto& [u, v] : g.edges()) edge_masks.push_back(bit(u) | bit(v));
  return min_hitting_set(edge_masks, n);
}

int dims_mmd_lower_bound(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("dims_mmd_lower_bound: graph must be connected");
  return min_vertex_cover(mmd_graph(g).graph).value;
}

}  // namespace smd
