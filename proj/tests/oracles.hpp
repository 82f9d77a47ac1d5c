#pragma once

// Test-side reference implementations, kept deliberately independent of the
// library: Floyd-Warshall distances instead of BFS, and plain subset scans
// instead of the pruned searches. Usable up to n of about 12.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "strongdim/graph.hpp"

namespace oracle {

constexpr long long kFar = 1'000'000;

inline std::vector<std::vector<long long>> floyd_distances(const smd::Graph& g) {
  const int n = g.order();
  std::vector<std::vector<long long>> d(n, std::vector<long long>(n, kFar));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline std::vector<int> bits_of(std::uint32_t mask) {
  std::vector<int> out;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) out.push_back(v);
  return out;
}

inline bool resolves(const std::vector<std::vector<long long>>& d, int w, int u, int v) {
  return d[u][v] + d[v][w] == d[u][w] || d[v][u] + d[u][w] == d[v][w];
}

inline bool is_strong_resolving(const smd::Graph& g,
                                const std::vector<std::vector<long long>>& d,
                                std::uint32_t mask) {
  const int n = g.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool ok = false;
      for (int w = 0; w < n && !ok; ++w)
        if ((mask >> w) & 1) ok = resolves(d, w, u, v);
      if (!ok) return false;
    }
  return true;
}

struct Best {
  bool have = false;
  std::vector<int> witness;

  // smaller set wins; lexicographically smaller vertex list breaks ties
  void offer_min(const std::vector<int>& s) {
    if (!have || s.size() < witness.size() ||
        (s.size() == witness.size() && s < witness)) {
      witness = s;
      have = true;
    }
  }

  void offer_max(const std::vector<int>& s) {
    if (!have || s.size() > witness.size() ||
        (s.size() == witness.size() && s < witness)) {
      witness = s;
      have = true;
    }
  }
};

/// Minimum strong resolving set by scanning all 2^n subsets.
inline std::pair<int, std::vector<int>> dims(const smd::Graph& g) {
  const int n = g.order();
  const auto d = floyd_distances(g);
  Best best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    if (is_strong_resolving(g, d, mask)) best.offer_min(bits_of(mask));
  return {static_cast<int>(best.witness.size()), best.witness};
}

inline bool is_clique(const smd::Graph& g, const std::vector<int>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

inline std::vector<int> closed_neighborhood(const smd::Graph& g, int v) {
  std::vector<int> c = g.neighbors(v);
  c.insert(std::lower_bound(c.begin(), c.end(), v), v);
  return c;
}

inline bool is_twin_free(const smd::Graph& g, const std::vector<int>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (closed_neighborhood(g, s[i]) == closed_neighborhood(g, s[j])) return false;
  return true;
}

inline std::pair<int, std::vector<int>> omega(const smd::Graph& g) {
  const int n = g.order();
  Best best;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const auto s = bits_of(mask);
    if (is_clique(g, s)) best.offer_max(s);
  }
  return {static_cast<int>(best.witness.size()), best.witness};
}

inline std::pair<int, std::vector<int>> varpi(const smd::Graph& g) {
  const int n = g.order();
  Best best;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const auto s = bits_of(mask);
    if (is_clique(g, s) && is_twin_free(g, s)) best.offer_max(s);
  }
  return {static_cast<int>(best.witness.size()), best.witness};
}

inline std::pair<int, std::vector<int>> vertex_cover(const smd::Graph& g) {
  const int n = g.order();
  const auto edges = g.edges();
  Best best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool covers = true;
    for (const auto& [u, v] : edges)
      if (!((mask >> u) & 1) && !((mask >> v) & 1)) {
        covers = false;
        break;
      }
    if (covers) best.offer_min(bits_of(mask));
  }
  return {static_cast<int>(best.witness.size()), best.witness};
}

}  // namespace oracle
