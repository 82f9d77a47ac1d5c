#include "strongdim/metric.hpp"

#include <stdexcept>
#include <string>

namespace smd {

namespace {

void check_vertex(const DistanceMatrix& d, int v) {
  if (v < 0 || v >= d.order())
    throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
}

}  // namespace

bool in_interval(const DistanceMatrix& d, int u, int v, int w) {
  check_vertex(d, u);
  check_vertex(d, v);
  check_vertex(d, w);
  if (!d.reachable(u, w))
    throw std::invalid_argument("in_interval: endpoints " + std::to_string(u) + "," +
                                std::to_string(w) + " are unreachable");
  return d.at(u, v) + d.at(v, w) == d.at(u, w);
}

bool strongly_resolves(const DistanceMatrix& d, int w, int u, int v) {
  return in_interval(d, u, v, w) || in_interval(d, v, u, w);
}

bool is_strong_resolving_set(const Graph& g, const std::vector<int>& s) {
  const int n = g.order();
  for (int w : s)
    if (w < 0 || w >= n)
      throw std::invalid_argument("is_strong_resolving_set: witness id out of range");
  if (!is_connected(g))
    throw std::invalid_argument("is_strong_resolving_set: graph must be connected");
  DistanceMatrix d = all_pairs_distances(g);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool resolved = false;
      for (int w : s) {
        if (strongly_resolves(d, w, u, v)) {
          resolved = true;
          break;
        }
      }
      if (!resolved) return false;
    }
  }
  return true;
}

bool is_maximally_distant(const DistanceMatrix& d, const Graph& g, int u, int v) {
  check_vertex(d, u);
  check_vertex(d, v);
  if (!d.reachable(u, v))
    throw std::invalid_argument("is_maximally_distant: graph must be connected");
  const int duv = d.at(u, v);
  for (int w : g.neighbors(u))
    if (d.at(v, w) > duv) return false;
  return true;
}

MMDGraph mmd_graph(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("mmd_graph: graph must be connected");
  const int n = g.order();
  DistanceMatrix d = all_pairs_distances(g);
  MMDGraph out{Graph(n)};
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (is_maximally_distant(d, g, u, v) && is_maximally_distant(d, g, v, u))
        out.graph.add_edge(u, v);
  return out;
}

}  // namespace smd
