#pragma once

#include <vector>

#include "strongdim/graph.hpp"

namespace smd {

/// Graph on the source vertex set whose edges are exactly the mutually
/// maximally distant pairs of the source graph.
struct MMDGraph {
  Graph graph;
};

/// True iff v lies on some shortest u-w path, i.e. d(u,v)+d(v,w) = d(u,w).
/// Throws std::invalid_argument when u and w are unreachable from each other.
bool in_interval(const DistanceMatrix& d, int u, int v, int w);

/// True iff w strongly resolves the pair (u, v): v lies on a shortest u-w
/// path or u lies on a shortest v-w path.
bool strongly_resolves(const DistanceMatrix& d, int w, int u, int v);

/// True iff every pair of distinct vertices has a strongly resolving witness
/// in s. Requires a connected graph.
bool is_strong_resolving_set(const Graph& g, const std::vector<int>& s);

/// True iff u is maximally distant from v: no neighbor of u is farther from
/// v than u is.
bool is_maximally_distant(const DistanceMatrix& d, const Graph& g, int u, int v);

/// Edges = pairs that are maximally distant from each other. Requires a
/// connected graph.
MMDGraph mmd_graph(const Graph& g);

}  // namespace smd
