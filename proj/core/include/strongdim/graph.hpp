#pragma once

#include <utility>
#include <vector>

namespace smd {

/// Unordered vertex pair; canonical form is (min, max).
using Edge = std::pair<int, int>;

/// Finite simple undirected graph on vertex ids 0..n-1.
///
/// Invariants: no self-loops, adjacency is symmetric, neighbor lists are
/// sorted and duplicate-free. add_edge collapses duplicate edges silently
/// and rejects self-loops and out-of-range ids.
class Graph {
public:
  Graph() = default;
  explicit Graph(int order);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  long long edge_count() const noexcept { return edge_count_; }

  bool adjacent(int u, int v) const;
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  int max_degree() const noexcept;

  void add_edge(int u, int v);

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

private:
  void check_vertex(int v) const;

  std::vector<std::vector<int>> adj_;
  long long edge_count_ = 0;
};

/// Builds the simple graph with exactly the given edges. Duplicate pairs
/// collapse to one edge; self-loops and out-of-range ids throw
/// std::invalid_argument.
Graph build_graph(int order, const std::vector<Edge>& edges);

/// All-pairs shortest-path hop counts. Unreachable pairs carry the sentinel
/// value order(), which is strictly greater than any realizable distance in
/// a graph of that order.
class DistanceMatrix {
public:
  DistanceMatrix() = default;

  int order() const noexcept { return n_; }
  int sentinel() const noexcept { return n_; }

  int at(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  bool reachable(int u, int v) const { return at(u, v) < n_; }

private:
  friend DistanceMatrix all_pairs_distances(const Graph&);

  int n_ = 0;
  std::vector<int> d_;
};

/// BFS from every vertex; exact hop distances.
DistanceMatrix all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);

/// Summary facts used by the theorem dispatchers. diameter equals the
/// distance sentinel (the order) when the graph is disconnected.
/// universal_count is the number of vertices of degree n-1. True twins are
/// unordered pairs with equal closed neighborhoods, listed lexicographically.
struct GraphProfile {
  bool connected = false;
  int diameter = 0;
  int max_degree = 0;
  int universal_count = 0;
  std::vector<Edge> true_twin_pairs;
};

GraphProfile profile(const Graph& g);

/// Corona product: one copy of g plus one copy of h per vertex of g, every
/// vertex of copy i joined to vertex i of g. Fixed layout: g keeps ids
/// 0..n1-1 and copy i occupies n1+i*n2 .. n1+(i+1)*n2-1. g must be nonempty.
Graph corona(const Graph& g, const Graph& h);

/// Join: disjoint union plus all cross edges. g keeps ids 0..n1-1, h is
/// shifted to n1..n1+n2-1. Both factors must be nonempty.
Graph join(const Graph& g, const Graph& h);

/// Cartesian product; vertex (a, b) is flattened as a*n2+b. Both factors
/// must be nonempty.
Graph cartesian(const Graph& g, const Graph& h);

}  // namespace smd
