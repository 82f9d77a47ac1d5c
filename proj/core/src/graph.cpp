#include "strongdim/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace smd {

Graph::Graph(int order) {
  if (order < 0) throw std::invalid_argument("graph order must be nonnegative");
  adj_.resize(static_cast<std::size_t>(order));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order())
    throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range [0," +
                                std::to_string(order()) + ")");
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& a = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

int Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& a : adj_) best = std::max(best, a.size());
  return static_cast<int>(best);
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  auto& au = adj_[static_cast<std::size_t>(u)];
  auto pos = std::lower_bound(au.begin(), au.end(), v);
  if (pos != au.end() && *pos == v) return;  // duplicate collapses
  au.insert(pos, v);
  auto& av = adj_[static_cast<std::size_t>(v)];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++edge_count_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < order(); ++u)
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph build_graph(int order, const std::vector<Edge>& edges) {
  Graph g(order);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  DistanceMatrix d;
  d.n_ = n;
  d.d_.assign(static_cast<std::size_t>(n) * n, n);  // sentinel = n
  std::vector<int> queue_buf(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    int* row = d.d_.data() + static_cast<std::size_t>(s) * n;
    row[s] = 0;
    int head = 0, tail = 0;
    queue_buf[tail++] = s;
    while (head < tail) {
      int u = queue_buf[head++];
      for (int w : g.neighbors(u)) {
        if (row[w] == n) {
          row[w] = row[u] + 1;
          queue_buf[tail++] = w;
        }
      }
    }
  }
  return d;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        q.push(w);
      }
    }
  }
  return count == n;
}

GraphProfile profile(const Graph& g) {
  const int n = g.order();
  GraphProfile p;
  p.max_degree = g.max_degree();
  if (n == 0) {
    p.connected = true;
    return p;
  }
  DistanceMatrix d = all_pairs_distances(g);
  int diam = 0;
  bool connected = true;
  for (int u = 0; u < n && connected; ++u)
    for (int v = u + 1; v < n; ++v) {
      int duv = d.at(u, v);
      if (duv == d.sentinel()) {
        connected = false;
        break;
      }
      diam = std::max(diam, duv);
    }
  p.connected = connected;
  p.diameter = connected ? diam : d.sentinel();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) ++p.universal_count;
  // true twins: equal closed neighborhoods
  std::vector<std::vector<int>> closed(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    auto& c = closed[static_cast<std::size_t>(v)];
    c = g.neighbors(v);
    c.insert(std::lower_bound(c.begin(), c.end(), v), v);
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (closed[static_cast<std::size_t>(u)] == closed[static_cast<std::size_t>(v)])
        p.true_twin_pairs.emplace_back(u, v);
  return p;
}

Graph corona(const Graph& g, const Graph& h) {
  const int n1 = g.order();
  const int n2 = h.order();
  if (n1 == 0) throw std::invalid_argument("corona: left factor must be nonempty");
  Graph out(n1 + n1 * n2);
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  for (int i = 0; i < n1; ++i) {
    const int base = n1 + i * n2;
    for (const auto& [u, v] : h.edges()) out.add_edge(base + u, base + v);
    for (int u = 0; u < n2; ++u) out.add_edge(i, base + u);
  }
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  const int n1 = g.order();
  const int n2 = h.order();
  if (n1 == 0 || n2 == 0) throw std::invalid_argument("join: factors must be nonempty");
  Graph out(n1 + n2);
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  for (const auto& [u, v] : h.edges()) out.add_edge(n1 + u, n1 + v);
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n2; ++v) out.add_edge(u, n1 + v);
  return out;
}

Graph cartesian(const Graph& g, const Graph& h) {
  const int n1 = g.order();
  const int n2 = h.order();
  if (n1 == 0 || n2 == 0) throw std::invalid_argument("cartesian: factors must be nonempty");
  Graph out(n1 * n2);
  for (int a = 0; a < n1; ++a)
    for (const auto& [u, v] : h.edges()) out.add_edge(a * n2 + u, a * n2 + v);
  for (int b = 0; b < n2; ++b)
    for (const auto& [u, v] : g.edges()) out.add_edge(u * n2 + b, v * n2 + b);
  return out;
}

}  // namespace smd
