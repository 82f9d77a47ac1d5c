#include "strongdim/closed_forms.hpp"

#include <algorithm>
#include <sstream>

#include "strongdim/exact.hpp"

namespace smd {

namespace {

std::string describe(const std::vector<HypothesisCheck>& trace) {
  std::ostringstream ss;
  for (const auto& c : trace) ss << (c.holds ? " [ok] " : " [FAILED] ") << c.condition << ";";
  return ss.str();
}

// Accumulates the hypothesis checks a dispatcher actually ran. accept()
// refuses to produce a value while any recorded check is false.
class Trace {
public:
  bool require(std::string condition, bool holds) {
    checks_.push_back({std::move(condition), holds});
    ok_ = ok_ && holds;
    return holds;
  }

  bool ok() const noexcept { return ok_; }

  [[noreturn]] void reject(const std::string& theorem_id) const {
    throw hypothesis_error(theorem_id, checks_);
  }

  FormulaResult accept(std::string theorem_id, int value) const {
    if (!ok_) reject(theorem_id);
    return {value, std::move(theorem_id), checks_};
  }

private:
  std::vector<HypothesisCheck> checks_;
  bool ok_ = true;
};

bool has_triangle(const Graph& g) {
  for (const auto& [u, v] : g.edges()) {
    const auto& nu = g.neighbors(u);
    for (int w : g.neighbors(v))
      if (w != u && std::binary_search(nu.begin(), nu.end(), w)) return true;
  }
  return false;
}

// A triangle-free graph has twin-free clique number 2 exactly when some edge
// has distinguishable endpoints; in a disjoint union of K2 and K1 components
// every edge is a true-twin pair.
bool has_non_twin_edge(const Graph& g) {
  for (const auto& [u, v] : g.edges())
    if (g.degree(u) != 1 || g.degree(v) != 1) return true;
  return false;
}

bool only_universal_twins(const Graph& g, const GraphProfile& p) {
  const int n = g.order();
  for (const auto& [u, v] : p.true_twin_pairs)
    if (g.degree(u) != n - 1 || g.degree(v) != n - 1) return false;
  return true;
}

Graph single_vertex() { return Graph(1); }

}  // namespace

hypothesis_error::hypothesis_error(std::string theorem_id, std::vector<HypothesisCheck> trace)
    : std::runtime_error("hypotheses of " + theorem_id + " not met:" + describe(trace)),
      theorem_id_(std::move(theorem_id)),
      trace_(std::move(trace)) {}

int dims_twin_clique_upper_bound(const Graph& h) {
  if (h.order() < 2 || !is_connected(h))
    throw std::invalid_argument(
        "dims_twin_clique_upper_bound: needs a connected graph of order >= 2");
  return h.order() - twin_free_clique_number(h).value;
}

FormulaResult dims_diameter_two(const Graph& h) {
  const GraphProfile p = profile(h);
  Trace t;
  t.require("H connected", h.order() > 0 && p.connected);
  t.require("order(H) >= 2", h.order() >= 2);
  t.require("diameter(H) == 2", p.connected && p.diameter == 2);
  if (!t.ok()) t.reject("twin-clique-diam2");
  return t.accept("twin-clique-diam2", h.order() - twin_free_clique_number(h).value);
}

FormulaResult varpi_join(const Graph& g, const Graph& h) {
  const int n1 = g.order();
  const int n2 = h.order();
  Trace t;
  t.require("G connected", n1 > 0 && is_connected(g));
  t.require("H connected", n2 > 0 && is_connected(h));
  t.require("order(G) >= 2", n1 >= 2);
  t.require("order(H) >= 2", n2 >= 2);
  if (!t.ok()) t.reject("join-varpi");
  const bool uni1 = g.max_degree() == n1 - 1;
  const bool uni2 = h.max_degree() == n2 - 1;
  const int sum = twin_free_clique_number(g).value + twin_free_clique_number(h).value;
  if (uni1 && uni2) {
    t.require("both factors have a universal vertex", true);
    return t.accept("join-varpi-ii", sum - 1);
  }
  t.require("some factor has no universal vertex", true);
  return t.accept("join-varpi-i", sum);
}

FormulaResult dims_join(const Graph& g, const Graph& h) {
  const GraphProfile pg = profile(g);
  const GraphProfile ph = profile(h);
  const int n1 = g.order();
  const int n2 = h.order();
  Trace t;
  t.require("G connected", n1 > 0 && pg.connected);
  t.require("H connected", n2 > 0 && ph.connected);
  t.require("order(G) >= 2", n1 >= 2);
  t.require("order(H) >= 2", n2 >= 2);
  if (!t.ok()) t.reject("join-dims");
  const bool uni1 = pg.max_degree == n1 - 1;
  const bool uni2 = ph.max_degree == n2 - 1;
  if (uni1 && uni2) {
    t.require("both factors have a universal vertex", true);
    return t.accept("join-dims-iii", dims_exact(g).value + dims_exact(h).value + 1);
  }
  if (pg.diameter == 2 && ph.diameter == 2) {
    t.require("both factors have diameter two", true);
    t.require("some factor has no universal vertex", true);
    const int via_dims = dims_exact(g).value + dims_exact(h).value;
    const int via_varpi =
        n1 + n2 - twin_free_clique_number(g).value - twin_free_clique_number(h).value;
    // cases ii and i overlap here; a disagreement would be a solver defect
    if (via_dims != via_varpi)
      throw std::logic_error("dims_join: overlapping cases disagree (" +
                             std::to_string(via_dims) + " vs " + std::to_string(via_varpi) + ")");
    return t.accept("join-dims-ii", via_dims);
  }
  t.require("some factor has no universal vertex", true);
  return t.accept("join-dims-i", n1 + n2 - twin_free_clique_number(g).value -
                                     twin_free_clique_number(h).value);
}

Graph corona_reduction_graph(const Graph& g, const Graph& h) {
  const int n1 = g.order();
  const int n2 = h.order();
  if (n1 == 0) throw std::invalid_argument("corona_reduction_graph: left factor must be nonempty");
  Graph out(1 + n1 * n2);
  for (int i = 0; i < n1; ++i) {
    const int base = 1 + i * n2;
    for (const auto& [u, v] : h.edges()) out.add_edge(base + u, base + v);
    for (int u = 0; u < n2; ++u) out.add_edge(0, base + u);
  }
  return out;
}

FormulaResult dims_corona(const Graph& g, const Graph& h) {
  const int n1 = g.order();
  const int n2 = h.order();
  Trace t;
  t.require("G connected", n1 > 0 && is_connected(g));
  t.require("order(H) >= 1", n2 >= 1);
  if (!t.ok()) t.reject("corona-dims");
  if (n2 == 1 && n1 >= 2) {
    t.require("H is the trivial graph and order(G) >= 2", true);
    return t.accept("corona-k1", n1 - 1);
  }
  const int delta = h.max_degree();
  if (n1 == 1 && delta == n2 - 1) {
    t.require("order(G) == 1 and H has a universal vertex", true);
    return t.accept("corona-dims-i", n2 + 1 - twin_free_clique_number(h).value);
  }
  t.require("max_degree(H) <= order(H)-2 or order(G) >= 2", delta <= n2 - 2 || n1 >= 2);
  return t.accept("corona-dims-ii", n1 * n2 - twin_free_clique_number(h).value);
}

FormulaResult dims_corona_triangle_free(const Graph& g, const Graph& h) {
  const int n1 = g.order();
  const int n2 = h.order();
  Trace t;
  t.require("G connected", n1 > 0 && is_connected(g));
  t.require("order(H) >= 3", n2 >= 3);
  t.require("H triangle-free", !has_triangle(h));
  t.require("H has an edge with distinguishable endpoints", has_non_twin_edge(h));
  t.require("order(G) >= 2 or max_degree(H) <= order(H)-2",
            n1 >= 2 || h.max_degree() <= n2 - 2);
  return t.accept("corona-triangle-free", n1 * n2 - 2);
}

FormulaResult dims_corona_relations(const Graph& g, const Graph& h) {
  const int n1 = g.order();
  const int n2 = h.order();
  Trace t;
  t.require("G connected", n1 > 0 && is_connected(g));
  t.require("order(H) >= 1", n2 >= 1);
  if (!t.ok()) t.reject("relations");
  const GraphProfile ph = profile(h);
  if (n1 == 1 && ph.max_degree == n2 - 1) {
    t.require("order(G) == 1 and H has a universal vertex", true);
    return t.accept("relations-i", dims_exact(h).value + 1);
  }
  if (ph.connected && ph.diameter == 2 && (ph.max_degree <= n2 - 2 || n1 >= 2)) {
    t.require("H connected with diameter two", true);
    t.require("max_degree(H) <= order(H)-2 or order(G) >= 2", true);
    return t.accept("relations-ii", (n1 - 1) * n2 + dims_exact(h).value);
  }
  if (!ph.connected || ph.diameter > 2) {
    t.require("H disconnected or diameter(H) > 2", true);
    return t.accept("relations-iii",
                    (n1 - 1) * n2 + dims_exact(join(single_vertex(), h)).value);
  }
  t.require("some case applies", false);
  t.reject("relations");
}

FormulaResult dims_kr_plus_h(int r, const Graph& h) {
  const int n2 = h.order();
  Trace t;
  t.require("r >= 1", r >= 1);
  t.require("order(H) >= 1", n2 >= 1);
  if (!t.ok()) t.reject("kr-plus-h");
  const GraphProfile ph = profile(h);
  if (ph.max_degree == n2 - 1) {
    t.require("H has a universal vertex", true);
    return t.accept("kr-plus-h-i", dims_exact(h).value + r);
  }
  if (ph.connected && ph.diameter == 2) {
    t.require("H connected with diameter two and no universal vertex", true);
    return t.accept("kr-plus-h-ii", dims_exact(h).value + r - 1);
  }
  if (!ph.connected || ph.diameter > 2) {
    t.require("H disconnected or diameter(H) > 2", true);
    return t.accept("kr-plus-h-iii", dims_exact(join(single_vertex(), h)).value + r - 1);
  }
  t.require("some case applies", false);
  t.reject("kr-plus-h");
}

FormulaResult dims_diameter_two_omega(const Graph& h) {
  const GraphProfile p = profile(h);
  const int n = h.order();
  Trace t;
  t.require("H connected", n > 0 && p.connected);
  t.require("diameter(H) == 2", p.connected && p.diameter == 2);
  if (!t.ok()) t.reject("diam2-omega");
  const int omega = clique_number(h).value;
  if (p.true_twin_pairs.empty()) {
    t.require("H has no true twins", true);
    return t.accept("diam2-omega", n - omega);
  }
  t.require("every true-twin pair of H consists of universal vertices",
            only_universal_twins(h, p));
  return t.accept("diam2-omega-twins", n + p.universal_count - omega - 1);
}

FormulaResult dims_corona_omega(const Graph& g, const Graph& h) {
  const int n1 = g.order();
  const int n2 = h.order();
  const GraphProfile ph = profile(h);
  Trace t;
  t.require("G connected", n1 > 0 && is_connected(g));
  t.require("order(G) >= 2", n1 >= 2);
  t.require("H connected", n2 > 0 && ph.connected);
  t.require("diameter(H) == 2", ph.connected && ph.diameter == 2);
  if (!t.ok()) t.reject("diam2-omega");
  const int omega = clique_number(h).value;
  if (ph.true_twin_pairs.empty()) {
    t.require("H has no true twins", true);
    return t.accept("diam2-omega", n1 * n2 - omega);
  }
  t.require("every true-twin pair of H consists of universal vertices",
            only_universal_twins(h, ph));
  return t.accept("diam2-omega-twins", n1 * n2 + ph.universal_count - 1 - omega);
}

}  // namespace smd
