#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "strongdim/graph.hpp"

namespace smd {

/// One hypothesis actually evaluated by a formula dispatcher.
struct HypothesisCheck {
  std::string condition;
  bool holds = false;
};

/// A closed-form invariant value, the stable tag of the case that produced
/// it, and the hypothesis checks that were run. A FormulaResult is only ever
/// returned with every recorded hypothesis true; otherwise the operation
/// throws hypothesis_error carrying the trace.
struct FormulaResult {
  int value = 0;
  std::string theorem_id;
  std::vector<HypothesisCheck> trace;
};

class hypothesis_error : public std::runtime_error {
public:
  hypothesis_error(std::string theorem_id, std::vector<HypothesisCheck> trace);

  const std::string& theorem_id() const noexcept { return theorem_id_; }
  const std::vector<HypothesisCheck>& trace() const noexcept { return trace_; }

private:
  std::string theorem_id_;
  std::vector<HypothesisCheck> trace_;
};

// Stable theorem_id tags:
//   twin-clique-diam2, join-varpi-i, join-varpi-ii, join-dims-i/ii/iii,
//   corona-reduction, corona-dims-i/ii, corona-k1, corona-triangle-free,
//   relations-i/ii/iii, kr-plus-h-i/ii/iii, diam2-omega, diam2-omega-twins.

/// n - (twin-free clique number): an upper bound on the strong metric
/// dimension of any connected graph of order >= 2.
int dims_twin_clique_upper_bound(const Graph& h);

/// Exact strong metric dimension of a connected diameter-two graph:
/// n minus its twin-free clique number. Tag twin-clique-diam2.
FormulaResult dims_diameter_two(const Graph& h);

/// Twin-free clique number of a join of two connected graphs of order >= 2:
/// the sum of the factors' values, minus one when both factors have a
/// universal vertex. Tags join-varpi-i / join-varpi-ii.
FormulaResult varpi_join(const Graph& g, const Graph& h);

/// Strong metric dimension of a join of two connected graphs of order >= 2.
/// Case iii (both factors have a universal vertex): dims(g)+dims(h)+1.
/// Case ii (both diameter two, not case iii): dims(g)+dims(h), checked for
/// agreement against case i. Case i (otherwise): n1+n2-varpi(g)-varpi(h).
/// Factor dimensions come from the exhaustive solver.
FormulaResult dims_join(const Graph& g, const Graph& h);

/// The corona of g and h has the same strong metric dimension as a single
/// apex joined to order(g) disjoint copies of h. Fixed layout: apex 0, copy
/// i occupies 1+i*n2 .. 1+(i+1)*n2-1. g must be nonempty (only its order is
/// used).
Graph corona_reduction_graph(const Graph& g, const Graph& h);

/// Strong metric dimension of corona(g, h) for connected g. Tags:
/// corona-k1 (h = K1, n1 >= 2): n1-1; corona-dims-i (n1 = 1, h has a
/// universal vertex): n2+1-varpi(h); corona-dims-ii: n1*n2-varpi(h).
FormulaResult dims_corona(const Graph& g, const Graph& h);

/// Triangle-free specialization: n1*n2-2. Requires n2 >= 3, a triangle-free
/// h with at least one edge whose endpoints are not true twins, and
/// (n1 >= 2 or max_degree(h) <= n2-2). Tag corona-triangle-free.
FormulaResult dims_corona_triangle_free(const Graph& g, const Graph& h);

/// Strong metric dimension of corona(g, h) in terms of dimensions of small
/// graphs. Tags: relations-i (n1 = 1, h has a universal vertex): dims(h)+1;
/// relations-ii (h connected of diameter two, and n1 >= 2 or
/// max_degree(h) <= n2-2): (n1-1)*n2+dims(h); relations-iii (h disconnected
/// or diameter > 2): (n1-1)*n2+dims(apex+h).
FormulaResult dims_corona_relations(const Graph& g, const Graph& h);

/// Strong metric dimension of the join of a complete graph on r vertices
/// with h. Tags: kr-plus-h-i (h has a universal vertex): dims(h)+r;
/// kr-plus-h-ii (diameter two, no universal vertex): dims(h)+r-1;
/// kr-plus-h-iii (h disconnected or diameter > 2): dims(apex+h)+r-1.
FormulaResult dims_kr_plus_h(int r, const Graph& h);

/// Clique-number form for connected diameter-two graphs. Tag diam2-omega
/// (no true twins): n-omega(h); tag diam2-omega-twins (every true-twin pair
/// consists of universal vertices): n+c(h)-omega(h)-1.
FormulaResult dims_diameter_two_omega(const Graph& h);

/// Corona wrapper for the clique-number form, n1 >= 2: n1*n2-omega(h) when h
/// has no true twins, n1*n2+c(h)-1-omega(h) when the only true twins of h
/// are universal vertices. Same tags as dims_diameter_two_omega.
FormulaResult dims_corona_omega(const Graph& g, const Graph& h);

}  // namespace smd
