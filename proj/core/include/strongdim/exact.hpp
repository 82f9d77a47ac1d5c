#pragma once

#include <vector>

#include "strongdim/graph.hpp"

namespace smd {

/// Desk-scale caps for the exponential-time solvers.
inline constexpr int kStrongDimOrderCap = 20;
inline constexpr int kCliqueOrderCap = 32;

/// An invariant value together with a set of vertices attaining it. All
/// solvers below tie-break deterministically: the witness is the
/// lexicographically least optimal set, matching enumeration of subsets by
/// cardinality and then lexicographic order.
struct WitnessedValue {
  int value = 0;
  std::vector<int> witness;
};

/// Exact strong metric dimension by exhaustive search over vertex subsets of
/// increasing cardinality. Requires a connected graph with
/// 1 <= order <= kStrongDimOrderCap. The single-vertex graph has dimension 0
/// with an empty witness.
WitnessedValue dims_exact(const Graph& g);

/// Maximum cardinality of a clique whose members have pairwise distinct
/// closed neighborhoods. The graph may be disconnected; it must be nonempty
/// and within kCliqueOrderCap.
WitnessedValue twin_free_clique_number(const Graph& g);

/// Maximum clique size. Nonempty graph within kCliqueOrderCap.
WitnessedValue clique_number(const Graph& g);

/// Minimum set of vertices meeting every edge. Any order within
/// kCliqueOrderCap, including 0.
WitnessedValue min_vertex_cover(const Graph& g);

/// Every strong resolving set must contain an endpoint of each mutually
/// maximally distant pair, so a minimum vertex cover of the MMD graph bounds
/// the strong metric dimension from below. Requires a connected graph.
int dims_mmd_lower_bound(const Graph& g);

}  // namespace smd
