#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "strongdim/graph.hpp"

namespace smd {

enum class GraphFamily {
  path,
  cycle,
  complete,
  star,
  empty,
  petersen,
  tree_random,
  gnp_random_connected,
};

/// Deterministic description of a generated graph. For the random families
/// the seed fully determines the output; repeated calls are byte-identical.
struct GraphFamilySpec {
  GraphFamily family = GraphFamily::path;
  int n = 1;
  double p = 0.0;         // edge probability, gnp-random-connected only
  std::uint64_t seed = 0; // tree-random and gnp-random-connected only
};

/// Generates the described graph. Throws std::invalid_argument on bad
/// parameters (cycle needs n>=3, petersen needs n==10, gnp needs p in [0,1]
/// and p>0 whenever n>=2). gnp-random-connected redraws from the seeded
/// stream until connected, up to 10000 rejections, then throws
/// std::runtime_error.
Graph generate(const GraphFamilySpec& spec);

/// CLI tag names: path, cycle, complete, star, empty, petersen, tree-random,
/// gnp-random-connected.
std::optional<GraphFamily> parse_family(std::string_view name);
std::string family_name(GraphFamily family);

}  // namespace smd
