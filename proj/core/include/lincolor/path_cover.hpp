#pragma once

#include "lincolor/neighborhood_dag.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace lincolor {

struct Matching {
  /// (left, right) pairs, sorted by left index.
  std::vector<Edge> pairs;
  std::size_t size() const { return pairs.size(); }
};

/// Maximum-cardinality matching by repeated augmenting-path search. Left
/// vertices are processed in index order and their edges in input order, so
/// the result is a deterministic function of the input.
Matching max_bipartite_matching(std::size_t left_count, std::size_t right_count,
                                std::span<const Edge> edges);

struct PathCover {
  std::vector<std::vector<Vertex>> paths;
  std::size_t rho() const { return paths.size(); }
};

/// Minimum vertex-disjoint path cover of a DAG: rho = n - |maximum matching| on
/// the split graph (out-copy, in-copy). Paths are emitted starting from
/// vertices without a matched predecessor, in label order.
PathCover min_path_cover(const NeighborhoodDag& dag);

}  // namespace lincolor
