#pragma once

#include "lincolor/graph.hpp"

#include <string>
#include <vector>

namespace lincolor {

/// Transitive DAG over V(G) with an edge x->y whenever N[x] is contained in N[y].
/// Equal closed neighborhoods are oriented from the smaller label to the larger.
struct NeighborhoodDag {
  std::vector<VertexSet> out_edges;
  /// Longest-path depth from a source, starting at 1 for indegree-0 vertices.
  std::vector<std::size_t> level;

  std::size_t size() const { return out_edges.size(); }
  bool has_edge(Vertex u, Vertex v) const { return out_edges[u].contains(v); }
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;
};

NeighborhoodDag build_dag(const Graph& g);

/// Graphviz digraph, one node per vertex annotated with its level, edges sorted by label.
std::string to_dot(const NeighborhoodDag& dag);

}  // namespace lincolor
