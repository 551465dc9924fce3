#include "lincolor/neighborhood_dag.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lincolor {

std::size_t NeighborhoodDag::edge_count() const {
  std::size_t m = 0;
  for (const auto& out : out_edges) m += out.size();
  return m;
}

std::vector<Edge> NeighborhoodDag::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : out_edges[u]) out.emplace_back(u, v);
  }
  return out;
}

NeighborhoodDag build_dag(const Graph& g) {
  const auto n = g.size();
  std::vector<VertexSet> closed(n);
  for (Vertex v = 0; v < n; ++v) closed[v] = g.closed_neighborhood(v);

  NeighborhoodDag dag;
  dag.out_edges.assign(n, VertexSet(n));
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (x == y || !closed[x].is_subset_of(closed[y])) continue;
      if (closed[x] == closed[y] && y < x) continue;
      dag.out_edges[x].insert(y);
    }
  }

  // Every edge goes to a strictly larger neighborhood or, on ties, a larger
  // label, so (|N[v]|, v) is a topological order.
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return std::pair(closed[a].size(), a) < std::pair(closed[b].size(), b);
  });
  dag.level.assign(n, 1);
  for (Vertex u : order) {
    for (Vertex v : dag.out_edges[u]) dag.level[v] = std::max(dag.level[v], dag.level[u] + 1);
  }
  return dag;
}

std::string to_dot(const NeighborhoodDag& dag) {
  std::ostringstream os;
  os << "digraph {\n";
  for (Vertex v = 0; v < dag.size(); ++v) {
    os << "  " << v << " [label=\"" << v << "\", level=" << dag.level[v] << "];\n";
  }
  for (const auto& [u, v] : dag.edges()) os << "  " << u << " -> " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace lincolor
