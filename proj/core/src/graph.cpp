#include "lincolor/graph.hpp"

#include <deque>

namespace lincolor {

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.size()) {
    throw InputError("vertex " + std::to_string(v) + " out of range for graph with " +
                     std::to_string(g.size()) + " vertices");
  }
}

}  // namespace

Graph::Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

VertexSet Graph::closed_neighborhood(Vertex v) const {
  VertexSet s = adj_[v];
  s.insert(v);
  return s;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  const auto n = graph_.size();
  if (u >= n || v >= n) {
    throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") has an endpoint outside [0," + std::to_string(n) + ")");
  }
  if (u == v) {
    throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") is a self-loop");
  }
  if (!graph_.adj_[u].contains(v)) {
    graph_.adj_[u].insert(v);
    graph_.adj_[v].insert(u);
    ++graph_.edges_;
  }
  return *this;
}

Graph from_edge_list(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
  return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph complement(const Graph& g) {
  const auto n = g.size();
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& a) {
  for (Vertex v : a) check_vertex(g, v);
  InducedSubgraph out;
  out.original = a.to_vector();
  std::vector<Vertex> index(g.size(), g.size());
  for (Vertex i = 0; i < out.original.size(); ++i) index[out.original[i]] = i;

  GraphBuilder b(out.original.size());
  for (Vertex i = 0; i < out.original.size(); ++i) {
    for (Vertex w : g.neighbors(out.original[i])) {
      if (index[w] != g.size() && i < index[w]) b.add_edge(i, index[w]);
    }
  }
  out.graph = std::move(b).build();
  return out;
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  check_vertex(g, v);
  return g.closed_neighborhood(v);
}

std::vector<std::size_t> distances_from(const Graph& g, Vertex source) {
  check_vertex(g, source);
  std::vector<std::size_t> dist(g.size(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::size_t distance(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, v);
  return distances_from(g, u)[v];
}

}  // namespace lincolor
