#pragma once

#include "lincolor/vertex_set.hpp"

#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lincolor {

/// Raised for malformed caller input: bad indices, self-loops, wrong sizes.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t size() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }

  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  /// N[v] = N(v) plus v itself.
  VertexSet closed_neighborhood(Vertex v) const;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  VertexSet all_vertices() const { return VertexSet::full(size()); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  friend class GraphBuilder;
  std::vector<VertexSet> adj_;
  std::size_t edges_ = 0;
};

/// Accumulates edges and hands out a finished Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : graph_(n) {}
  /// Throws InputError on out-of-range endpoints or self-loops. Repeated edges collapse.
  GraphBuilder& add_edge(Vertex u, Vertex v);
  Graph build() && { return std::move(graph_); }

 private:
  Graph graph_;
};

Graph from_edge_list(std::size_t n, std::span<const Edge> edges);
Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges);

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// original[i] is the vertex of the parent graph relabeled to i.
  std::vector<Vertex> original;
};

/// G_A, relabeled 0..|A|-1 in increasing order of original label.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& a);

VertexSet closed_neighborhood(const Graph& g, Vertex v);

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// BFS edge count from u to v, kUnreachable when they lie in different components.
std::size_t distance(const Graph& g, Vertex u, Vertex v);

/// All BFS distances from a source.
std::vector<std::size_t> distances_from(const Graph& g, Vertex source);

}  // namespace lincolor
