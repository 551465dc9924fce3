#pragma once

#include "lincolor/graph.hpp"
#include "lincolor/patterns.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lincolor {

/// Edges uv whose endpoints have incomparable closed neighborhoods.
std::vector<Edge> actual_edges(const Graph& g);

bool is_simplicial(const Graph& g, Vertex v);
/// {N[x] : x in N[v]} is a chain under inclusion.
bool is_simple(const Graph& g, Vertex v);

/// Simplicial / simple tests inside the induced subgraph on `alive`, without
/// relabeling. v must belong to `alive`.
bool is_simplicial_within(const Graph& g, Vertex v, const VertexSet& alive);
bool is_simple_within(const Graph& g, Vertex v, const VertexSet& alive);

enum class OrderingKind { perfect, strong_perfect };

struct EliminationOrdering {
  std::vector<Vertex> sigma;
  OrderingKind kind = OrderingKind::perfect;
};

struct ChordalResult {
  bool chordal = false;
  /// Perfect elimination ordering when chordal.
  std::optional<EliminationOrdering> ordering;
  /// Chordless cycle of length >= 4, listed in cycle order, when not chordal.
  std::optional<std::vector<Vertex>> hole;
  explicit operator bool() const { return chordal; }
};

/// Lexicographic breadth-first search visit order (ties to the lowest label).
std::vector<Vertex> lex_bfs(const Graph& g);

/// Reverse Lex-BFS order, checked for suffix simpliciality.
ChordalResult is_chordal(const Graph& g);
bool is_co_chordal(const Graph& g);

struct StronglyChordalResult {
  bool strongly_chordal = false;
  /// Vertices removed as simple, in removal order. Complete when the graph
  /// emptied. This is a perfect elimination ordering but not necessarily a
  /// strong one; strong_elimination_ordering() produces that.
  EliminationOrdering elimination{{}, OrderingKind::perfect};
  /// Remaining vertices once no simple vertex was left.
  std::optional<VertexSet> stuck;
  explicit operator bool() const { return strongly_chordal; }
};

/// Repeatedly deletes the lowest-labeled simple vertex.
StronglyChordalResult is_strongly_chordal(const Graph& g);

/// Every v_i is simple in G_i = G[v_i..v_n] and, for i <= l <= k with v_l, v_k
/// in N_{G_i}[v_i], N_{G_i}[v_l] is contained in N_{G_i}[v_k]. Throws
/// InputError when sigma is not a permutation of V(g).
bool verify_strong_peo(const Graph& g, const std::vector<Vertex>& sigma);

/// Suffix-simplicial check of an ordering. Throws InputError like verify_strong_peo.
bool verify_peo(const Graph& g, const std::vector<Vertex>& sigma);

/// (P4, C4)-free, via induced-subgraph search.
bool is_quasi_threshold(const Graph& g);
/// No induced subgraph has an actual edge. Exponential; small graphs only.
bool is_quasi_threshold_by_actual_edges(const Graph& g);
/// (2K2, P4, C4)-free.
bool is_threshold(const Graph& g);
/// (2K2, C4, C5)-free.
bool is_split(const Graph& g);
bool is_p6_free(const Graph& g);

struct ForbiddenWitness {
  std::string pattern;
  Occurrence occurrence;
};

/// First occurrence among the named patterns, tried in the given order.
std::optional<ForbiddenWitness> find_forbidden(const Graph& g,
                                               const std::vector<std::string>& pattern_names);

/// Named pattern graph: "P4", "P6", "C4", "C5", "2K2", "coP6".
Graph named_pattern(const std::string& name);

struct ClassReport {
  bool chordal = false;
  bool co_chordal = false;
  bool split = false;
  bool threshold = false;
  bool quasi_threshold = false;
  bool strongly_chordal = false;
  bool p6_free = false;

  std::optional<EliminationOrdering> perfect_ordering;
  std::optional<std::vector<Vertex>> hole;
  std::optional<EliminationOrdering> strong_ordering;
  std::optional<VertexSet> strongly_chordal_obstruction;
  std::optional<ForbiddenWitness> threshold_obstruction;
  std::optional<ForbiddenWitness> split_obstruction;
  std::optional<ForbiddenWitness> quasi_threshold_obstruction;
  std::optional<Occurrence> p6;
};

ClassReport classify(const Graph& g);

}  // namespace lincolor
