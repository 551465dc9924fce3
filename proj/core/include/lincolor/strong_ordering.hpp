#pragma once

#include "lincolor/graph.hpp"
#include "lincolor/linear_coloring.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lincolor {

/// Raised when an algorithm's input lies outside the graph class it needs.
class ClassMembershipError : public std::runtime_error {
 public:
  ClassMembershipError(const std::string& what, std::optional<VertexSet> witness = std::nullopt)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::optional<VertexSet>& witness() const { return witness_; }

 private:
  std::optional<VertexSet> witness_;
};

struct OrderingResult {
  /// Strong perfect elimination ordering.
  std::vector<Vertex> sigma;
  /// Maximum independent set collected greedily along sigma.
  VertexSet independent;
  /// 1-based outer pass in which each vertex was emitted.
  std::vector<std::size_t> iteration_of;
  /// Picks where no simple vertex was minimal in the whole current graph and
  /// the choice fell back to a minimal one among the simple vertices.
  std::size_t fallback_picks = 0;
};

/// Modified Farber elimination. Each outer pass takes all simple vertices of
/// the current graph and emits them one at a time, always a minimal one under
/// the accumulated order (u below v once N[u] was a proper subset of N[v] in
/// some current graph), lowest label on ties. A vertex is added to the
/// independent set when no earlier independent vertex is adjacent to it.
///
/// Throws ClassMembershipError (with the stuck vertex set) when g is not
/// strongly chordal.
OrderingResult strong_elimination_ordering(const Graph& g);

/// Scans sigma; each uncolored independent vertex opens a new color which its
/// uncolored later neighbors inherit. Uses exactly |independent| colors.
///
/// With `require_p6_free_strongly_chordal`, throws ClassMembershipError naming
/// the failed class when g is not P6-free strongly chordal. Throws
/// std::logic_error if some vertex is left uncolored.
LinearColoring kappa_coloring(const Graph& g, const OrderingResult& ord,
                              bool require_p6_free_strongly_chordal = true);

/// Once a vertex that is not simple in G appears in sigma, no simple one follows.
bool simple_vertices_lead(const Graph& g, const OrderingResult& ord);

/// Every vertex outside the independent set lies in N_{G_i}[v_i] for some
/// independent v_i placed before it.
bool independent_set_covers_forward(const Graph& g, const OrderingResult& ord);

}  // namespace lincolor
