#pragma once

// Exact exponential-time computations. These are the ground truth the fast
// paths are checked against, and they never call into the DAG/matching code.
// All of them accept at most 64 vertices; practical limits are much lower.

#include "lincolor/graph.hpp"

#include <optional>
#include <vector>

namespace lincolor {

struct GraphNumbers {
  std::size_t chi = 0;
  std::size_t omega = 0;
  std::size_t alpha = 0;
  std::size_t lambda = 0;
};

/// Maximal cliques sorted lexicographically by their sorted member lists.
std::vector<VertexSet> maximal_cliques(const Graph& g);

std::size_t brute_chromatic(const Graph& g);
std::size_t clique_number(const Graph& g);
std::size_t independence_number(const Graph& g);

/// Minimum number of classes in a partition of V whose closed neighborhoods
/// are pairwise comparable, found by exhaustive partition search.
std::size_t brute_lambda(const Graph& g);

GraphNumbers compute_numbers(const Graph& g);

/// A subset A on which a hereditary equality fails, with both sides.
struct SubsetWitness {
  VertexSet subset;
  std::size_t lhs = 0;
  std::size_t rhs = 0;
};

/// Result of checking an equality on every induced subgraph. The witness is
/// the smallest failing subset (by size, then by bitmask value).
struct HereditaryCheck {
  bool holds = true;
  std::optional<SubsetWitness> witness;
  explicit operator bool() const { return holds; }
};

/// chi(G_A) == lambda(complement(G)_A) for every A.
HereditaryCheck is_colinear(const Graph& g);

/// chi(G_A) == omega(F_A) for every A, where F_A adds to G_A the actual edges
/// of complement(G_A). lhs/rhs in the witness are chi and omega.
HereditaryCheck colinear_via_actual_edges(const Graph& g);

/// alpha(G_A) == lambda(G_A) for every A.
HereditaryCheck is_linear(const Graph& g);

/// is_colinear(complement(g)); the witness refers to the complement's numbers.
HereditaryCheck is_linear_via_complement(const Graph& g);

}  // namespace lincolor
