#pragma once

#include "lincolor/graph.hpp"
#include "lincolor/path_cover.hpp"

#include <optional>
#include <span>
#include <vector>

namespace lincolor {

/// Color per vertex, in [1, k]. Every color class is a chain of closed
/// neighborhoods under inclusion.
struct LinearColoring {
  std::vector<std::size_t> color;
  std::size_t k = 0;
};

/// Optimal linear coloring: build the neighborhood DAG, take a minimum path
/// cover, and give each path its own color. k equals the linear chromatic number.
LinearColoring linear_color(const Graph& g);

/// Same as linear_color but also returns the path cover it was derived from.
LinearColoring linear_color(const Graph& g, PathCover& cover_out);

/// lambda(G); 0 for the empty graph.
std::size_t linear_chromatic_number(const Graph& g);

/// Same-colored pair whose closed neighborhoods (or clique sets) are incomparable.
struct Violation {
  Vertex u;
  Vertex v;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// nullopt when every color class is linearly ordered by closed-neighborhood
/// inclusion, otherwise the lexicographically first offending pair. Colors
/// must be positive and one per vertex.
std::optional<Violation> verify_linear_coloring(const Graph& g, std::span<const std::size_t> color);

/// Same contract, but compares clique sets C(v) (the maximal cliques through v).
/// Enumerates maximal cliques, so intended for small graphs.
std::optional<Violation> verify_linear_coloring_cliquesets(const Graph& g,
                                                           std::span<const std::size_t> color);

/// True when no two adjacent vertices share a color.
bool is_proper_coloring(const Graph& g, std::span<const std::size_t> color);

}  // namespace lincolor
