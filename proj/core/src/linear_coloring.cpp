#include "lincolor/linear_coloring.hpp"

#include "lincolor/neighborhood_dag.hpp"
#include "lincolor/oracles.hpp"

namespace lincolor {

namespace {

void check_coloring(const Graph& g, std::span<const std::size_t> color) {
  if (color.size() != g.size()) {
    throw InputError("coloring has " + std::to_string(color.size()) + " entries for " +
                     std::to_string(g.size()) + " vertices");
  }
  for (Vertex v = 0; v < color.size(); ++v) {
    if (color[v] == 0) throw InputError("color of vertex " + std::to_string(v) + " must be positive");
  }
}

template <typename Sets>
std::optional<Violation> first_incomparable_pair(const Sets& sets, std::span<const std::size_t> color) {
  for (Vertex u = 0; u < color.size(); ++u) {
    for (Vertex v = u + 1; v < color.size(); ++v) {
      if (color[u] == color[v] && incomparable(sets[u], sets[v])) return Violation{u, v};
    }
  }
  return std::nullopt;
}

}  // namespace

LinearColoring linear_color(const Graph& g, PathCover& cover_out) {
  cover_out = min_path_cover(build_dag(g));
  LinearColoring out;
  out.color.assign(g.size(), 0);
  out.k = cover_out.rho();
  for (std::size_t p = 0; p < cover_out.paths.size(); ++p) {
    for (Vertex v : cover_out.paths[p]) out.color[v] = p + 1;
  }
  return out;
}

LinearColoring linear_color(const Graph& g) {
  PathCover cover;
  return linear_color(g, cover);
}

std::size_t linear_chromatic_number(const Graph& g) { return linear_color(g).k; }

std::optional<Violation> verify_linear_coloring(const Graph& g, std::span<const std::size_t> color) {
  check_coloring(g, color);
  std::vector<VertexSet> closed(g.size());
  for (Vertex v = 0; v < g.size(); ++v) closed[v] = g.closed_neighborhood(v);
  return first_incomparable_pair(closed, color);
}

std::optional<Violation> verify_linear_coloring_cliquesets(const Graph& g,
                                                           std::span<const std::size_t> color) {
  check_coloring(g, color);
  const auto cliques = maximal_cliques(g);
  std::vector<VertexSet> clique_sets(g.size(), VertexSet(cliques.size()));
  for (std::size_t c = 0; c < cliques.size(); ++c) {
    for (Vertex v : cliques[c]) clique_sets[v].insert(c);
  }
  return first_incomparable_pair(clique_sets, color);
}

bool is_proper_coloring(const Graph& g, std::span<const std::size_t> color) {
  for (const auto& [u, v] : g.edges()) {
    if (color[u] == color[v]) return false;
  }
  return true;
}

}  // namespace lincolor
