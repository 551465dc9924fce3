#include "lincolor/class_recognition.hpp"

#include "lincolor/strong_ordering.hpp"
#include "mask.hpp"

#include <algorithm>
#include <deque>

namespace lincolor {

namespace {

VertexSet closed_within(const Graph& g, Vertex v, const VertexSet& alive) {
  return g.closed_neighborhood(v) & alive;
}

void check_permutation(const Graph& g, const std::vector<Vertex>& sigma) {
  if (sigma.size() != g.size()) {
    throw InputError("ordering has " + std::to_string(sigma.size()) + " entries for " +
                     std::to_string(g.size()) + " vertices");
  }
  std::vector<char> seen(g.size(), 0);
  for (Vertex v : sigma) {
    if (v >= g.size() || seen[v]) {
      throw InputError("ordering is not a permutation (vertex " + std::to_string(v) + ")");
    }
    seen[v] = 1;
  }
}

// Shortest u-w path avoiding `blocked`, inclusive of both ends.
std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex u, Vertex w,
                                                 const VertexSet& blocked) {
  constexpr Vertex kNone = static_cast<Vertex>(-1);
  std::vector<Vertex> prev(g.size(), kNone);
  std::deque<Vertex> queue{u};
  prev[u] = u;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    if (x == w) break;
    for (Vertex y : g.neighbors(x)) {
      if (prev[y] != kNone || blocked.contains(y)) continue;
      prev[y] = x;
      queue.push_back(y);
    }
  }
  if (prev[w] == kNone) return std::nullopt;
  std::vector<Vertex> path{w};
  while (path.back() != u) path.push_back(prev[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<Vertex> smallest_induced_cycle(const Graph& g) {
  for (std::size_t len = 4; len <= g.size(); ++len) {
    if (auto occ = find_induced(g, gen_cycle(len))) return occ->mapping;
  }
  return {};
}

}  // namespace

std::vector<Edge> actual_edges(const Graph& g) {
  std::vector<Edge> out;
  for (const auto& [u, v] : g.edges()) {
    if (incomparable(g.closed_neighborhood(u), g.closed_neighborhood(v))) out.emplace_back(u, v);
  }
  return out;
}

bool is_simplicial_within(const Graph& g, Vertex v, const VertexSet& alive) {
  const auto nv = closed_within(g, v, alive);
  for (Vertex x : nv) {
    if (!nv.is_subset_of(closed_within(g, x, alive))) return false;
  }
  return true;
}

bool is_simple_within(const Graph& g, Vertex v, const VertexSet& alive) {
  const auto members = closed_within(g, v, alive).to_vector();
  std::vector<VertexSet> closed;
  closed.reserve(members.size());
  for (Vertex x : members) closed.push_back(closed_within(g, x, alive));
  for (std::size_t a = 0; a < closed.size(); ++a) {
    for (std::size_t b = a + 1; b < closed.size(); ++b) {
      if (incomparable(closed[a], closed[b])) return false;
    }
  }
  return true;
}

bool is_simplicial(const Graph& g, Vertex v) {
  closed_neighborhood(g, v);  // range check
  return is_simplicial_within(g, v, g.all_vertices());
}

bool is_simple(const Graph& g, Vertex v) {
  closed_neighborhood(g, v);
  return is_simple_within(g, v, g.all_vertices());
}

std::vector<Vertex> lex_bfs(const Graph& g) {
  const auto n = g.size();
  // Labels are lists of visit stamps in decreasing order; comparing them
  // lexicographically gives the Lex-BFS priority.
  std::vector<std::vector<std::size_t>> label(n);
  std::vector<char> visited(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = n;
    for (Vertex v = 0; v < n; ++v) {
      if (visited[v]) continue;
      if (pick == n || label[v] > label[pick]) pick = v;
    }
    visited[pick] = 1;
    order.push_back(pick);
    for (Vertex w : g.neighbors(pick)) {
      if (!visited[w]) label[w].push_back(n - step);
    }
  }
  return order;
}

ChordalResult is_chordal(const Graph& g) {
  auto sigma = lex_bfs(g);
  std::reverse(sigma.begin(), sigma.end());
  const auto n = g.size();
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[sigma[i]] = i;

  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = sigma[i];
    std::vector<Vertex> later;
    for (Vertex w : g.neighbors(v)) {
      if (position[w] > i) later.push_back(w);
    }
    if (later.empty()) continue;
    const Vertex parent = *std::min_element(later.begin(), later.end(), [&](Vertex a, Vertex b) {
      return position[a] < position[b];
    });
    for (Vertex w : later) {
      if (w == parent || g.adjacent(parent, w)) continue;
      // v sees two non-adjacent later neighbors; close them into a hole
      // through a shortest path that avoids the rest of N[v].
      auto blocked = g.closed_neighborhood(v);
      blocked.erase(parent);
      blocked.erase(w);
      ChordalResult result;
      if (auto path = shortest_path(g, parent, w, blocked)) {
        path->insert(path->begin(), v);
        result.hole = std::move(*path);
      } else {
        result.hole = smallest_induced_cycle(g);
      }
      return result;
    }
  }
  return {true, EliminationOrdering{std::move(sigma), OrderingKind::perfect}, std::nullopt};
}

bool is_co_chordal(const Graph& g) { return is_chordal(complement(g)).chordal; }

StronglyChordalResult is_strongly_chordal(const Graph& g) {
  StronglyChordalResult result;
  auto alive = g.all_vertices();
  while (!alive.empty()) {
    auto simple = std::find_if(alive.begin(), alive.end(),
                               [&](Vertex v) { return is_simple_within(g, v, alive); });
    if (simple == alive.end()) {
      result.stuck = alive;
      return result;
    }
    result.elimination.sigma.push_back(*simple);
    alive.erase(*simple);
  }
  result.strongly_chordal = true;
  return result;
}

bool verify_peo(const Graph& g, const std::vector<Vertex>& sigma) {
  check_permutation(g, sigma);
  auto alive = g.all_vertices();
  for (Vertex v : sigma) {
    if (!is_simplicial_within(g, v, alive)) return false;
    alive.erase(v);
  }
  return true;
}

bool verify_strong_peo(const Graph& g, const std::vector<Vertex>& sigma) {
  check_permutation(g, sigma);
  const auto n = g.size();
  auto alive = g.all_vertices();
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = sigma[i];
    if (!is_simple_within(g, v, alive)) return false;
    const auto nv = closed_within(g, v, alive);
    for (std::size_t l = i; l < n; ++l) {
      if (!nv.contains(sigma[l])) continue;
      const auto nl = closed_within(g, sigma[l], alive);
      for (std::size_t k = l + 1; k < n; ++k) {
        if (nv.contains(sigma[k]) && !nl.is_subset_of(closed_within(g, sigma[k], alive))) {
          return false;
        }
      }
    }
    alive.erase(v);
  }
  return true;
}

Graph named_pattern(const std::string& name) {
  if (name == "P4") return gen_path(4);
  if (name == "P6") return gen_path(6);
  if (name == "C4") return gen_cycle(4);
  if (name == "C5") return gen_cycle(5);
  if (name == "2K2") return gen_2k2();
  if (name == "coP6") return complement(gen_path(6));
  throw InputError("unknown pattern '" + name + "'");
}

std::optional<ForbiddenWitness> find_forbidden(const Graph& g,
                                               const std::vector<std::string>& pattern_names) {
  for (const auto& name : pattern_names) {
    if (auto occ = find_induced(g, named_pattern(name))) return ForbiddenWitness{name, *occ};
  }
  return std::nullopt;
}

bool is_quasi_threshold(const Graph& g) { return !find_forbidden(g, {"P4", "C4"}); }

bool is_quasi_threshold_by_actual_edges(const Graph& g) {
  const auto adj = detail::adjacency_masks(g);
  for (detail::Mask a : detail::subsets_by_size(g.size())) {
    for (detail::Mask m = a; m; m &= m - 1) {
      const Vertex u = detail::lowest(m);
      const auto nu = detail::closed_within(adj, u, a);
      for (detail::Mask w = adj[u] & a; w; w &= w - 1) {
        const auto nv = detail::closed_within(adj, detail::lowest(w), a);
        if ((nu & ~nv) != 0 && (nv & ~nu) != 0) return false;
      }
    }
  }
  return true;
}

bool is_threshold(const Graph& g) { return !find_forbidden(g, {"2K2", "P4", "C4"}); }
bool is_split(const Graph& g) { return !find_forbidden(g, {"2K2", "C4", "C5"}); }
bool is_p6_free(const Graph& g) { return !find_induced(g, gen_path(6)); }

ClassReport classify(const Graph& g) {
  ClassReport r;
  auto chordal = is_chordal(g);
  r.chordal = chordal.chordal;
  r.perfect_ordering = std::move(chordal.ordering);
  r.hole = std::move(chordal.hole);
  r.co_chordal = is_co_chordal(g);

  r.threshold_obstruction = find_forbidden(g, {"2K2", "P4", "C4"});
  r.threshold = !r.threshold_obstruction;
  r.split_obstruction = find_forbidden(g, {"2K2", "C4", "C5"});
  r.split = !r.split_obstruction;
  r.quasi_threshold_obstruction = find_forbidden(g, {"P4", "C4"});
  r.quasi_threshold = !r.quasi_threshold_obstruction;

  auto strong = is_strongly_chordal(g);
  r.strongly_chordal = strong.strongly_chordal;
  if (strong.strongly_chordal) {
    r.strong_ordering =
        EliminationOrdering{strong_elimination_ordering(g).sigma, OrderingKind::strong_perfect};
  } else {
    r.strongly_chordal_obstruction = std::move(strong.stuck);
  }
  r.p6 = find_induced(g, gen_path(6));
  r.p6_free = !r.p6;
  return r;
}

}  // namespace lincolor
