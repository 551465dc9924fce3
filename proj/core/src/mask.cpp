#include "mask.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace lincolor::detail {

std::vector<Mask> adjacency_masks(const Graph& g) {
  if (g.size() > kMaxMaskVertices) {
    throw InputError("exact oracles support at most 64 vertices, got " + std::to_string(g.size()));
  }
  std::vector<Mask> adj(g.size(), 0);
  for (Vertex v = 0; v < g.size(); ++v) adj[v] = to_mask(g.neighbors(v));
  return adj;
}

Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s) m |= bit(v);
  return m;
}

VertexSet to_vertex_set(Mask m, std::size_t universe) {
  VertexSet s(universe);
  for (; m; m &= m - 1) s.insert(lowest(m));
  return s;
}

std::vector<Mask> complement_masks(const std::vector<Mask>& adj, Mask within) {
  std::vector<Mask> out(adj.size(), 0);
  for (Vertex v = 0; v < adj.size(); ++v) {
    if (within & bit(v)) out[v] = ~adj[v] & ~bit(v) & within;
  }
  return out;
}

std::vector<Mask> subsets_by_size(std::size_t n) {
  if (n > 30) throw InputError("subset sweep over " + std::to_string(n) + " vertices is too large");
  std::vector<Mask> all(std::size_t{1} << n);
  std::iota(all.begin(), all.end(), Mask{0});
  std::stable_sort(all.begin(), all.end(),
                   [](Mask a, Mask b) { return popcount(a) < popcount(b); });
  return all;
}

namespace {

std::vector<Vertex> members_by_degree(const std::vector<Mask>& adj, Mask within) {
  std::vector<Vertex> order;
  for (Mask m = within; m; m &= m - 1) order.push_back(lowest(m));
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return popcount(adj[a] & within) > popcount(adj[b] & within);
  });
  return order;
}

// Assigns vertices in a fixed order to existing classes or a new one, keeping
// the best complete partition found. `fits(v, cls)` decides membership.
template <typename Fits>
int min_partition(const std::vector<Vertex>& order, int lower_bound, Fits fits) {
  const int m = static_cast<int>(order.size());
  int best = m;
  std::array<Mask, kMaxMaskVertices> classes{};

  auto search = [&](auto& self, int idx, int used) -> void {
    if (used >= best || best == lower_bound) return;
    if (idx == m) {
      best = used;
      return;
    }
    const Vertex v = order[idx];
    for (int c = 0; c < used; ++c) {
      if (!fits(v, classes[c])) continue;
      classes[c] |= bit(v);
      self(self, idx + 1, used);
      classes[c] &= ~bit(v);
    }
    if (used + 1 < best) {
      classes[used] = bit(v);
      self(self, idx + 1, used + 1);
      classes[used] = 0;
    }
  };
  search(search, 0, 0);
  return best;
}

}  // namespace

int clique_number(const std::vector<Mask>& adj, Mask within) {
  int best = 0;
  auto expand = [&](auto& self, int size, Mask candidates) -> void {
    if (candidates == 0) {
      best = std::max(best, size);
      return;
    }
    while (candidates) {
      if (size + popcount(candidates) <= best) return;
      const Vertex v = lowest(candidates);
      candidates &= ~bit(v);
      self(self, size + 1, candidates & adj[v]);
    }
    best = std::max(best, size);
  };
  expand(expand, 0, within);
  return best;
}

int independence_number(const std::vector<Mask>& adj, Mask within) {
  return clique_number(complement_masks(adj, within), within);
}

int chromatic_number(const std::vector<Mask>& adj, Mask within) {
  if (within == 0) return 0;
  const auto order = members_by_degree(adj, within);
  return min_partition(order, clique_number(adj, within),
                       [&](Vertex v, Mask cls) { return (adj[v] & cls) == 0; });
}

int lambda_number(const std::vector<Mask>& adj, Mask within) {
  if (within == 0) return 0;
  std::array<Mask, kMaxMaskVertices> comparable{};
  std::array<Mask, kMaxMaskVertices> closed{};
  for (Mask m = within; m; m &= m - 1) closed[lowest(m)] = closed_within(adj, lowest(m), within);
  for (Mask a = within; a; a &= a - 1) {
    const Vertex u = lowest(a);
    for (Mask b = within; b; b &= b - 1) {
      const Vertex v = lowest(b);
      const Mask nu = closed[u], nv = closed[v];
      if ((nu & ~nv) == 0 || (nv & ~nu) == 0) comparable[u] |= bit(v);
    }
  }
  std::vector<Vertex> order;
  for (Mask m = within; m; m &= m - 1) order.push_back(lowest(m));
  // Vertices with fewest comparable partners first: they fail earliest.
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return popcount(comparable[a]) < popcount(comparable[b]);
  });
  return min_partition(order, 1, [&](Vertex v, Mask cls) { return (cls & ~comparable[v]) == 0; });
}

}  // namespace lincolor::detail
