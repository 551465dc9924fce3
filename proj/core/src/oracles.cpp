#include "lincolor/oracles.hpp"

#include "mask.hpp"

#include <algorithm>

namespace lincolor {

using detail::bit;
using detail::Mask;

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  const auto adj = detail::adjacency_masks(g);
  std::vector<Mask> found;

  // Bron-Kerbosch with pivoting on the vertex covering most candidates.
  auto bron_kerbosch = [&](auto& self, Mask r, Mask p, Mask x) -> void {
    if (p == 0 && x == 0) {
      found.push_back(r);
      return;
    }
    Vertex pivot = detail::lowest(p | x);
    int best = -1;
    for (Mask m = p | x; m; m &= m - 1) {
      const Vertex u = detail::lowest(m);
      if (int c = detail::popcount(p & adj[u]); c > best) best = c, pivot = u;
    }
    for (Mask m = p & ~adj[pivot]; m; m &= m - 1) {
      const Vertex v = detail::lowest(m);
      self(self, r | bit(v), p & adj[v], x & adj[v]);
      p &= ~bit(v);
      x |= bit(v);
    }
  };
  if (g.size() > 0) bron_kerbosch(bron_kerbosch, 0, detail::full_mask(g.size()), 0);

  std::vector<VertexSet> out;
  out.reserve(found.size());
  for (Mask m : found) out.push_back(detail::to_vertex_set(m, g.size()));
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.to_vector() < b.to_vector();
  });
  return out;
}

std::size_t brute_chromatic(const Graph& g) {
  return detail::chromatic_number(detail::adjacency_masks(g), detail::full_mask(g.size()));
}

std::size_t clique_number(const Graph& g) {
  return detail::clique_number(detail::adjacency_masks(g), detail::full_mask(g.size()));
}

std::size_t independence_number(const Graph& g) {
  return detail::independence_number(detail::adjacency_masks(g), detail::full_mask(g.size()));
}

std::size_t brute_lambda(const Graph& g) {
  return detail::lambda_number(detail::adjacency_masks(g), detail::full_mask(g.size()));
}

GraphNumbers compute_numbers(const Graph& g) {
  const auto adj = detail::adjacency_masks(g);
  const auto all = detail::full_mask(g.size());
  return {static_cast<std::size_t>(detail::chromatic_number(adj, all)),
          static_cast<std::size_t>(detail::clique_number(adj, all)),
          static_cast<std::size_t>(detail::independence_number(adj, all)),
          static_cast<std::size_t>(detail::lambda_number(adj, all))};
}

namespace {

// Runs lhs(A) == rhs(A) over all subsets in witness order.
template <typename Lhs, typename Rhs>
HereditaryCheck sweep_subsets(std::size_t n, Lhs lhs, Rhs rhs) {
  for (Mask a : detail::subsets_by_size(n)) {
    const int left = lhs(a);
    const int right = rhs(a);
    if (left != right) {
      return {false, SubsetWitness{detail::to_vertex_set(a, n), static_cast<std::size_t>(left),
                                   static_cast<std::size_t>(right)}};
    }
  }
  return {};
}

}  // namespace

HereditaryCheck is_colinear(const Graph& g) {
  const auto adj = detail::adjacency_masks(g);
  const auto co_adj = detail::complement_masks(adj, detail::full_mask(g.size()));
  return sweep_subsets(
      g.size(), [&](Mask a) { return detail::chromatic_number(adj, a); },
      [&](Mask a) { return detail::lambda_number(co_adj, a); });
}

HereditaryCheck colinear_via_actual_edges(const Graph& g) {
  const auto adj = detail::adjacency_masks(g);
  return sweep_subsets(
      g.size(), [&](Mask a) { return detail::chromatic_number(adj, a); },
      [&](Mask a) {
        // F_A = G_A plus the actual edges of complement(G_A).
        const auto co = detail::complement_masks(adj, a);
        std::vector<Mask> f(adj.size(), 0);
        for (Mask m = a; m; m &= m - 1) {
          const Vertex u = detail::lowest(m);
          f[u] = adj[u] & a;
          const Mask nu = detail::closed_within(co, u, a);
          for (Mask w = co[u]; w; w &= w - 1) {
            const Vertex v = detail::lowest(w);
            const Mask nv = detail::closed_within(co, v, a);
            if ((nu & ~nv) != 0 && (nv & ~nu) != 0) f[u] |= bit(v);
          }
        }
        return detail::clique_number(f, a);
      });
}

HereditaryCheck is_linear(const Graph& g) {
  const auto adj = detail::adjacency_masks(g);
  return sweep_subsets(
      g.size(), [&](Mask a) { return detail::independence_number(adj, a); },
      [&](Mask a) { return detail::lambda_number(adj, a); });
}

HereditaryCheck is_linear_via_complement(const Graph& g) { return is_colinear(complement(g)); }

}  // namespace lincolor
