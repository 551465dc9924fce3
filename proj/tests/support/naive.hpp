#pragma once

// Deliberately naive reference computations used only by the tests. Nothing
// here calls into the library beyond reading adjacency from Graph.

#include "lincolor/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace naive {

using lincolor::Graph;
using lincolor::Vertex;

inline std::vector<bool> closed_row(const Graph& g, Vertex v) {
  std::vector<bool> row(g.size(), false);
  for (Vertex u = 0; u < g.size(); ++u) row[u] = (u == v) || g.adjacent(u, v);
  return row;
}

inline bool row_subset(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

inline bool comparable(const Graph& g, Vertex u, Vertex v) {
  auto a = closed_row(g, u), b = closed_row(g, v);
  return row_subset(a, b) || row_subset(b, a);
}

/// Calls visit(block_of) for every set partition, as restricted growth strings.
inline void for_each_partition(std::size_t n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> block(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
    if (i == n) {
      visit(block);
      return;
    }
    for (int b = 0; b <= used; ++b) {
      block[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  if (n == 0) {
    visit(block);
    return;
  }
  block[0] = 0;
  rec(1, 1);
}

/// Minimum number of blocks in a partition whose blocks are pairwise comparable.
inline std::size_t lambda(const Graph& g) {
  const auto n = g.size();
  std::size_t best = n;
  for_each_partition(n, [&](const std::vector<int>& block) {
    std::size_t blocks = n == 0 ? 0 : static_cast<std::size_t>(*std::max_element(block.begin(), block.end()) + 1);
    if (blocks >= best) return;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (block[u] == block[v] && !comparable(g, u, v)) return;
      }
    }
    best = blocks;
  });
  return best;
}

/// Minimum k with a proper k-coloring, by trying every assignment.
inline std::size_t chromatic(const Graph& g) {
  const auto n = g.size();
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::size_t> c(n, 0);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
      if (i == n) return true;
      for (std::size_t col = 0; col < k; ++col) {
        bool ok = true;
        for (Vertex u = 0; u < i; ++u) ok = ok && !(g.adjacent(u, i) && c[u] == col);
        if (!ok) continue;
        c[i] = col;
        if (rec(i + 1)) return true;
      }
      return false;
    };
    if (rec(0)) return k;
  }
  return n;
}

inline bool is_clique(const Graph& g, std::uint32_t mask) {
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v = u + 1; v < g.size(); ++v) {
      if ((mask >> u & 1) && (mask >> v & 1) && !g.adjacent(u, v)) return false;
    }
  }
  return true;
}

inline bool is_independent(const Graph& g, std::uint32_t mask) {
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v = u + 1; v < g.size(); ++v) {
      if ((mask >> u & 1) && (mask >> v & 1) && g.adjacent(u, v)) return false;
    }
  }
  return true;
}

inline std::size_t alpha(const Graph& g) {
  std::size_t best = 0;
  for (std::uint32_t m = 0; m < (1u << g.size()); ++m) {
    if (is_independent(g, m)) best = std::max<std::size_t>(best, std::popcount(m));
  }
  return best;
}

inline std::size_t omega(const Graph& g) {
  std::size_t best = 0;
  for (std::uint32_t m = 0; m < (1u << g.size()); ++m) {
    if (is_clique(g, m)) best = std::max<std::size_t>(best, std::popcount(m));
  }
  return best;
}

/// Maximal cliques as sorted vertex lists, sorted.
inline std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  const auto n = g.size();
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    if (!is_clique(g, m)) continue;
    bool maximal = true;
    for (Vertex v = 0; v < n && maximal; ++v) {
      if (!(m >> v & 1) && is_clique(g, m | (1u << v))) maximal = false;
    }
    if (!maximal) continue;
    std::vector<Vertex> c;
    for (Vertex v = 0; v < n; ++v) {
      if (m >> v & 1) c.push_back(v);
    }
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Maximum matching size by trying every subset of edges.
inline std::size_t max_matching(const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::size_t best = 0;
  const auto m = edges.size();
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    std::set<std::size_t> l, r;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!(s >> i & 1)) continue;
      ok = l.insert(edges[i].first).second && r.insert(edges[i].second).second;
    }
    if (ok) best = std::max<std::size_t>(best, std::popcount(s));
  }
  return best;
}

/// Minimum number of vertex-disjoint directed paths covering a DAG given by
/// an adjacency predicate, via exhaustive set partitions into paths.
inline std::size_t min_path_cover(std::size_t n, const std::function<bool(Vertex, Vertex)>& edge) {
  std::size_t best = n;
  for_each_partition(n, [&](const std::vector<int>& block) {
    std::size_t blocks = n == 0 ? 0 : static_cast<std::size_t>(*std::max_element(block.begin(), block.end()) + 1);
    if (blocks >= best) return;
    for (std::size_t b = 0; b < blocks; ++b) {
      std::vector<Vertex> members;
      for (Vertex v = 0; v < n; ++v) {
        if (block[v] == static_cast<int>(b)) members.push_back(v);
      }
      bool routable = false;
      do {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < members.size() && ok; ++i) ok = edge(members[i], members[i + 1]);
        routable = ok;
      } while (!routable && std::next_permutation(members.begin(), members.end()));
      if (!routable) return;
    }
    best = blocks;
  });
  return best;
}

/// Lexicographically smallest adjacency code over all n! relabelings.
inline std::uint64_t full_canonical_code(const Graph& g) {
  const auto n = g.size();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j) code = (code << 1) | (g.adjacent(perm[i], perm[j]) ? 1 : 0);
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Number of isomorphism classes on n vertices by canonicalizing every labeled graph.
inline std::size_t count_classes(std::size_t n) {
  const std::size_t pairs = n * (n - (n ? 1 : 0)) / 2;
  std::set<std::uint64_t> codes;
  for (std::uint64_t e = 0; e < (std::uint64_t{1} << pairs); ++e) {
    lincolor::GraphBuilder b(n);
    std::size_t pos = 0;
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j, ++pos) {
        if (e >> pos & 1) b.add_edge(i, j);
      }
    }
    codes.insert(full_canonical_code(std::move(b).build()));
  }
  return codes.size();
}

}  // namespace naive
