#include "lincolor/patterns.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

namespace lincolor {

namespace {

// mt19937_64 output is fully specified, unlike the standard distributions, so
// plain modulo keeps generated graphs identical across standard libraries.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

std::vector<Vertex> search_order(const Graph& pattern) {
  const auto n = pattern.size();
  std::vector<Vertex> order;
  std::vector<char> placed(n, 0);
  std::vector<std::size_t> links(n, 0);
  while (order.size() < n) {
    Vertex pick = n;
    for (Vertex p = 0; p < n; ++p) {
      if (placed[p]) continue;
      if (pick == n || links[p] > links[pick] ||
          (links[p] == links[pick] && pattern.degree(p) > pattern.degree(pick))) {
        pick = p;
      }
    }
    placed[pick] = 1;
    order.push_back(pick);
    for (Vertex q : pattern.neighbors(pick)) ++links[q];
  }
  return order;
}

}  // namespace

std::optional<Occurrence> find_induced(const Graph& host, const Graph& pattern) {
  const auto np = pattern.size();
  const auto nh = host.size();
  if (np > nh) return std::nullopt;

  const auto order = search_order(pattern);
  std::vector<Vertex> mapping(np, nh);
  std::vector<char> used(nh, 0);

  auto assign = [&](auto& self, std::size_t idx) -> bool {
    if (idx == np) return true;
    const Vertex p = order[idx];
    for (Vertex h = 0; h < nh; ++h) {
      if (used[h] || host.degree(h) < pattern.degree(p)) continue;
      bool consistent = true;
      for (std::size_t j = 0; j < idx && consistent; ++j) {
        const Vertex q = order[j];
        consistent = pattern.adjacent(p, q) == host.adjacent(h, mapping[q]);
      }
      if (!consistent) continue;
      mapping[p] = h;
      used[h] = 1;
      if (self(self, idx + 1)) return true;
      used[h] = 0;
    }
    return false;
  };

  if (!assign(assign, 0)) return std::nullopt;
  return Occurrence{std::move(mapping)};
}

bool is_induced_embedding(const Graph& host, const Graph& pattern, const Occurrence& occ) {
  if (occ.mapping.size() != pattern.size()) return false;
  std::unordered_set<Vertex> image;
  for (Vertex h : occ.mapping) {
    if (h >= host.size() || !image.insert(h).second) return false;
  }
  for (Vertex a = 0; a < pattern.size(); ++a) {
    for (Vertex b = a + 1; b < pattern.size(); ++b) {
      if (pattern.adjacent(a, b) != host.adjacent(occ.mapping[a], occ.mapping[b])) return false;
    }
  }
  return true;
}

std::optional<Occurrence> find_hole(const Graph& host) {
  for (std::size_t len = 5; len <= host.size(); ++len) {
    if (auto occ = find_induced(host, gen_cycle(len))) return occ;
  }
  return std::nullopt;
}

std::optional<Occurrence> find_antihole(const Graph& host) { return find_hole(complement(host)); }

Graph gen_cycle(std::size_t n) {
  GraphBuilder b(n);
  if (n >= 3) {
    for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  } else if (n == 2) {
    b.add_edge(0, 1);
  }
  return std::move(b).build();
}

Graph gen_path(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.add_edge(v - 1, v);
  return std::move(b).build();
}

Graph gen_complete(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return std::move(b).build();
}

Graph gen_star(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.add_edge(0, v);
  return std::move(b).build();
}

Graph gen_2k2() { return from_edge_list(4, {{0, 1}, {2, 3}}); }

Graph incomplete_k_sun(std::size_t k) {
  if (k < 3) throw InputError("sun graphs need k >= 3, got " + std::to_string(k));
  GraphBuilder b(2 * k);
  for (Vertex i = 0; i < k; ++i) {
    b.add_edge(k + i, i);
    b.add_edge(k + i, (i + k - 1) % k);
  }
  return std::move(b).build();
}

Graph k_sun(std::size_t k) {
  if (k < 3) throw InputError("sun graphs need k >= 3, got " + std::to_string(k));
  GraphBuilder b(2 * k);
  for (const auto& [u, v] : incomplete_k_sun(k).edges()) b.add_edge(u, v);
  for (Vertex u = 0; u < k; ++u) {
    for (Vertex v = u + 1; v < k; ++v) b.add_edge(u, v);
  }
  return std::move(b).build();
}

std::optional<SunOccurrence> find_k_sun(const Graph& host, std::size_t k_max) {
  for (std::size_t k = 3; k <= k_max && 2 * k <= host.size(); ++k) {
    if (auto occ = find_induced(host, k_sun(k))) return SunOccurrence{k, std::move(*occ)};
  }
  return std::nullopt;
}

Graph threshold_from_choices(const std::vector<bool>& dominating) {
  const auto n = dominating.size();
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) {
    if (!dominating[v]) continue;
    for (Vertex u = 0; u < v; ++u) b.add_edge(u, v);
  }
  return std::move(b).build();
}

Graph gen_threshold(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<bool> dominating(n, false);
  for (Vertex v = 1; v < n; ++v) dominating[v] = below(rng, 2) == 1;
  return threshold_from_choices(dominating);
}

Graph gen_quasi_threshold(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  constexpr Vertex kRoot = static_cast<Vertex>(-1);
  std::vector<Vertex> parent(n, kRoot);
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) {
    // Drawing v itself makes v a new root.
    const auto p = below(rng, v + 1);
    if (p == v) continue;
    parent[v] = p;
    for (Vertex a = p; a != kRoot; a = parent[a]) b.add_edge(v, a);
  }
  return std::move(b).build();
}

Graph interval_graph(const std::vector<std::pair<int, int>>& intervals) {
  const auto n = intervals.size();
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const auto& [lo1, hi1] = intervals[u];
      const auto& [lo2, hi2] = intervals[v];
      if (std::max(lo1, lo2) <= std::min(hi1, hi2)) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

Graph gen_strongly_chordal(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto span = static_cast<std::uint64_t>(2 * n + 2);
  // Per-graph length scale so that sparse and dense instances both show up.
  const auto max_len = 1 + below(rng, span);
  std::vector<std::pair<int, int>> intervals(n);
  for (auto& [lo, hi] : intervals) {
    lo = static_cast<int>(below(rng, span));
    hi = lo + static_cast<int>(below(rng, max_len));
  }
  return interval_graph(intervals);
}

Graph gen_split(std::size_t clique, std::size_t independent, unsigned percent, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto n = clique + independent;
  GraphBuilder b(n);
  for (Vertex u = 0; u < clique; ++u) {
    for (Vertex v = u + 1; v < clique; ++v) b.add_edge(u, v);
  }
  for (Vertex u = 0; u < clique; ++u) {
    for (Vertex w = clique; w < n; ++w) {
      if (below(rng, 100) < percent) b.add_edge(u, w);
    }
  }
  return std::move(b).build();
}

Graph gen_random(std::size_t n, unsigned percent, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (below(rng, 100) < percent) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

namespace {

constexpr std::size_t kMaxEnumerated = 8;

std::uint64_t encode(const Graph& g, const std::vector<Vertex>& label_of_position) {
  const auto n = g.size();
  std::uint64_t code = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      code = (code << 1) | (g.adjacent(label_of_position[i], label_of_position[j]) ? 1 : 0);
    }
  }
  return code;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const auto n = g.size();
  if (n > kMaxEnumerated) {
    throw InputError("canonical codes support at most 8 vertices, got " + std::to_string(n));
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  auto by_degree = [&](Vertex a, Vertex b) {
    return std::pair(g.degree(b), a) < std::pair(g.degree(a), b);
  };
  std::sort(order.begin(), order.end(), by_degree);

  // Degree blocks are permuted independently; next_permutation on each block
  // in odometer fashion covers their product.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && g.degree(order[j]) == g.degree(order[i])) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  auto best = encode(g, order);
  while (true) {
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      auto first = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
      auto last = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
      if (std::next_permutation(first, last)) break;
    }
    if (b == blocks.size()) break;
    best = std::min(best, encode(g, order));
  }
  return best;
}

Graph graph_from_code(std::size_t n, std::uint64_t code) {
  GraphBuilder b(n);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::size_t pos = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j, ++pos) {
      if ((code >> (bits - 1 - pos)) & 1) b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

std::vector<Graph> enumerate_graphs(std::size_t n) {
  if (n > kMaxEnumerated) {
    throw InputError("graph enumeration supports n <= 8, got " + std::to_string(n));
  }
  if (n == 0) return {Graph(0)};

  // Every graph on n vertices is a graph on n-1 vertices plus one vertex, so
  // extending each smaller class by every neighborhood reaches every class.
  std::vector<std::uint64_t> codes;
  for (const auto& base : enumerate_graphs(n - 1)) {
    const auto edges = base.edges();
    for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << (n - 1)); ++nbrs) {
      GraphBuilder b(n);
      for (const auto& [u, v] : edges) b.add_edge(u, v);
      for (Vertex u = 0; u + 1 < n; ++u) {
        if ((nbrs >> u) & 1) b.add_edge(u, n - 1);
      }
      codes.push_back(canonical_code(std::move(b).build()));
    }
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());

  std::vector<Graph> out;
  out.reserve(codes.size());
  for (auto code : codes) out.push_back(graph_from_code(n, code));
  return out;
}

void for_each_graph_up_to(std::size_t max_n, const std::function<void(const Graph&)>& visit) {
  for (std::size_t n = 0; n <= max_n; ++n) {
    for (const auto& g : enumerate_graphs(n)) visit(g);
  }
}

}  // namespace lincolor
