#pragma once

#include "lincolor/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace lincolor {

/// Induced embedding: mapping[p] is the host vertex playing pattern vertex p.
struct Occurrence {
  std::vector<Vertex> mapping;
};

/// First induced copy of `pattern` in `host`, trying host vertices in label
/// order. Edges and non-edges are both preserved.
std::optional<Occurrence> find_induced(const Graph& host, const Graph& pattern);

/// True when `occ` is an injective map preserving edges and non-edges.
bool is_induced_embedding(const Graph& host, const Graph& pattern, const Occurrence& occ);

/// Shortest chordless cycle of length >= 5. The returned mapping lists the
/// cycle in order.
std::optional<Occurrence> find_hole(const Graph& host);
/// Hole of the complement: an induced complement-of-C_m, m >= 5.
std::optional<Occurrence> find_antihole(const Graph& host);

Graph gen_cycle(std::size_t n);
Graph gen_path(std::size_t n);
Graph gen_complete(std::size_t n);
/// Center 0 joined to leaves 1..n-1.
Graph gen_star(std::size_t n);
/// Two disjoint edges, 0-1 and 2-3.
Graph gen_2k2();

// Sun graphs use u_i = i-1 and w_i = k+i-1 for i = 1..k; w_i is adjacent to
// u_i and u_{i-1} (indices mod k). W is independent.
Graph incomplete_k_sun(std::size_t k);
/// Incomplete k-sun with U made complete.
Graph k_sun(std::size_t k);

struct SunOccurrence {
  std::size_t k;
  Occurrence occurrence;
};

/// Smallest k in [3, k_max] for which host contains an induced k-sun.
std::optional<SunOccurrence> find_k_sun(const Graph& host, std::size_t k_max);

/// Vertex i (i >= 1) joins as dominating when dominating[i] is true, isolated
/// otherwise. dominating[0] is ignored.
Graph threshold_from_choices(const std::vector<bool>& dominating);
Graph gen_threshold(std::size_t n, std::uint64_t seed);

/// Comparability graph of a random rooted forest (each vertex adjacent to all
/// of its ancestors). Always (P4, C4)-free.
Graph gen_quasi_threshold(std::size_t n, std::uint64_t seed);

/// Closed intervals [lo, hi] on a line; vertices adjacent when they intersect.
Graph interval_graph(const std::vector<std::pair<int, int>>& intervals);
/// Random interval graph, hence strongly chordal.
Graph gen_strongly_chordal(std::size_t n, std::uint64_t seed);

/// Split graph: clique on 0..clique-1, independent set on the rest, each
/// clique-independent pair joined with probability percent / 100.
Graph gen_split(std::size_t clique, std::size_t independent, unsigned percent, std::uint64_t seed);

/// G(n, p) with p = percent / 100.
Graph gen_random(std::size_t n, unsigned percent, std::uint64_t seed);

/// Canonical code of a graph with at most 8 vertices: the smallest upper-
/// triangle adjacency encoding over relabelings that list vertices by
/// non-increasing degree. Two graphs are isomorphic iff their codes match.
std::uint64_t canonical_code(const Graph& g);

/// Decodes a canonical code back into the representative graph.
Graph graph_from_code(std::size_t n, std::uint64_t code);

/// One representative per isomorphism class on n <= 8 vertices, ordered by
/// canonical code. Throws InputError above 8.
std::vector<Graph> enumerate_graphs(std::size_t n);

/// Streams enumerate_graphs(0..max_n).
void for_each_graph_up_to(std::size_t max_n, const std::function<void(const Graph&)>& visit);

}  // namespace lincolor
