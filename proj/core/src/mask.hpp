#pragma once

// Word-sized vertex sets for the exhaustive oracles. Limited to 64 vertices.

#include "lincolor/graph.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace lincolor::detail {

using Mask = std::uint64_t;

inline constexpr std::size_t kMaxMaskVertices = 64;

inline Mask bit(Vertex v) { return Mask{1} << v; }
inline int popcount(Mask m) { return std::popcount(m); }
inline Vertex lowest(Mask m) { return static_cast<Vertex>(std::countr_zero(m)); }
inline Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Open neighborhoods as masks. Throws InputError above 64 vertices.
std::vector<Mask> adjacency_masks(const Graph& g);

Mask to_mask(const VertexSet& s);
VertexSet to_vertex_set(Mask m, std::size_t universe);

/// Closed neighborhood of v inside the vertex subset `within`.
inline Mask closed_within(const std::vector<Mask>& adj, Vertex v, Mask within) {
  return (adj[v] | bit(v)) & within;
}

/// Complement adjacency restricted to `within`.
std::vector<Mask> complement_masks(const std::vector<Mask>& adj, Mask within);

/// All subsets of [0,n) by increasing popcount, then by numeric value.
std::vector<Mask> subsets_by_size(std::size_t n);

int chromatic_number(const std::vector<Mask>& adj, Mask within);
int clique_number(const std::vector<Mask>& adj, Mask within);
int independence_number(const std::vector<Mask>& adj, Mask within);
/// Minimum partition of `within` into classes whose closed neighborhoods
/// (taken inside `within`) are pairwise comparable.
int lambda_number(const std::vector<Mask>& adj, Mask within);

}  // namespace lincolor::detail
