#include "lincolor/path_cover.hpp"

#include <functional>

namespace lincolor {

namespace {

constexpr std::size_t kFree = static_cast<std::size_t>(-1);

}  // namespace

Matching max_bipartite_matching(std::size_t left_count, std::size_t right_count,
                                std::span<const Edge> edges) {
  std::vector<std::vector<Vertex>> out(left_count);
  for (const auto& [l, r] : edges) {
    if (l >= left_count || r >= right_count) {
      throw InputError("bipartite edge (" + std::to_string(l) + "," + std::to_string(r) +
                       ") out of range");
    }
    out[l].push_back(r);
  }

  std::vector<std::size_t> match_left(left_count, kFree);
  std::vector<std::size_t> match_right(right_count, kFree);
  std::vector<char> seen(right_count);

  std::function<bool(std::size_t)> augment = [&](std::size_t l) {
    for (auto r : out[l]) {
      if (seen[r]) continue;
      seen[r] = 1;
      if (match_right[r] == kFree || augment(match_right[r])) {
        match_left[l] = r;
        match_right[r] = l;
        return true;
      }
    }
    return false;
  };

  for (std::size_t l = 0; l < left_count; ++l) {
    std::fill(seen.begin(), seen.end(), 0);
    augment(l);
  }

  Matching m;
  for (std::size_t l = 0; l < left_count; ++l) {
    if (match_left[l] != kFree) m.pairs.emplace_back(l, match_left[l]);
  }
  return m;
}

PathCover min_path_cover(const NeighborhoodDag& dag) {
  const auto n = dag.size();
  const auto edges = dag.edges();
  const auto matching = max_bipartite_matching(n, n, edges);

  std::vector<std::size_t> next(n, kFree);
  std::vector<char> has_pred(n, 0);
  for (const auto& [u, v] : matching.pairs) {
    next[u] = v;
    has_pred[v] = 1;
  }

  PathCover cover;
  for (Vertex start = 0; start < n; ++start) {
    if (has_pred[start]) continue;
    auto& path = cover.paths.emplace_back();
    for (auto v = start; v != kFree; v = next[v]) path.push_back(v);
  }
  return cover;
}

}  // namespace lincolor
