#include "lincolor/strong_ordering.hpp"

#include "lincolor/class_recognition.hpp"

namespace lincolor {

namespace {

std::vector<std::size_t> positions_of(const std::vector<Vertex>& sigma) {
  std::vector<std::size_t> pos(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) pos[sigma[i]] = i;
  return pos;
}

}  // namespace

OrderingResult strong_elimination_ordering(const Graph& g) {
  if (auto check = is_strongly_chordal(g); !check) {
    throw ClassMembershipError("graph is not strongly chordal", std::move(check.stuck));
  }
  const auto n = g.size();
  OrderingResult out;
  out.independent = VertexSet(n);
  out.iteration_of.assign(n, 0);

  auto alive = g.all_vertices();
  auto candidates_for_independent = g.all_vertices();
  // below[v] holds every u with u < v in the accumulated partial order.
  std::vector<VertexSet> below(n, VertexSet(n));

  auto refine = [&] {
    for (Vertex u : alive) {
      const auto nu = g.closed_neighborhood(u) & alive;
      for (Vertex v : alive) {
        if (u != v && nu.is_proper_subset_of(g.closed_neighborhood(v) & alive)) below[v].insert(u);
      }
    }
  };
  auto minimal_in = [&](Vertex v, const VertexSet& among) {
    auto others = among;
    others.erase(v);
    return !below[v].intersects(others);
  };

  std::size_t pass = 0;
  while (!alive.empty()) {
    ++pass;
    VertexSet simple(n);
    for (Vertex v : alive) {
      if (is_simple_within(g, v, alive)) simple.insert(v);
    }
    while (!simple.empty()) {
      refine();
      Vertex pick = n;
      for (Vertex v : simple) {
        if (minimal_in(v, alive)) {
          pick = v;
          break;
        }
      }
      if (pick == n) {
        ++out.fallback_picks;
        for (Vertex v : simple) {
          if (minimal_in(v, simple)) {
            pick = v;
            break;
          }
        }
        if (pick == n) pick = simple.front();
      }

      out.sigma.push_back(pick);
      out.iteration_of[pick] = pass;
      alive.erase(pick);
      simple.erase(pick);
      if (candidates_for_independent.contains(pick)) {
        out.independent.insert(pick);
        candidates_for_independent.erase(pick);
        candidates_for_independent -= g.neighbors(pick);
      }
    }
  }
  return out;
}

LinearColoring kappa_coloring(const Graph& g, const OrderingResult& ord,
                              bool require_p6_free_strongly_chordal) {
  const auto n = g.size();
  if (ord.sigma.size() != n || ord.independent.universe() != n) {
    throw InputError("ordering does not belong to this graph");
  }
  if (require_p6_free_strongly_chordal) {
    if (auto sc = is_strongly_chordal(g); !sc) {
      throw ClassMembershipError("kappa coloring needs a strongly chordal graph", std::move(sc.stuck));
    }
    if (auto p6 = find_induced(g, gen_path(6))) {
      VertexSet where(n);
      for (Vertex v : p6->mapping) where.insert(v);
      throw ClassMembershipError("kappa coloring needs a P6-free graph", std::move(where));
    }
  }

  const auto pos = positions_of(ord.sigma);
  LinearColoring out;
  out.color.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = ord.sigma[i];
    if (!ord.independent.contains(v) || out.color[v] != 0) continue;
    const auto c = ++out.k;
    out.color[v] = c;
    for (Vertex w : g.neighbors(v)) {
      if (pos[w] > i && out.color[w] == 0) out.color[w] = c;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (out.color[v] == 0) {
      throw std::logic_error("vertex " + std::to_string(v) +
                             " has no earlier independent neighbor; ordering lacks the covering property");
    }
  }
  return out;
}

bool simple_vertices_lead(const Graph& g, const OrderingResult& ord) {
  bool seen_non_simple = false;
  for (Vertex v : ord.sigma) {
    const bool simple = is_simple(g, v);
    if (simple && seen_non_simple) return false;
    seen_non_simple = seen_non_simple || !simple;
  }
  return true;
}

bool independent_set_covers_forward(const Graph& g, const OrderingResult& ord) {
  const auto pos = positions_of(ord.sigma);
  for (Vertex v = 0; v < g.size(); ++v) {
    if (ord.independent.contains(v)) continue;
    bool covered = false;
    for (Vertex w : g.neighbors(v)) {
      if (ord.independent.contains(w) && pos[w] < pos[v]) covered = true;
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace lincolor
