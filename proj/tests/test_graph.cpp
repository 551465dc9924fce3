#include <doctest.h>

#include "lincolor/graph.hpp"
#include "lincolor/patterns.hpp"

using namespace lincolor;

TEST_CASE("from_edge_list builds exactly the given edges") {
  auto empty = from_edge_list(2, {});
  CHECK(empty.size() == 2);
  CHECK(empty.edge_count() == 0);

  auto c4 = from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(c4.edge_count() == 4);
  CHECK(c4.adjacent(0, 3));
  CHECK(c4.adjacent(3, 0));
  CHECK_FALSE(c4.adjacent(0, 2));
  CHECK(c4 == gen_cycle(4));

  auto dup = from_edge_list(4, {{0, 1}, {1, 0}});
  CHECK(dup.edge_count() == 1);
  CHECK(dup.edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("from_edge_list rejects bad pairs and names them") {
  CHECK_THROWS_WITH_AS(from_edge_list(3, {{0, 3}}), doctest::Contains("(0,3)"), InputError);
  CHECK_THROWS_WITH_AS(from_edge_list(3, {{1, 1}}), doctest::Contains("self-loop"), InputError);
}

TEST_CASE("complement") {
  auto c4 = gen_cycle(4);
  auto co = complement(c4);
  CHECK(co.edges() == std::vector<Edge>{{0, 2}, {1, 3}});
  CHECK(complement(gen_complete(3)).edge_count() == 0);
  CHECK(complement(complement(gen_path(4))) == gen_path(4));
  CHECK(complement(Graph(0)).size() == 0);
}

TEST_CASE("induced_subgraph relabels in label order") {
  auto c5 = gen_cycle(5);
  auto sub = induced_subgraph(c5, VertexSet(5, {0, 1, 2}));
  CHECK(sub.graph == gen_path(3));
  CHECK(sub.original == std::vector<Vertex>{0, 1, 2});

  auto wrap = induced_subgraph(c5, VertexSet(5, {0, 3, 4}));
  // 3-4 and 4-0 survive: relabeled 1-2 and 2-0.
  CHECK(wrap.graph.edges() == std::vector<Edge>{{0, 2}, {1, 2}});

  CHECK(induced_subgraph(c5, c5.all_vertices()).graph == c5);
  CHECK(induced_subgraph(c5, VertexSet(5)).graph.size() == 0);
  CHECK_THROWS_AS(induced_subgraph(c5, VertexSet(7, {6})), InputError);
}

TEST_CASE("closed_neighborhood") {
  auto p4 = gen_path(4);
  CHECK(closed_neighborhood(p4, 1).to_vector() == std::vector<Vertex>{0, 1, 2});
  auto k4 = gen_complete(4);
  for (Vertex v = 0; v < 4; ++v) CHECK(closed_neighborhood(k4, v).size() == 4);
  auto iso = Graph(3);
  CHECK(closed_neighborhood(iso, 2).to_vector() == std::vector<Vertex>{2});
  CHECK_THROWS_AS(closed_neighborhood(iso, 3), InputError);
}

TEST_CASE("distance") {
  auto p4 = gen_path(4);
  CHECK(distance(p4, 0, 3) == 3);
  CHECK(distance(p4, 2, 2) == 0);
  CHECK(distance(gen_2k2(), 0, 2) == kUnreachable);
  CHECK_THROWS_AS(distance(p4, 0, 4), InputError);
}

TEST_CASE("complement identities hold on every graph up to 6 vertices") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      auto co = complement(g);
      CHECK(complement(co) == g);
      for (Vertex v = 0; v < n; ++v) {
        CHECK(co.closed_neighborhood(v) == g.all_vertices() - g.neighbors(v));
      }
      // Induced subgraphs commute with complement; labels line up exactly.
      for (std::uint32_t m = 0; m < (1u << n); ++m) {
        VertexSet a(n);
        for (Vertex v = 0; v < n; ++v) {
          if (m >> v & 1) a.insert(v);
        }
        CHECK(induced_subgraph(co, a).graph == complement(induced_subgraph(g, a).graph));
      }
    }
  }
}
