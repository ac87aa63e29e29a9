#include "doctest.h"
#include "skewmaps/catalog.hpp"
#include "skewmaps/graph.hpp"

using namespace skewmaps;

TEST_CASE("standard graphs") {
  const auto k222 = complete_multipartite(3, 2);
  CHECK(k222.vertex_count() == 6);
  CHECK(k222.edge_count() == 12);
  const auto q3 = hypercube(3);
  CHECK(q3.vertex_count() == 8);
  CHECK(q3.edge_count() == 12);
  CHECK(complete_bipartite(4).edge_count() == 16);
  CHECK(is_connected(q3));
  CHECK_FALSE(is_connected(graph_from_edges(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("isomorphism testing") {
  CHECK(graph_isomorphism(hypercube(3), hypercube(3)).has_value());
  CHECK_FALSE(graph_isomorphism(hypercube(3), complete_bipartite(4)).has_value());
  const auto c6 = graph_from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  const auto two_triangles = graph_from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_FALSE(graph_isomorphism(c6, two_triangles).has_value());
  const auto f = graph_isomorphism(c6, graph_from_edges(6, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 5}, {5, 0}}));
  REQUIRE(f.has_value());
  for (int u = 0; u < 6; ++u)
    for (int v : c6.adj[u]) CHECK(graph_from_edges(6, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 5}, {5, 0}}).has_edge((*f)[u], (*f)[v]));
}

TEST_CASE("Cayley graphs of named maps") {
  const auto g = dihedral(3);
  const CayleyMap octa(g, {g->delem(1, 0), g->delem(2, 0), g->delem(0, 1), g->delem(1, 1)});
  CHECK(graph_isomorphism(cayley_graph(octa), complete_multipartite(3, 2)).has_value());
  CHECK(graph_isomorphism(cayley_graph(build_family({Family::thm_main_2, 4})), hypercube(3)).has_value());
  CHECK(graph_isomorphism(cayley_graph(build_family({Family::map1, 6})), complete_bipartite(6)).has_value());
}
