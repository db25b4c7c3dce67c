#include <doctest.h>

#include "metdim/errors.hpp"
#include "metdim/graph.hpp"

using namespace metdim;

TEST_CASE("parse_edge_list builds and deduplicates") {
  Graph g = parse_edge_list("0 1\n1 2");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);

  Graph h = parse_edge_list("0 1\n0 1");
  CHECK(h.vertex_count() == 2);
  CHECK(h.edge_count() == 1);
}

TEST_CASE("parse_edge_list rejects bad input with a line number") {
  CHECK_THROWS_AS(parse_edge_list("0 0"), ParseError);
  try {
    parse_edge_list("# header\n0 1\n1 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_edge_list("n 2\n0 5\n"), ParseError);
}

TEST_CASE("parse_edge_list honours the vertex count header and comments") {
  Graph g = parse_edge_list("# isolated vertex 3\nn 4\n\n0 1\n1 2\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.degree(3) == 0);
}

TEST_CASE("edge list round trip") {
  Graph g = spider_graph(3, 2);
  CHECK(parse_edge_list(to_edge_list(g)) == g);
  Graph lone = path_graph(1);
  CHECK(parse_edge_list(to_edge_list(lone)) == lone);
}

TEST_CASE("GraphBuilder validates endpoints") {
  GraphBuilder b(3);
  CHECK_THROWS_AS(b.add_edge(1, 1), ArgumentError);
  CHECK_THROWS_AS(b.add_edge(0, 3), ArgumentError);
  CHECK_THROWS_AS(b.add_edge(-1, 0), ArgumentError);
}

TEST_CASE("bfs distances") {
  auto row = [](const Graph& g, Vertex s) {
    auto d = bfs_distances(g, s);
    std::vector<int> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) out.push_back(d[v]);
    return out;
  };
  CHECK(row(path_graph(3), 0) == std::vector<int>{0, 1, 2});
  CHECK(row(complete_graph(3), 0) == std::vector<int>{0, 1, 1});
  CHECK(row(cycle_graph(5), 0) == std::vector<int>{0, 1, 2, 2, 1});
}

TEST_CASE("unreachable distances are not numbers") {
  Graph g = parse_edge_list("0 1\n2 3\n");
  auto d = bfs_distances(g, 0);
  CHECK_FALSE(d.get(2).has_value());
  CHECK_THROWS_AS(d[2], UnreachableError);
  CHECK_THROWS_AS(DistanceMatrix{g}, DisconnectedError);
  CHECK_THROWS_AS(bfs_distances(g, 4), ArgumentError);
}

TEST_CASE("connected components") {
  CHECK(connected_components(parse_edge_list("n 3\n")).size() == 3);
  CHECK(connected_components(cycle_graph(4)).size() == 1);
  auto two = connected_components(parse_edge_list("0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n"));
  REQUIRE(two.size() == 2);
  CHECK(two[0].size() == 3);
  CHECK(two[1].size() == 3);
}

TEST_CASE("generators") {
  CHECK(complete_graph(4).edge_count() == 6);
  Graph sp = spider_graph(3, 2);
  CHECK(sp.vertex_count() == 7);
  CHECK(sp.edge_count() == 6);
  CHECK(sp.degree(0) == 3);
  Graph p1 = path_graph(1);
  CHECK(p1.vertex_count() == 1);
  CHECK(p1.edge_count() == 0);
  CHECK(star_graph(6).degree(0) == 6);
  CHECK(subdivided_complete_graph(4, 1).vertex_count() == 4 + 6);
  CHECK_THROWS_AS(cycle_graph(2), ArgumentError);
  CHECK(generate_from_spec("spider 3x2") == sp);
  CHECK(generate_from_spec("spider 3,2") == sp);
  CHECK_THROWS_AS(generate_from_spec("petersen 10"), ArgumentError);
}

TEST_CASE("random connected graphs are connected, sized and reproducible") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Graph g = random_connected_graph(12, 15, seed);
    CHECK(g.vertex_count() == 12);
    CHECK(g.edge_count() == 15);
    CHECK(is_connected(g));
    CHECK(g == random_connected_graph(12, 15, seed));
  }
  CHECK_THROWS_AS(random_connected_graph(5, 3, 1), ArgumentError);
  CHECK_THROWS_AS(random_connected_graph(5, 11, 1), ArgumentError);
}

TEST_CASE("induced subgraph relabels in the given order") {
  Graph c = cycle_graph(6);
  std::vector<Vertex> keep{0, 1, 2};
  Graph h = induced_subgraph(c, keep);
  CHECK(h.vertex_count() == 3);
  CHECK(h.edge_count() == 2);
}
