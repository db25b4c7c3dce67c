#include <doctest.h>

#include "metdim/decomposition.hpp"
#include "metdim/errors.hpp"
#include "metdim/oracle.hpp"

using namespace metdim;

TEST_CASE("is_locating_set") {
  std::vector<Vertex> end{0};
  CHECK(is_locating_set(path_graph(5), end).locating);

  auto c4 = is_locating_set(cycle_graph(4), end);
  CHECK_FALSE(c4.locating);
  CHECK(c4.unresolved == Edge{1, 3});

  std::vector<Vertex> two{0, 1};
  auto k4 = is_locating_set(complete_graph(4), two);
  CHECK_FALSE(k4.locating);
  CHECK(k4.unresolved == Edge{2, 3});

  std::vector<Vertex> bad{7};
  CHECK_THROWS_AS(is_locating_set(path_graph(5), bad), ArgumentError);
}

TEST_CASE("brute-force metric dimension") {
  for (int n = 2; n <= 9; ++n) {
    auto r = metric_dimension_bruteforce(path_graph(n));
    CHECK(r.dimension == 1);
    CHECK(r.witness == std::vector<Vertex>{0});
  }
  CHECK(metric_dimension_bruteforce(cycle_graph(6)).dimension == 2);
  for (int n = 3; n <= 6; ++n) CHECK(metric_dimension_bruteforce(complete_graph(n)).dimension == n - 1);
  CHECK(metric_dimension_bruteforce(spider_graph(3, 2)).dimension == 2);
}

TEST_CASE("twin pruning does not change the answer") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = random_connected_graph(9, 12 + static_cast<int>(seed % 8), seed);
    auto with = metric_dimension_bruteforce(g, {}, true);
    auto without = metric_dimension_bruteforce(g, {}, false);
    CHECK(with.dimension == without.dimension);
    CHECK(with.witness == without.witness);
  }
}

TEST_CASE("twin classes") {
  auto k4 = twin_classes(complete_graph(4));
  REQUIRE(k4.size() == 1);
  CHECK(k4[0].size() == 4);
  auto star = twin_classes(star_graph(3));
  REQUIRE(star.size() == 1);
  CHECK(star[0] == std::vector<Vertex>{1, 2, 3});
  CHECK(twin_classes(path_graph(5)).empty());
}

TEST_CASE("brute force reports bounds when the budget runs out") {
  Budget tiny;
  tiny.nodes = 3;
  try {
    metric_dimension_bruteforce(random_connected_graph(12, 20, 1), tiny);
    FAIL("expected budget exhaustion");
  } catch (const ResourceError& e) {
    CHECK(e.upper_bound() == 11);
    CHECK(e.lower_bound() >= 1);
  }
}

TEST_CASE("canonical locating set") {
  auto check = [](const Graph& g) {
    auto d = compute_branches(g);
    auto s = canonical_locating_set(d);
    CHECK(is_locating_set(g, s).locating);
    CHECK(static_cast<int>(s.size()) <= 3 * d.branch_count());
    return s;
  };
  auto p7 = check(path_graph(7));
  CHECK(p7.size() == 3);
  CHECK(p7.front() == 0);
  CHECK(check(spider_graph(3, 2)).size() <= 9);
  CHECK(check(cycle_graph(6)).size() >= 2);
  check(parse_edge_list("0 1\n1 2\n2 0\n2 3\n"));
  // two 4-cycles on junction 6: one neighbour of 6 per cycle leaves 1 and 3 tied
  auto bowtie = check(parse_edge_list("0 4\n0 6\n1 4\n1 6\n2 5\n2 6\n3 5\n3 6\n"));
  CHECK(bowtie == std::vector<Vertex>{0, 1, 2, 3, 6});
  // long branch whose endpoints are also adjacent: the midpoint is needed
  check(parse_edge_list("0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n0 7\n7 6\n6 8\n"));
  check(complete_graph(5));
}
