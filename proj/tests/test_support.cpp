// Checks of the test-only corpora against independently known values.
#include <doctest.h>

#include <random>

#include "support/catalog.hpp"

using namespace metdim;

TEST_CASE("connected graph counts up to isomorphism") {
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) CHECK(testing::connected_graphs(n).size() == expected[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("all graphs up to isomorphism") {
  const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) CHECK(testing::all_graphs(n).size() == expected[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("canonical code ignores labels") {
  testing::Rows path{0b010, 0b101, 0b010};    // 0-1-2
  testing::Rows relabel{0b100, 0b100, 0b011};  // 0-2-1
  CHECK(testing::canonical_code(path) == testing::canonical_code(relabel));
  testing::Rows triangle{0b110, 0b101, 0b011};
  CHECK(testing::canonical_code(path) != testing::canonical_code(triangle));
}

TEST_CASE("low-branch generator respects its limits") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Graph g = testing::random_low_branch_graph(rng, 14, 4);
    CHECK(g.vertex_count() <= 14);
    CHECK(is_connected(g));
    CHECK(compute_branches(g).branch_count() <= 4);
  }
}
