#include <doctest.h>

#include <random>

#include "metdim/errors.hpp"
#include "metdim/feasibility.hpp"

using namespace metdim;

TEST_CASE("bounded even variable") {
  FeasibilitySystem sys;
  int t = sys.add_variable(0, 5);
  sys.add({{t, -1}}, Relation::LessEqual, -2);  // t >= 2
  sys.add_parity(t, 0);
  auto sol = integer_feasibility(sys);
  REQUIRE(sol.has_value());
  CHECK(((*sol)[0] == 2 || (*sol)[0] == 4));
  CHECK(sys.satisfied_by(*sol));
}

TEST_CASE("contradictory bounds") {
  FeasibilitySystem sys;
  int t = sys.add_variable(-10, 10);
  sys.add({{t, -1}}, Relation::LessEqual, -1);
  sys.add({{t, 1}}, Relation::LessEqual, 0);
  CHECK_FALSE(integer_feasibility(sys).has_value());
}

TEST_CASE("constant constraints are decided at once") {
  FeasibilitySystem sys;
  int t = sys.add_variable(0, 3);
  sys.add({{t, 1}, {t, -1}}, Relation::LessEqual, 0);
  CHECK_FALSE(sys.contradiction);
  sys.add({{t, 2}, {t, -2}}, Relation::Equal, 1);
  CHECK(sys.contradiction);
  CHECK_FALSE(integer_feasibility(sys).has_value());
}

TEST_CASE("affine parity") {
  FeasibilitySystem sys;
  int t = sys.add_variable(0, 9);
  sys.add_affine_parity(t, 1, 3, 0);  // t + 3 even
  auto sol = integer_feasibility(sys);
  REQUIRE(sol);
  CHECK((*sol)[0] % 2 == 1);

  FeasibilitySystem even;
  int u = even.add_variable(0, 9);
  even.add_affine_parity(u, 2, 1, 0);  // 2u + 1 is never even
  CHECK(even.contradiction);
}

TEST_CASE("parity conflicts and mixed coefficients") {
  FeasibilitySystem sys;
  int a = sys.add_variable(0, 20), b = sys.add_variable(0, 20);
  sys.add({{a, 2}, {b, -1}}, Relation::Equal, 1);  // b = 2a - 1
  sys.add_parity(b, 0);
  CHECK_FALSE(integer_feasibility(sys).has_value());

  FeasibilitySystem ok;
  a = ok.add_variable(0, 20);
  b = ok.add_variable(0, 20);
  ok.add({{a, 2}, {b, -1}}, Relation::Equal, 1);
  ok.add({{a, -1}}, Relation::LessEqual, -4);
  auto sol = integer_feasibility(ok);
  REQUIRE(sol);
  CHECK((*sol)[1] == 2 * (*sol)[0] - 1);
  CHECK((*sol)[0] >= 4);
}

TEST_CASE("unknown variables are rejected") {
  FeasibilitySystem sys;
  sys.add_variable(0, 1);
  CHECK_THROWS_AS(sys.add({{3, 1}}, Relation::LessEqual, 0), ArgumentError);
  CHECK_THROWS_AS(sys.add_parity(-1, 0), ArgumentError);
}

TEST_CASE("agreement with exhaustive search on random three-variable systems") {
  std::mt19937_64 rng(11);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int round = 0; round < 300; ++round) {
    FeasibilitySystem sys;
    for (int v = 0; v < 3; ++v) {
      int lo = pick(0, 10);
      sys.add_variable(lo, lo + pick(0, 10));
    }
    for (int c = pick(1, 5); c > 0; --c) {
      int x = pick(0, 2), y = pick(0, 2);
      sys.add({{x, pick(-1, 1)}, {y, pick(-1, 1)}}, pick(0, 3) == 0 ? Relation::Equal : Relation::LessEqual, pick(-8, 8));
    }
    if (pick(0, 1)) sys.add_parity(pick(0, 2), pick(0, 1));
    bool exists = false;
    for (long long a = sys.domains[0].lo; a <= sys.domains[0].hi && !exists; ++a)
      for (long long b = sys.domains[1].lo; b <= sys.domains[1].hi && !exists; ++b)
        for (long long c = sys.domains[2].lo; c <= sys.domains[2].hi && !exists; ++c) exists = sys.satisfied_by({a, b, c});
    auto sol = integer_feasibility(sys);
    CHECK(sol.has_value() == exists);
    if (sol) CHECK(sys.satisfied_by(*sol));
  }
}
