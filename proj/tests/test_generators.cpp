#include <doctest.h>

#include <stdexcept>

#include "clawmis/generators.hpp"
#include "clawmis/io.hpp"
#include "clawmis/oracle.hpp"
#include "clawmis/search.hpp"

using namespace clawmis;

TEST_CASE("berman_tight lays out values, singletons, then pairs") {
  TightInstance t = berman_tight(4);
  CHECK(t.instance.n == 9);
  CHECK(t.instance.edge_count == 9);
  CHECK(t.instance.d == 4);
  CHECK(t.a_side == VertexSet{0, 1, 2});
  CHECK(t.b_side == VertexSet{3, 4, 5, 6, 7, 8});
  CHECK(edge_list(t.instance) ==
        std::vector<std::pair<int, int>>{{0, 3},
                                         {0, 6},
                                         {0, 7},
                                         {1, 4},
                                         {1, 6},
                                         {1, 8},
                                         {2, 5},
                                         {2, 7},
                                         {2, 8}});
  for (int v = 0; v < t.instance.n; ++v) CHECK(t.instance.weight[v] == 1);
  CHECK(is_independent(t.instance, t.a_side));
  CHECK(is_independent(t.instance, t.b_side));
  CHECK(is_d_claw_free(t.instance, 4));
  CHECK(find_d_claw(t.instance, 3).has_value());
}

TEST_CASE("berman_tight scales d and accepts a weight") {
  TightInstance t3 = berman_tight(3, Rational(1, 2));
  CHECK(t3.instance.n == 5);
  CHECK(t3.instance.edge_count == 4);
  CHECK(t3.instance.weight[4] == Rational(1, 2));
  CHECK(exact_mwis(t3.instance).weight == Rational(3, 2));

  TightInstance t6 = berman_tight(6);
  CHECK(t6.instance.n == 5 + 5 + 10);
  CHECK(t6.b_side.size() == 15);

  CHECK_THROWS_AS(berman_tight(2), std::invalid_argument);
  CHECK_THROWS_AS(berman_tight(4, Rational(0)), std::invalid_argument);
}

TEST_CASE("the a-side trap holds for every d up to 8") {
  for (int d = 3; d <= 8; ++d) {
    TightInstance tight = berman_tight(d);
    CHECK(!find_claw_improvement(tight.instance, tight.a_side).has_value());
    auto escape = find_bounded_improvement(tight.instance, tight.a_side,
                                           default_size_bound(d));
    CHECK(escape.has_value());
  }
}

TEST_CASE("random_set_packing is a pure function of the seed") {
  auto range = std::make_pair(Rational(1), Rational(2));
  SetSystem a = random_set_packing(16, 12, 3, range, 42);
  SetSystem b = random_set_packing(16, 12, 3, range, 42);
  CHECK(serialize_set_system(a) == serialize_set_system(b));
  SetSystem c = random_set_packing(16, 12, 3, range, 43);
  CHECK(serialize_set_system(a) != serialize_set_system(c));

  CHECK(a.sets.size() == 16);
  CHECK(a.k == 3);
  for (const auto& s : a.sets) {
    CHECK(s.elements.size() >= 1);
    CHECK(s.elements.size() <= 3);
    CHECK(s.weight >= 1);
    CHECK(s.weight <= 2);
    // weights live on the 1000-step grid between the endpoints
    Rational steps = (s.weight - 1) * 1000;
    CHECK(denominator(steps) == 1);
  }
}

TEST_CASE("random_set_packing validates parameters") {
  auto range = std::make_pair(Rational(1), Rational(2));
  CHECK_THROWS_AS(random_set_packing(4, 2, 3, range, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_set_packing(4, 6, 0, range, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_set_packing(-1, 6, 2, range, 1), std::invalid_argument);
  CHECK_THROWS_AS(
      random_set_packing(4, 6, 2, {Rational(0), Rational(1)}, 1),
      std::invalid_argument);
  CHECK_THROWS_AS(
      random_set_packing(4, 6, 2, {Rational(2), Rational(1)}, 1),
      std::invalid_argument);
}

TEST_CASE("clique_union builds disjoint cliques with d = 2") {
  ProblemInstance inst = clique_union({3, 2, 4}, {Rational(1), Rational(2)}, 7);
  CHECK(inst.n == 9);
  CHECK(inst.d == 2);
  CHECK(inst.edge_count == 3 + 1 + 6);
  CHECK(inst.adjacent(0, 1));
  CHECK(inst.adjacent(5, 8));
  CHECK(!inst.adjacent(2, 3));
  CHECK(!inst.adjacent(4, 5));
  CHECK(is_d_claw_free(inst, 2));

  // the optimum takes the heaviest vertex of every clique
  Rational expect = 0;
  for (auto [lo, hi] : {std::make_pair(0, 3), {3, 5}, {5, 9}}) {
    Rational best = 0;
    for (int v = lo; v < hi; ++v)
      if (inst.weight[v] > best) best = inst.weight[v];
    expect += best;
  }
  CHECK(exact_mwis(inst).weight == expect);

  CHECK_THROWS_AS(clique_union({}, {Rational(1), Rational(1)}, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(clique_union({0}, {Rational(1), Rational(1)}, 1),
                  std::invalid_argument);
}

TEST_CASE("random_claw_free rejection sampling") {
  auto hit = random_claw_free(5, Rational(1), 2, 3, 1);
  REQUIRE(hit.instance.has_value());  // K5 has no pair of nonadjacent vertices
  CHECK(hit.attempts == 1);
  CHECK(hit.instance->edge_count == 10);

  // sparse graphs almost surely contain an induced two-talon star
  auto miss = random_claw_free(12, Rational(1, 2), 2, 3, 1);
  CHECK(!miss.instance.has_value());
  CHECK(miss.attempts == 1);

  auto found = random_claw_free(10, Rational(1, 4), 4, 1, 100,
                                {Rational(1), Rational(2)});
  REQUIRE(found.instance.has_value());
  CHECK(is_d_claw_free(*found.instance, 4));
  CHECK(found.attempts >= 1);

  auto again = random_claw_free(10, Rational(1, 4), 4, 1, 100,
                                {Rational(1), Rational(2)});
  REQUIRE(again.instance.has_value());
  CHECK(serialize_graph(*again.instance) == serialize_graph(*found.instance));

  CHECK_THROWS_AS(random_claw_free(31, Rational(1, 2), 3, 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(random_claw_free(5, Rational(3, 2), 3, 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(random_claw_free(5, Rational(1, 2), 3, 1, 0),
                  std::invalid_argument);
}
