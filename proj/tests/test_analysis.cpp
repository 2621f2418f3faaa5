#include <doctest.h>

#include <stdexcept>

#include "clawmis/analysis.hpp"
#include "clawmis/generators.hpp"
#include "clawmis/oracle.hpp"
#include "clawmis/search.hpp"

using namespace clawmis;

TEST_CASE("charges split reference weight into halves plus remainders") {
  TightInstance tight = berman_tight(4);
  const ProblemInstance& inst = tight.instance;
  ChargeReport rep = compute_charges(inst, tight.a_side, tight.b_side);

  CHECK(rep.reference_weight == 6);
  CHECK(rep.half_neighborhood_total == Rational(9, 2));
  CHECK(rep.charge_total == Rational(3, 2));
  CHECK(rep.positive_charge_total == Rational(3, 2));
  CHECK(rep.identity_holds);

  REQUIRE(rep.entries.size() == 6);
  const ChargeEntry& singleton = rep.entries[0];  // u = 3, the set {1}
  CHECK(singleton.u == 3);
  CHECK(singleton.nbhd == VertexSet{0});
  CHECK(singleton.heaviest == 0);
  CHECK(singleton.charge == Rational(1, 2));
  const ChargeEntry& pair = rep.entries[3];  // u = 6, the set {1,2}
  CHECK(pair.u == 6);
  CHECK(pair.nbhd == VertexSet{0, 1});
  CHECK(pair.heaviest == 0);  // tie broken to the lowest id
  CHECK(pair.charge == 0);

  REQUIRE(rep.targets.size() == 3);
  CHECK(rep.targets[0].v == 0);
  CHECK(rep.targets[0].senders == VertexSet{3});  // zero charges don't register
  CHECK(rep.targets[0].positive_charge == Rational(1, 2));

  ChargeBoundReport bound = verify_charge_bound(inst, rep);
  CHECK(bound.all_ok);
  CHECK(bound.per_target[0].half_weight == Rational(1, 2));
  CHECK(bound.per_target[0].positive_charge == bound.per_target[0].half_weight);
}

TEST_CASE("the charge identity is algebraic, the bound is not") {
  // an edge with a far heavier endpoint left out of the solution
  ProblemInstance inst = make_instance(2, 2, {1, 10}, {{0, 1}});
  ChargeReport rep = compute_charges(inst, {0}, {1});
  CHECK(rep.identity_holds);
  CHECK(rep.entries[0].charge == Rational(19, 2));
  CHECK(!verify_charge_bound(inst, rep).all_ok);
  // and indeed a swap fixes it
  CHECK(find_claw_improvement(inst, {0}).has_value());
}

TEST_CASE("compute_charges rejects bad inputs") {
  ProblemInstance path = make_instance(3, 3, {1, 1, 1}, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(compute_charges(path, {0, 1}, {2}), std::invalid_argument);
  CHECK_THROWS_AS(compute_charges(path, {0}, {0, 2}), std::invalid_argument);
  // reference vertex 2 sees nothing of {0}
  CHECK_THROWS_AS(compute_charges(path, {0}, {2}), std::invalid_argument);
  CHECK_NOTHROW(compute_charges(path, {0, 2}, {1}));
}

TEST_CASE("contributions stay within each target's weight at local optima") {
  TightInstance tight = berman_tight(4);
  const ProblemInstance& inst = tight.instance;
  ContributionReport rep = compute_contributions(inst, tight.a_side, tight.b_side);

  CHECK(rep.all_targets_ok);
  CHECK(rep.all_sources_ok);
  REQUIRE(rep.per_target.size() == 3);
  CHECK(rep.per_target[0].v == 0);
  CHECK(rep.per_target[0].total == 1);  // only the singleton {1} claims vertex 0

  REQUIRE(rep.per_source.size() == 6);
  const ContributionSource& singleton = rep.per_source[0];  // u = 3
  CHECK(singleton.u == 3);
  CHECK(singleton.at_heaviest == 1);
  CHECK(singleton.charge == Rational(1, 2));
  CHECK(singleton.dominates_charge);  // 1 >= 2 * (1/2)
  const ContributionSource& pair = rep.per_source[3];  // u = 6
  CHECK(pair.u == 6);
  CHECK(pair.at_heaviest == 0);
  CHECK(pair.total == 0);
  CHECK(pair.dominates_charge);
}

TEST_CASE("contribution bounds fail where a swap exists") {
  ProblemInstance inst = make_instance(2, 2, {1, 10}, {{0, 1}});
  ContributionReport rep = compute_contributions(inst, {0}, {1});
  CHECK(!rep.all_targets_ok);
  CHECK(rep.per_target[0].total == 100);  // (10^2 - 0) / 1
}

TEST_CASE("classification of the worst-case trap") {
  TightInstance tight = berman_tight(4);
  const ProblemInstance& inst = tight.instance;
  Rational eps(1, 5308416), delta(1, 6);
  Classification cls = classify(inst, tight.a_side, tight.b_side, eps, delta,
                                /*termination_certified=*/false);

  CHECK(cls.sqrt_eps == Rational(1, 2304));
  CHECK(cls.payback.empty());
  REQUIRE(cls.senders.size() == 3);  // the three singletons send charge
  for (const auto& s : cls.senders) CHECK(s.label == ChargeClass::single);
  CHECK(cls.senders[0].u == 3);
  CHECK(cls.senders[0].v1 == 0);
  CHECK(!cls.senders[0].v2.has_value());

  CHECK(cls.near_tight == VertexSet{0, 1, 2});
  CHECK(cls.all_double.empty());
  CHECK(cls.near_tight_rest == VertexSet{0, 1, 2});
  CHECK(cls.twins == VertexSet{3, 4, 5});
  CHECK(cls.twin_of ==
        std::vector<std::pair<int, int>>{{0, 3}, {1, 4}, {2, 5}});
  CHECK(cls.a_weight == 3);
  CHECK(cls.near_tight_weight == 3);
  CHECK(cls.rest_weight == 3);

  // the trap is claw-optimal but not swap-terminal, so nothing is promised
  CHECK(!cls.structure_applicable);
  CHECK(cls.structure_ok);
}

TEST_CASE("classification at a certified terminal solution") {
  TightInstance tight = berman_tight(4);
  const ProblemInstance& inst = tight.instance;
  SearchConfig cfg;
  auto [sol, trace] = run_local_search(inst, cfg);
  REQUIRE(trace.certificate == Certificate::locally_optimal);
  REQUIRE(sol.vertices == tight.b_side);

  Classification cls = classify(inst, sol.vertices, tight.b_side,
                                Rational(1, 5308416), Rational(1, 6), true);
  CHECK(cls.structure_applicable);
  CHECK(cls.structure_ok);
  CHECK(cls.violations.empty());
  // reference == solution: every vertex charges itself half its weight
  CHECK(cls.near_tight == tight.b_side);
  CHECK(cls.twins == tight.b_side);
}

TEST_CASE("certified structure holds at terminal solutions of random instances") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    SetSystem sys =
        random_set_packing(12, 9, 3, {Rational(1), Rational(2)}, seed);
    ProblemInstance inst = conflict_graph(sys);
    SearchConfig cfg;
    auto [sol, trace] = run_local_search(inst, cfg);
    REQUIRE(trace.certificate == Certificate::locally_optimal);

    VertexSet reference = exact_mwis(inst).optimum;
    ChargeReport charges = compute_charges(inst, sol.vertices, reference);
    CHECK(charges.identity_holds);
    // keeping only the positive remainders can only overshoot the reference
    CHECK(charges.half_neighborhood_total + charges.positive_charge_total >=
          charges.reference_weight);
    // every v in A is counted by at most d-1 reference neighborhoods
    CHECK(charges.half_neighborhood_total <=
          Rational(inst.d - 1, 2) * sol.weight);
    CHECK(charges.reference_weight <= Rational(inst.d, 2) * sol.weight);
    CHECK(verify_charge_bound(inst, charges).all_ok);
    ContributionReport contrib =
        compute_contributions(inst, sol.vertices, reference);
    CHECK(contrib.all_targets_ok);
    CHECK(contrib.all_sources_ok);
    Classification cls = classify(inst, sol.vertices, reference,
                                  Rational(1, 5308416), Rational(1, 6), true);
    CHECK(cls.structure_applicable);
    CHECK(cls.structure_ok);
  }
}

TEST_CASE("the single and double conditions exclude each other") {
  Rational eps(1, 5308416);
  Rational s(1, 2304);  // sqrt(eps)
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    SetSystem sys =
        random_set_packing(12, 9, 3, {Rational(1), Rational(2)}, seed);
    ProblemInstance inst = conflict_graph(sys);
    SearchConfig cfg;
    auto [sol, trace] = run_local_search(inst, cfg);
    VertexSet reference = exact_mwis(inst).optimum;
    ChargeReport charges = compute_charges(inst, sol.vertices, reference);
    Classification cls = classify(inst, sol.vertices, reference, eps,
                                  Rational(1, 6), true);

    for (const ClassifiedSender& snd : cls.senders) {
      const ChargeEntry* e = nullptr;
      for (const auto& entry : charges.entries)
        if (entry.u == snd.u) e = &entry;
      REQUIRE(e != nullptr);

      const Rational& wu = inst.weight[snd.u];
      const Rational& wv1 = inst.weight[snd.v1];
      Rational ratio = wu / wv1;
      bool near = Rational(1) - s <= ratio && ratio <= Rational(1) + s;
      bool single_pred = near && e->nbhd_weight <= (Rational(1) + s) * wv1;
      bool double_pred = false;
      if (snd.v2) {
        Rational r2 = inst.weight[*snd.v2] / wv1;
        double_pred = near && Rational(1) - s <= r2 && r2 <= 1 &&
                      (Rational(2) - s) * wv1 <= e->nbhd_weight &&
                      e->nbhd_weight < 2 * wu;
      }
      CHECK(!(single_pred && double_pred));
      if (snd.label == ChargeClass::single) CHECK(single_pred);
      if (snd.label == ChargeClass::double_vertex) CHECK(double_pred);
    }
  }
}

TEST_CASE("classify rejects eps without a rational root") {
  TightInstance tight = berman_tight(4);
  CHECK_THROWS_AS(classify(tight.instance, tight.a_side, tight.b_side,
                           Rational(1, 2), Rational(1, 6), false),
                  std::invalid_argument);
  CHECK_THROWS_AS(classify(tight.instance, tight.a_side, tight.b_side,
                           Rational(0), Rational(1, 6), false),
                  std::invalid_argument);
}

TEST_CASE("the default constants satisfy every inequality, exactly") {
  for (int d = 3; d <= 10; ++d) {
    ConstantsReport rep =
        verify_constants(Rational(1, 5308416), Rational(1, 6), d);
    CHECK(rep.mode == ConstantsMode::exact);
    CHECK(rep.sqrt_eps == Rational(1, 2304));
    REQUIRE(rep.checks.size() == 11);
    for (const auto& c : rep.checks) {
      INFO("d=", d, " check ", c.index, ": ", c.text);
      CHECK(c.holds == Tri::yes);
    }
    CHECK(rep.all_hold);
    CHECK(rep.eps_delta == Rational(1, 31850496));
    CHECK(rep.guarantee_shift == Rational(1, 63700992));
    CHECK(rep.approximation_factor == (Rational(d) - Rational(1, 31850496)) / 2);
  }
  ConstantsReport d3 = verify_constants(Rational(1, 5308416), Rational(1, 6), 3);
  CHECK(rational_to_string(d3.approximation_factor) == "95551487/63700992");
}

TEST_CASE("interval arithmetic settles irrational eps") {
  ConstantsReport rep = verify_constants(Rational(1, 2), Rational(1, 6), 4);
  CHECK(rep.mode == ConstantsMode::interval);
  CHECK(!rep.sqrt_eps.has_value());
  CHECK(rep.digits >= 16);
  for (const auto& c : rep.checks) CHECK(c.holds != Tri::unknown);
  CHECK(!rep.all_hold);  // sqrt(1/2) is far too large for the near-tight bounds
}

TEST_CASE("oversized constants are caught") {
  ConstantsReport rep = verify_constants(Rational(1), Rational(1, 6), 4);
  CHECK(!rep.all_hold);
  CHECK_THROWS_AS(verify_constants(Rational(0), Rational(1, 6), 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_constants(Rational(1, 4), Rational(0), 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_constants(Rational(1, 4), Rational(1, 6), 1),
                  std::invalid_argument);
}
