#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "clawmis/graph.hpp"
#include "clawmis/set_system.hpp"

namespace clawmis {

// The worst case for talon-only improvement steps: a bipartite graph whose
// top side A = one vertex per value 1..d-1 is immune to claw swaps while the
// bottom side (all singletons and unordered pairs of values) is the optimum,
// d/2 times heavier under unit weights. Escaping A needs a swap like
// { {i}, {i,j}, {j} }, which no claw contains.
struct TightInstance {
  ProblemInstance instance;
  VertexSet a_side;  // ids 0..d-2; vertex i stands for value i+1
  VertexSet b_side;  // ids d-1..2d-3 are singletons {1}..{d-1}; pairs follow
                     // from id 2(d-1) in lexicographic order
};

// d >= 3; every vertex gets the same (positive) weight.
TightInstance berman_tight(int d, const Rational& weight = 1);

// num_sets sets with sizes uniform in 1..k, elements drawn without
// replacement from universe_size elements, weights uniform on a 1000-step
// grid spanning weight_range (a constant when the endpoints coincide).
SetSystem random_set_packing(int num_sets, int universe_size, int k,
                             std::pair<Rational, Rational> weight_range,
                             std::uint64_t seed);

// Disjoint cliques with the given sizes (d = 2), random weights as above.
ProblemInstance clique_union(const std::vector<int>& sizes,
                             std::pair<Rational, Rational> weight_range,
                             std::uint64_t seed);

struct RandomClawFreeOutcome {
  std::optional<ProblemInstance> instance;  // nullopt when every draw failed
  int attempts = 0;                         // draws consumed
};

// Rejection-samples G(n, edge_prob) until a d-claw-free graph appears, at
// most max_attempts times; running out of attempts is a reported outcome,
// not an error. n is capped at 30 to keep the freeness check affordable.
RandomClawFreeOutcome random_claw_free(
    int n, const Rational& edge_prob, int d, std::uint64_t seed, int max_attempts,
    std::pair<Rational, Rational> weight_range = {1, 1});

}  // namespace clawmis
