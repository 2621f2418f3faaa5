#pragma once

#include <string>
#include <vector>

#include "clawmis/graph.hpp"
#include "clawmis/rational.hpp"

namespace clawmis {

struct WeightedSet {
  Rational weight;
  std::vector<int> elements;  // sorted, duplicate-free, ids in [0, universe_size)
};

// Weighted collection of sets of size <= k over a dense element universe.
// element_names keeps the original tokens when parsed from text (empty for
// programmatically built systems).
struct SetSystem {
  int k = 1;
  int universe_size = 0;
  std::vector<WeightedSet> sets;
  std::vector<std::string> element_names;
};

// Validates invariants (set sizes in [1, k], weights positive, element ids in
// range). Throws std::invalid_argument.
SetSystem make_set_system(int k, int universe_size, std::vector<WeightedSet> sets);

// One vertex per set, edges between intersecting sets. The resulting instance
// carries weight(i) = sys.sets[i].weight and d = k + 1; a maximum weight
// independent set of it is a maximum weight packing of the system.
ProblemInstance conflict_graph(const SetSystem& sys);

// Interprets a vertex set of conflict_graph(sys) as set indices, checking
// pairwise disjointness and total weight. Throws std::logic_error if the
// chosen sets overlap or total_weight disagrees with their weight sum.
std::vector<int> lift_solution(const SetSystem& sys, const VertexSet& chosen,
                               const Rational& total_weight);

}  // namespace clawmis
