#pragma once

#include <cstdint>
#include <optional>

#include "clawmis/graph.hpp"

namespace clawmis {

// Brute-force sizes the reference tools refuse to exceed.
struct OracleLimits {
  int max_vertices = 30;              // exact optimum
  int improvement_max_vertices = 20;  // exhaustive improvement sweep
  int max_size_bound = 12;
};

struct OracleResult {
  VertexSet optimum;  // lexicographically least among maximum-weight sets
  Rational weight;
  std::uint64_t nodes = 0;  // branch-and-bound nodes visited
};

// Exact maximum weight independent set; throws std::invalid_argument beyond
// limits.max_vertices.
OracleResult exact_mwis(const ProblemInstance& inst, const OracleLimits& limits = {});

// First independent X (subsets of V in lexicographic order, members of `a`
// included) with |X| <= size_bound whose swap raises the squared weight of a,
// or nullopt once the full sweep finds none. Deliberately a plain subset walk
// with no shared code or pruning tricks from the search module, so that the
// two can check each other.
std::optional<VertexSet> exhaustive_improvement(const ProblemInstance& inst,
                                                const VertexSet& a, int size_bound,
                                                const OracleLimits& limits = {});

// weight(optimum) / weight(a); throws if a weighs zero but the optimum does not.
Rational oracle_ratio(const ProblemInstance& inst, const VertexSet& a,
                      const OracleLimits& limits = {});

}  // namespace clawmis
