#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "clawmis/graph.hpp"
#include "clawmis/search.hpp"

namespace clawmis {

struct ScalingConfig {
  Rational scale_n = 2;  // the N > 1 that trades accuracy for iteration count
};

// Weights rescaled so the greedy solution weighs scale_n * n, then floored;
// zero-floor vertices are dropped. Integer weights make every improvement
// raise the potential by >= 1, so the iteration count is polynomial at the
// cost of a factor scale_n/(scale_n - 1) in the guarantee.
struct ScaledInstance {
  Rational factor;                  // applied multiplier, scale_n * n / w(anchor)
  VertexSet anchor;                 // greedy solution of the original instance
  std::vector<BigInt> floor_weight; // per original vertex
  VertexSet survivors;              // original ids with floor_weight >= 1
  std::vector<int> original_id;     // truncated id -> original id
  ProblemInstance truncated;
};

ScaledInstance scale_truncate(const ProblemInstance& inst, const ScalingConfig& cfg);

struct ScaledRunStats {
  std::uint64_t iterations = 0;
  Rational iteration_bound;  // (d-1)^2 * scale_n^2 * n^2
  bool iterations_within_bound = true;
  // every recorded gain was a positive integer (the potential argument)
  bool potential_integral = true;
  Rational guarantee_factor;  // scale_n / (scale_n - 1), the accuracy cost
  Certificate certificate = Certificate::not_applicable;
};

// scale_truncate, run the configured search on the truncated instance from
// the empty set, and map the result back to original ids with original
// weights.
std::pair<Solution, ScaledRunStats> solve_scaled(const ProblemInstance& inst,
                                                 const ScalingConfig& scfg,
                                                 const SearchConfig& cfg);

}  // namespace clawmis
