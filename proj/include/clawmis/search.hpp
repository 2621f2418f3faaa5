#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "clawmis/graph.hpp"

namespace clawmis {

// claw_only: candidate improvements are talon sets of claws centered anywhere
// (plus single vertices); guarantees weight(OPT) <= d/2 * weight(A) at local
// optima of the squared-weight potential.
// bounded: candidate improvements are any connected independent sets of size
// at most the configured bound; sharpens the factor to (d - eps*delta)/2.
enum class Strategy { greedy_only, claw_only, bounded };

enum class PivotRule { first_canonical, best_gain };

struct SearchConfig {
  Strategy strategy = Strategy::bounded;
  int size_bound = 0;  // 0 = default_size_bound(d); only used by bounded
  PivotRule pivot = PivotRule::first_canonical;
  std::optional<std::uint64_t> max_iterations;
};

// (d-1)^2 + (d-1): large enough that the factor-(d - eps*delta)/2 analysis
// goes through, small enough that one search pass is polynomial.
int default_size_bound(int d);

enum class ImprovementKind { zero_claw, claw, bounded_set };

// A set X (disjoint from A) whose insertion, after evicting displaced =
// N(X, A), strictly increases the squared-weight potential by gain.
struct Improvement {
  ImprovementKind kind;
  std::optional<int> center;  // claw center when kind == claw
  VertexSet x;
  VertexSet displaced;
  Rational gain;  // weight_sq(x) - weight_sq(displaced), > 0
};

// Independent set with cached totals.
struct Solution {
  VertexSet vertices;
  Rational weight;
  Rational weight_sq;
};

// Validates independence and caches the totals. Throws std::invalid_argument.
Solution make_solution(const ProblemInstance& inst, VertexSet vertices);

// weight_sq(X) - weight_sq(N(X, A)); positive iff swapping X in helps.
Rational gain(const ProblemInstance& inst, const VertexSet& a, const VertexSet& x);

// Searches single vertices, then talon sets of claws in canonical order
// (centers ascending; talon sets by size, then lexicographically). Candidate
// talons are restricted to V \ A, which loses no improvement: dropping a
// vertex of X ∩ A changes weight_sq(X) and weight_sq(N(X, A)) by the same
// amount. Returns the first improving set (pivot first_canonical) or the
// largest-gain one with canonical tie-breaking (best_gain).
std::optional<Improvement> find_claw_improvement(
    const ProblemInstance& inst, const VertexSet& a,
    PivotRule pivot = PivotRule::first_canonical);

// Same contract over connected independent sets X ⊆ V \ A with
// 1 <= |X| <= size_bound. Connectivity is taken in the auxiliary sense used
// by the factor analysis: x, y are linked if they are adjacent or share a
// neighbor in A. (A disconnected improving set would have an improving
// component, so completeness of none-results is preserved.)
std::optional<Improvement> find_bounded_improvement(
    const ProblemInstance& inst, const VertexSet& a, int size_bound,
    PivotRule pivot = PivotRule::first_canonical);

// Replaces displaced by x, re-deriving displaced = N(x, A) and the gain;
// throws std::logic_error if the improvement is stale (was computed against a
// different A) or not strictly improving.
Solution apply_improvement(const ProblemInstance& inst, const Solution& sol,
                           const Improvement& imp);

// Maximal independent set, repeatedly taking the heaviest vertex (lowest id
// on ties) and discarding its neighborhood.
Solution greedy(const ProblemInstance& inst);

enum class Certificate { locally_optimal, iteration_capped, not_applicable };

struct IterationRecord {
  Improvement improvement;
  Rational weight_sq_after;
};

struct Trace {
  std::vector<IterationRecord> iterations;
  Certificate certificate = Certificate::not_applicable;
};

// Empty start (or the given warm start), then improvement steps until no
// candidate improves the squared-weight potential or max_iterations is hit.
// strategy greedy_only ignores warm_start and just returns greedy(inst) with
// certificate not_applicable.
std::pair<Solution, Trace> run_local_search(
    const ProblemInstance& inst, const SearchConfig& cfg,
    const std::optional<VertexSet>& warm_start = std::nullopt);

}  // namespace clawmis
