#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clawmis/graph.hpp"
#include "clawmis/rational.hpp"

namespace clawmis {

// One row of the weight-spreading argument: u (from the reference solution)
// pays w(N(u,A))/2 to its neighborhood and sends the remainder
// w(u) - w(N(u,A))/2 to a heaviest neighbor in A (lowest id on ties).
struct ChargeEntry {
  int u = -1;
  VertexSet nbhd;          // N(u, A)
  Rational nbhd_weight;
  int heaviest = -1;       // receiver of the charge
  Rational charge;         // may be negative
};

struct ChargeTarget {
  int v = -1;
  VertexSet senders;       // u with heaviest == v and charge > 0
  Rational positive_charge;
};

struct ChargeReport {
  VertexSet a;
  VertexSet reference;
  std::vector<ChargeEntry> entries;   // one per u in reference, ascending
  std::vector<ChargeTarget> targets;  // one per v in a, ascending
  Rational reference_weight;
  Rational half_neighborhood_total;   // sum of w(N(u,A))/2
  Rational charge_total;              // sum of all charges, signed
  Rational positive_charge_total;
  // reference_weight == half_neighborhood_total + charge_total, exactly.
  bool identity_holds = false;
};

// Requires a and reference independent, and every u in reference to see a
// (i.e. u in a or adjacent to a member); throws std::invalid_argument else.
ChargeReport compute_charges(const ProblemInstance& inst, const VertexSet& a,
                             const VertexSet& reference);

struct ChargeBoundCheck {
  int v = -1;
  Rational positive_charge;
  Rational half_weight;
  bool ok = false;
};

// Checks positive_charge(v) <= w(v)/2 per target; guaranteed to hold whenever
// no claw improves the squared-weight potential of a.
struct ChargeBoundReport {
  std::vector<ChargeBoundCheck> per_target;
  bool all_ok = true;
};

ChargeBoundReport verify_charge_bound(const ProblemInstance& inst,
                                      const ChargeReport& charges);

// contribution(u, v) = max{0, (w^2(u) - w^2(N(u,A)\{v})) / w(v)} for
// v in N(u, A); how much of v's weight u can claim in the squared-weight
// accounting.
struct ContributionEntry {
  int u = -1;
  int v = -1;
  Rational contr;
};

struct ContributionTarget {
  int v = -1;
  Rational total;
  bool within_weight = false;  // total <= w(v); holds at local optima
};

struct ContributionSource {
  int u = -1;
  Rational total;
  Rational at_heaviest;   // contribution to the charge receiver n(u)
  Rational charge;        // charge(u, n(u))
  bool dominates_charge = false;  // at_heaviest >= 2 * charge when charge > 0
};

struct ContributionReport {
  std::vector<ContributionEntry> entries;  // all (u, v in N(u,A)), ascending
  std::vector<ContributionTarget> per_target;
  std::vector<ContributionSource> per_source;
  bool all_targets_ok = true;
  bool all_sources_ok = true;
};

ContributionReport compute_contributions(const ProblemInstance& inst,
                                         const VertexSet& a,
                                         const VertexSet& reference);

// Charge senders split by how the near-tight analysis sees them. single:
// weight within (1 +- sqrt(eps)) of its receiver and nearly no other
// neighborhood weight. double: two heavy neighbors of nearly equal weight
// and w(N(u,A)) just below 2 w(u).
enum class ChargeClass { single, double_vertex, unclassified };

struct ClassifiedSender {
  int u = -1;
  int v1 = -1;              // charge receiver n(u)
  std::optional<int> v2;    // heaviest of N(u,A) \ {v1}, lowest id on ties
  ChargeClass label = ChargeClass::unclassified;
};

struct Classification {
  Rational eps;
  Rational sqrt_eps;
  Rational delta;
  bool termination_certified = false;

  VertexSet payback;          // u in reference with w(N(u,A)) >= 3 w(u)
  std::vector<ClassifiedSender> senders;  // u with positive charge

  VertexSet near_tight;       // v in a with positive charge sum > (1-eps)/2 w(v)
  VertexSet all_double;       // near-tight v whose senders are all double
  VertexSet double_senders;   // union of sender sets over all_double
  VertexSet near_tight_rest;  // near_tight minus all_double
  VertexSet twins;            // the unique single sender of each rest vertex
  std::vector<std::pair<int, int>> twin_of;  // (v in rest, its single sender)

  Rational a_weight;
  Rational payback_weight;
  Rational near_tight_weight;
  Rational all_double_weight;
  Rational rest_weight;

  // The structural guarantees below are only promised once no bounded local
  // improvement exists; callers pass that certificate in.
  bool structure_applicable = false;
  bool structure_ok = true;
  std::vector<std::string> violations;
};

// Throws std::invalid_argument if eps has no rational square root (use the
// default eps = 1/5308416, whose root is 1/2304) or preconditions of
// compute_charges fail.
Classification classify(const ProblemInstance& inst, const VertexSet& a,
                        const VertexSet& reference, const Rational& eps,
                        const Rational& delta, bool termination_certified);

struct InequalityCheck {
  int index = 0;       // 1..11
  std::string text;
  Tri holds = Tri::unknown;
};

enum class ConstantsMode { exact, interval };

struct ConstantsReport {
  Rational eps;
  Rational delta;
  int d = 3;
  ConstantsMode mode = ConstantsMode::exact;
  std::optional<Rational> sqrt_eps;  // exact mode
  unsigned digits = 0;               // interval mode: precision that settled
  std::vector<InequalityCheck> checks;
  Rational eps_delta;
  Rational guarantee_shift;   // eps*delta/2; the factor is d/2 - this
  Rational approximation_factor;    // (d - eps*delta)/2
  bool all_hold = false;
};

// Evaluates the eleven inequalities the analysis needs from (eps, delta) at
// claw parameter d. Exact when sqrt(eps) is rational; otherwise certified
// interval arithmetic, refining precision until every check settles (checks
// that never settle stay Tri::unknown and fail all_hold).
ConstantsReport verify_constants(const Rational& eps, const Rational& delta, int d);

}  // namespace clawmis
