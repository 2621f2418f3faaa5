#pragma once

#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <utility>
#include <vector>

#include "clawmis/rational.hpp"

namespace clawmis {

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;

using Bitset = boost::dynamic_bitset<>;

// Vertex-weighted undirected graph together with the claw parameter d that
// the approximation guarantees are stated against. d is carried data: nothing
// checks the graph is actually d-claw-free unless you call find_d_claw.
struct ProblemInstance {
  int n = 0;
  int d = 2;
  std::vector<Rational> weight;        // positive, size n
  std::vector<std::vector<int>> adj;   // sorted neighbor lists
  std::vector<Bitset> adj_mask;        // adjacency matrix rows
  std::size_t edge_count = 0;

  bool adjacent(int u, int v) const { return adj_mask[u][v]; }
};

// Validates and builds an instance: ids in range, weights positive, edges
// irreflexive and duplicate-free. Throws std::invalid_argument.
ProblemInstance make_instance(int n, int d, std::vector<Rational> weights,
                              const std::vector<std::pair<int, int>>& edges);

// Sorted edge list (u < v), for serialization and round-trips.
std::vector<std::pair<int, int>> edge_list(const ProblemInstance& inst);

// Throws std::invalid_argument unless s is sorted, duplicate-free and in range.
void check_vertex_set(const ProblemInstance& inst, const VertexSet& s);

// N(U, W) = { w in W : w in U or w has a neighbor in U }. Note a vertex of W
// that itself lies in U is always included.
VertexSet neighborhood(const ProblemInstance& inst, const VertexSet& u,
                       const VertexSet& w);

bool is_independent(const ProblemInstance& inst, const VertexSet& s);

Rational set_weight(const ProblemInstance& inst, const VertexSet& s);

// Sum of squared weights over s.
Rational weight_sq(const ProblemInstance& inst, const VertexSet& s);

// A claw: an induced star. center == nullopt encodes the degenerate one-vertex
// claw whose talon set is a single vertex.
struct Claw {
  std::optional<int> center;
  VertexSet talons;
};

// First (lowest center, then lexicographically least talon set) induced star
// with talon_count >= 1 pairwise nonadjacent talons, or nullopt if none exists.
std::optional<Claw> find_d_claw(const ProblemInstance& inst, int talon_count);

inline bool is_d_claw_free(const ProblemInstance& inst, int talon_count) {
  return !find_d_claw(inst, talon_count).has_value();
}

}  // namespace clawmis
