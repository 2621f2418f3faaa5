#include "clawmis/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace clawmis {

ProblemInstance make_instance(int n, int d, std::vector<Rational> weights,
                              const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (d < 2) throw std::invalid_argument("claw parameter must be >= 2");
  if (static_cast<int>(weights.size()) != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " weights, got " +
                                std::to_string(weights.size()));
  for (int v = 0; v < n; ++v)
    if (weights[v] <= 0)
      throw std::invalid_argument("weight of vertex " + std::to_string(v) +
                                  " must be positive");

  ProblemInstance inst;
  inst.n = n;
  inst.d = d;
  inst.weight = std::move(weights);
  inst.adj.assign(n, {});
  inst.adj_mask.assign(n, Bitset(n));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: {" + std::to_string(u) +
                                  "," + std::to_string(v) + "}");
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (inst.adj_mask[u][v])
      throw std::invalid_argument("duplicate edge {" + std::to_string(u) + "," +
                                  std::to_string(v) + "}");
    inst.adj_mask[u].set(v);
    inst.adj_mask[v].set(u);
    inst.adj[u].push_back(v);
    inst.adj[v].push_back(u);
    ++inst.edge_count;
  }
  for (auto& nb : inst.adj) std::sort(nb.begin(), nb.end());
  return inst;
}

std::vector<std::pair<int, int>> edge_list(const ProblemInstance& inst) {
  std::vector<std::pair<int, int>> out;
  out.reserve(inst.edge_count);
  for (int u = 0; u < inst.n; ++u)
    for (int v : inst.adj[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void check_vertex_set(const ProblemInstance& inst, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= inst.n)
      throw std::invalid_argument("vertex id out of range: " + std::to_string(s[i]));
    if (i > 0 && s[i - 1] >= s[i])
      throw std::invalid_argument("vertex set not sorted/duplicate-free at id " +
                                  std::to_string(s[i]));
  }
}

VertexSet neighborhood(const ProblemInstance& inst, const VertexSet& u,
                       const VertexSet& w) {
  check_vertex_set(inst, u);
  check_vertex_set(inst, w);
  Bitset covered(inst.n);
  for (int x : u) {
    covered.set(x);
    covered |= inst.adj_mask[x];
  }
  VertexSet out;
  for (int y : w)
    if (covered[y]) out.push_back(y);
  return out;
}

bool is_independent(const ProblemInstance& inst, const VertexSet& s) {
  check_vertex_set(inst, s);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (inst.adjacent(s[i], s[j])) return false;
  return true;
}

Rational set_weight(const ProblemInstance& inst, const VertexSet& s) {
  check_vertex_set(inst, s);
  Rational total = 0;
  for (int v : s) total += inst.weight[v];
  return total;
}

Rational weight_sq(const ProblemInstance& inst, const VertexSet& s) {
  check_vertex_set(inst, s);
  Rational total = 0;
  for (int v : s) total += inst.weight[v] * inst.weight[v];
  return total;
}

namespace {

// Lexicographically least independent subset of `cands` (ascending) of size
// `want`, all adjacent to the center already fixed by the caller.
bool grow_talons(const ProblemInstance& inst, const std::vector<int>& cands,
                 std::size_t from, int want, VertexSet& talons) {
  if (want == 0) return true;
  for (std::size_t i = from; i + static_cast<std::size_t>(want) <= cands.size(); ++i) {
    int v = cands[i];
    bool clash = false;
    for (int t : talons)
      if (inst.adjacent(t, v)) { clash = true; break; }
    if (clash) continue;
    talons.push_back(v);
    if (grow_talons(inst, cands, i + 1, want - 1, talons)) return true;
    talons.pop_back();
  }
  return false;
}

}  // namespace

std::optional<Claw> find_d_claw(const ProblemInstance& inst, int talon_count) {
  if (talon_count < 1) throw std::invalid_argument("talon count must be >= 1");
  for (int c = 0; c < inst.n; ++c) {
    if (static_cast<int>(inst.adj[c].size()) < talon_count) continue;
    VertexSet talons;
    if (grow_talons(inst, inst.adj[c], 0, talon_count, talons))
      return Claw{c, talons};
  }
  return std::nullopt;
}

}  // namespace clawmis
