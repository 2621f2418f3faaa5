#include "clawmis/oracle.hpp"

#include <stdexcept>
#include <string>

namespace clawmis {

namespace {

struct MwisSearch {
  const ProblemInstance& inst;
  std::vector<Rational> suffix;   // weight of vertices >= i
  std::vector<int> conflicts;     // chosen neighbors, per vertex
  VertexSet current, best;
  Rational current_weight = 0, best_weight = 0;
  std::uint64_t nodes = 0;

  explicit MwisSearch(const ProblemInstance& i) : inst(i) {
    suffix.assign(inst.n + 1, Rational(0));
    for (int v = inst.n; v-- > 0;) suffix[v] = suffix[v + 1] + inst.weight[v];
    conflicts.assign(inst.n, 0);
  }

  // Include-first depth-first walk with a strict-replacement rule: the first
  // maximum-weight set reached is the lexicographically least one, and the
  // suffix-sum bound only discards branches that cannot strictly beat it.
  void walk(int v) {
    ++nodes;
    if (v == inst.n) {
      if (current_weight > best_weight) {
        best_weight = current_weight;
        best = current;
      }
      return;
    }
    if (current_weight + suffix[v] <= best_weight) return;
    if (conflicts[v] == 0) {
      current.push_back(v);
      current_weight += inst.weight[v];
      for (int u : inst.adj[v]) ++conflicts[u];
      walk(v + 1);
      for (int u : inst.adj[v]) --conflicts[u];
      current_weight -= inst.weight[v];
      current.pop_back();
    }
    walk(v + 1);
  }
};

}  // namespace

OracleResult exact_mwis(const ProblemInstance& inst, const OracleLimits& limits) {
  if (inst.n > limits.max_vertices)
    throw std::invalid_argument("exact optimum refused: " + std::to_string(inst.n) +
                                " vertices exceed the cap of " +
                                std::to_string(limits.max_vertices));
  MwisSearch search(inst);
  search.walk(0);
  return OracleResult{std::move(search.best), std::move(search.best_weight),
                      search.nodes};
}

std::optional<VertexSet> exhaustive_improvement(const ProblemInstance& inst,
                                                const VertexSet& a, int size_bound,
                                                const OracleLimits& limits) {
  if (inst.n > limits.improvement_max_vertices)
    throw std::invalid_argument(
        "exhaustive improvement refused: " + std::to_string(inst.n) +
        " vertices exceed the cap of " + std::to_string(limits.improvement_max_vertices));
  if (size_bound < 1) throw std::invalid_argument("size bound must be >= 1");
  if (size_bound > limits.max_size_bound)
    throw std::invalid_argument("size bound " + std::to_string(size_bound) +
                                " exceeds the cap of " +
                                std::to_string(limits.max_size_bound));
  if (!is_independent(inst, a))
    throw std::invalid_argument("current solution is not an independent set");

  // cover[v]: positions of a inside N(v, a) — a vertex of a covers itself.
  std::vector<std::vector<int>> cover(inst.n);
  for (std::size_t p = 0; p < a.size(); ++p) {
    cover[a[p]].push_back(static_cast<int>(p));
    for (int u : inst.adj[a[p]]) cover[u].push_back(static_cast<int>(p));
  }

  std::vector<int> cnt(a.size(), 0);
  Rational w2x = 0, w2n = 0;
  VertexSet chosen;

  auto covered_sq = [&](int p) {
    return inst.weight[a[p]] * inst.weight[a[p]];
  };

  // Lexicographic subset walk: every prefix is itself a visited subset, so
  // the first improving set in this order is returned.
  auto walk = [&](auto&& self, int from) -> bool {
    if (static_cast<int>(chosen.size()) == size_bound) return false;
    for (int v = from; v < inst.n; ++v) {
      bool clash = false;
      for (int c : chosen)
        if (inst.adjacent(c, v)) { clash = true; break; }
      if (clash) continue;
      chosen.push_back(v);
      w2x += inst.weight[v] * inst.weight[v];
      for (int p : cover[v])
        if (cnt[p]++ == 0) w2n += covered_sq(p);
      if (w2x > w2n) return true;
      if (self(self, v + 1)) return true;
      for (int p : cover[v])
        if (--cnt[p] == 0) w2n -= covered_sq(p);
      w2x -= inst.weight[v] * inst.weight[v];
      chosen.pop_back();
    }
    return false;
  };

  if (walk(walk, 0)) return chosen;
  return std::nullopt;
}

Rational oracle_ratio(const ProblemInstance& inst, const VertexSet& a,
                      const OracleLimits& limits) {
  Rational wa = set_weight(inst, a);
  OracleResult opt = exact_mwis(inst, limits);
  if (wa == 0) {
    if (opt.weight == 0) return 1;
    throw std::invalid_argument("cannot form a ratio against a zero-weight solution");
  }
  return opt.weight / wa;
}

}  // namespace clawmis
