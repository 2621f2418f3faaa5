#include "clawmis/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace clawmis {

int default_size_bound(int d) {
  if (d < 2) throw std::invalid_argument("claw parameter must be >= 2");
  return (d - 1) * (d - 1) + (d - 1);
}

namespace {

// Squared weights scaled by lcm(denominators)^2: integer-valued, order- and
// sign-compatible with rational gains, cheaper to accumulate in inner loops.
struct SqScale {
  std::vector<BigInt> sq;
};

SqScale scale_squares(const ProblemInstance& inst) {
  BigInt l = 1;
  for (const auto& w : inst.weight) l = boost::multiprecision::lcm(l, denominator(w));
  SqScale s;
  s.sq.reserve(inst.n);
  for (const auto& w : inst.weight) {
    BigInt scaled = numerator(w) * (l / denominator(w));
    s.sq.push_back(scaled * scaled);
  }
  return s;
}

void require_independent(const ProblemInstance& inst, const VertexSet& a) {
  if (!is_independent(inst, a))
    throw std::invalid_argument("current solution is not an independent set");
}

// Enumerates independent subsets of a fixed candidate list in canonical order
// (size-major, then lexicographic by candidate index), maintaining the scaled
// squared weight of the subset and of the covered part of A.
struct SwapEnumerator {
  const ProblemInstance& inst;
  const VertexSet& a;
  const SqScale& sc;
  PivotRule pivot;
  bool need_connected = false;

  std::vector<int> cand;                // candidate vertex ids, ascending
  std::vector<Bitset> acov;             // candidate -> covered positions of a
  std::vector<BigInt> csq;              // candidate -> scaled square
  std::vector<BigInt> suffix_max;       // max csq over indices >= i
  std::vector<Bitset> aux;              // conflict-graph-of-swap links
  std::vector<BigInt> a_sq;             // position of a -> scaled square

  std::vector<int> cnt;                 // coverage multiplicity per a-position
  std::vector<int> chosen;              // candidate indices, increasing
  BigInt w2x = 0, w2n = 0;

  bool found = false;
  VertexSet best_x, best_displaced;
  BigInt best_gain = 0;

  SwapEnumerator(const ProblemInstance& inst_, const VertexSet& a_,
                 const SqScale& sc_, PivotRule pivot_)
      : inst(inst_), a(a_), sc(sc_), pivot(pivot_) {
    a_sq.reserve(a.size());
    for (int v : a) a_sq.push_back(sc.sq[v]);
    cnt.assign(a.size(), 0);
  }

  void set_candidates(std::vector<int> c) {
    cand = std::move(c);
    const std::size_t m = cand.size();
    acov.assign(m, Bitset(a.size()));
    csq.clear();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t p = 0; p < a.size(); ++p)
        if (inst.adjacent(cand[i], a[p])) acov[i].set(p);
      csq.push_back(sc.sq[cand[i]]);
    }
    suffix_max.assign(m + 1, 0);
    for (std::size_t i = m; i-- > 0;)
      suffix_max[i] = std::max(suffix_max[i + 1], csq[i]);
    if (need_connected) {
      aux.assign(m, Bitset(m));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
          if (inst.adjacent(cand[i], cand[j]) || (acov[i] & acov[j]).any()) {
            aux[i].set(j);
            aux[j].set(i);
          }
    }
  }

  void push(std::size_t ci) {
    w2x += csq[ci];
    for (std::size_t p = acov[ci].find_first(); p != Bitset::npos;
         p = acov[ci].find_next(p))
      if (cnt[p]++ == 0) w2n += a_sq[p];
    chosen.push_back(static_cast<int>(ci));
  }

  void pop(std::size_t ci) {
    chosen.pop_back();
    for (std::size_t p = acov[ci].find_first(); p != Bitset::npos;
         p = acov[ci].find_next(p))
      if (--cnt[p] == 0) w2n -= a_sq[p];
    w2x -= csq[ci];
  }

  bool connected() const {
    if (chosen.size() <= 1) return true;
    Bitset in_set(cand.size());
    for (int ci : chosen) in_set.set(static_cast<std::size_t>(ci));
    Bitset seen(cand.size());
    std::vector<int> stack = {chosen[0]};
    seen.set(static_cast<std::size_t>(chosen[0]));
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      Bitset next = aux[static_cast<std::size_t>(x)] & in_set & ~seen;
      for (std::size_t p = next.find_first(); p != Bitset::npos; p = next.find_next(p)) {
        seen.set(p);
        stack.push_back(static_cast<int>(p));
      }
    }
    return seen.count() == chosen.size();
  }

  // Gain a subtree must beat before it is worth exploring.
  const BigInt& prune_floor() const {
    static const BigInt zero = 0;
    return (pivot == PivotRule::best_gain && found) ? best_gain : zero;
  }

  void record() {
    found = true;
    best_gain = w2x - w2n;
    best_x.clear();
    for (int ci : chosen) best_x.push_back(cand[static_cast<std::size_t>(ci)]);
    best_displaced.clear();
    for (std::size_t p = 0; p < a.size(); ++p)
      if (cnt[p] > 0) best_displaced.push_back(a[p]);
  }

  // Returns true when the caller should stop enumerating entirely.
  bool leaf() {
    if (w2x - w2n <= prune_floor()) return false;
    if (need_connected && !connected()) return false;
    record();
    return pivot == PivotRule::first_canonical;
  }

  bool dfs(std::size_t from, int remaining) {
    if (remaining == 0) return leaf();
    for (std::size_t i = from; i + static_cast<std::size_t>(remaining) <= cand.size();
         ++i) {
      bool clash = false;
      for (int cj : chosen)
        if (inst.adjacent(cand[static_cast<std::size_t>(cj)], cand[i])) {
          clash = true;
          break;
        }
      if (clash) continue;
      push(i);
      BigInt cap = w2x - w2n + BigInt(remaining - 1) * suffix_max[i + 1];
      if (cap > prune_floor() && dfs(i + 1, remaining - 1)) {
        pop(i);
        return true;
      }
      pop(i);
    }
    return false;
  }

  // Sizes lo..hi in increasing order; true = stop (first_canonical hit).
  bool run_sizes(int lo, int hi) {
    hi = std::min<int>(hi, static_cast<int>(cand.size()));
    for (int s = lo; s <= hi; ++s)
      if (dfs(0, s)) return true;
    return false;
  }
};

Improvement finish_improvement(const ProblemInstance& inst, ImprovementKind kind,
                               std::optional<int> center, VertexSet x,
                               VertexSet displaced) {
  Rational g = weight_sq(inst, x) - weight_sq(inst, displaced);
  return Improvement{kind, center, std::move(x), std::move(displaced), std::move(g)};
}

}  // namespace

Rational gain(const ProblemInstance& inst, const VertexSet& a, const VertexSet& x) {
  check_vertex_set(inst, a);
  if (!is_independent(inst, x))
    throw std::invalid_argument("candidate set is not independent");
  return weight_sq(inst, x) - weight_sq(inst, neighborhood(inst, x, a));
}

std::optional<Improvement> find_claw_improvement(const ProblemInstance& inst,
                                                 const VertexSet& a, PivotRule pivot) {
  require_independent(inst, a);
  SqScale sc = scale_squares(inst);
  Bitset in_a(inst.n);
  for (int v : a) in_a.set(v);

  SwapEnumerator en(inst, a, sc, pivot);

  // Degenerate one-vertex claws first: any v outside A qualifies.
  std::vector<int> singles;
  for (int v = 0; v < inst.n; ++v)
    if (!in_a[v]) singles.push_back(v);
  en.set_candidates(std::move(singles));
  bool stop = en.run_sizes(1, 1);
  std::optional<int> best_center;  // nullopt while the best is a one-vertex set

  if (!stop) {
    // Talon sets of size >= 2 around each possible center.
    for (int c = 0; c < inst.n && !stop; ++c) {
      std::vector<int> talon_cands;
      for (int v : inst.adj[c])
        if (!in_a[v]) talon_cands.push_back(v);
      if (talon_cands.size() < 2) continue;
      bool had = en.found;
      BigInt prev_gain = en.best_gain;
      en.set_candidates(std::move(talon_cands));
      stop = en.run_sizes(2, static_cast<int>(en.cand.size()));
      if (en.found && (!had || en.best_gain > prev_gain || stop)) best_center = c;
    }
  }

  if (!en.found) return std::nullopt;
  ImprovementKind kind =
      best_center.has_value() ? ImprovementKind::claw : ImprovementKind::zero_claw;
  return finish_improvement(inst, kind, best_center, en.best_x, en.best_displaced);
}

std::optional<Improvement> find_bounded_improvement(const ProblemInstance& inst,
                                                    const VertexSet& a, int size_bound,
                                                    PivotRule pivot) {
  require_independent(inst, a);
  if (size_bound < 1) throw std::invalid_argument("size bound must be >= 1");
  SqScale sc = scale_squares(inst);
  Bitset in_a(inst.n);
  for (int v : a) in_a.set(v);

  SwapEnumerator en(inst, a, sc, pivot);
  en.need_connected = true;
  std::vector<int> cands;
  for (int v = 0; v < inst.n; ++v)
    if (!in_a[v]) cands.push_back(v);
  en.set_candidates(std::move(cands));
  en.run_sizes(1, size_bound);

  if (!en.found) return std::nullopt;
  return finish_improvement(inst, ImprovementKind::bounded_set, std::nullopt, en.best_x,
                            en.best_displaced);
}

Solution make_solution(const ProblemInstance& inst, VertexSet vertices) {
  if (!is_independent(inst, vertices))
    throw std::invalid_argument("vertex set is not independent");
  Solution sol;
  sol.weight = set_weight(inst, vertices);
  sol.weight_sq = weight_sq(inst, vertices);
  sol.vertices = std::move(vertices);
  return sol;
}

Solution apply_improvement(const ProblemInstance& inst, const Solution& sol,
                           const Improvement& imp) {
  check_vertex_set(inst, imp.x);
  if (imp.x.empty()) throw std::logic_error("improvement with empty vertex set");
  for (int v : imp.x)
    if (std::binary_search(sol.vertices.begin(), sol.vertices.end(), v))
      throw std::logic_error("improvement overlaps the current solution");
  VertexSet displaced = neighborhood(inst, imp.x, sol.vertices);
  if (displaced != imp.displaced)
    throw std::logic_error("stale improvement: displaced set differs from N(X, A)");
  Rational g = weight_sq(inst, imp.x) - weight_sq(inst, displaced);
  if (g != imp.gain)
    throw std::logic_error("stale improvement: cached gain differs");
  if (g <= 0) throw std::logic_error("improvement does not increase the potential");

  VertexSet kept;
  std::set_difference(sol.vertices.begin(), sol.vertices.end(), displaced.begin(),
                      displaced.end(), std::back_inserter(kept));
  VertexSet merged;
  std::merge(kept.begin(), kept.end(), imp.x.begin(), imp.x.end(),
             std::back_inserter(merged));
  if (!is_independent(inst, merged))
    throw std::logic_error("improvement produced a dependent set");

  Solution out;
  out.vertices = std::move(merged);
  out.weight = sol.weight - set_weight(inst, displaced) + set_weight(inst, imp.x);
  out.weight_sq = sol.weight_sq + g;
  return out;
}

Solution greedy(const ProblemInstance& inst) {
  Bitset alive(inst.n);
  alive.set();
  VertexSet picked;
  while (alive.any()) {
    int best = -1;
    for (std::size_t v = alive.find_first(); v != Bitset::npos; v = alive.find_next(v))
      if (best < 0 || inst.weight[v] > inst.weight[best])
        best = static_cast<int>(v);
    picked.push_back(best);
    alive.reset(static_cast<std::size_t>(best));
    alive -= inst.adj_mask[best];
  }
  std::sort(picked.begin(), picked.end());
  return make_solution(inst, std::move(picked));
}

std::pair<Solution, Trace> run_local_search(const ProblemInstance& inst,
                                            const SearchConfig& cfg,
                                            const std::optional<VertexSet>& warm_start) {
  Trace trace;
  if (cfg.strategy == Strategy::greedy_only) {
    trace.certificate = Certificate::not_applicable;
    return {greedy(inst), std::move(trace)};
  }
  if (cfg.size_bound < 0) throw std::invalid_argument("negative size bound");
  const int bound = cfg.size_bound > 0 ? cfg.size_bound : default_size_bound(inst.d);

  Solution sol = make_solution(inst, warm_start ? *warm_start : VertexSet{});
  for (std::uint64_t iter = 0;; ++iter) {
    if (cfg.max_iterations && iter >= *cfg.max_iterations) {
      trace.certificate = Certificate::iteration_capped;
      break;
    }
    std::optional<Improvement> imp =
        cfg.strategy == Strategy::claw_only
            ? find_claw_improvement(inst, sol.vertices, cfg.pivot)
            : find_bounded_improvement(inst, sol.vertices, bound, cfg.pivot);
    if (!imp) {
      trace.certificate = Certificate::locally_optimal;
      break;
    }
    sol = apply_improvement(inst, sol, *imp);
    trace.iterations.push_back(IterationRecord{std::move(*imp), sol.weight_sq});
  }
  return {std::move(sol), std::move(trace)};
}

}  // namespace clawmis
