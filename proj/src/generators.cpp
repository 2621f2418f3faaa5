#include "clawmis/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "clawmis/random.hpp"

namespace clawmis {

TightInstance berman_tight(int d, const Rational& weight) {
  if (d < 3) throw std::invalid_argument("tight construction needs d >= 3");
  if (weight <= 0) throw std::invalid_argument("weight must be positive");
  const int values = d - 1;
  TightInstance out;

  // value -> list of b-vertex ids containing it
  std::vector<std::vector<int>> holding(values + 1);
  int next_id = values;  // a-side occupies 0..values-1
  for (int v = 1; v <= values; ++v) {
    holding[v].push_back(next_id);
    out.b_side.push_back(next_id);
    ++next_id;
  }
  for (int x = 1; x <= values; ++x)
    for (int y = x + 1; y <= values; ++y) {
      holding[x].push_back(next_id);
      holding[y].push_back(next_id);
      out.b_side.push_back(next_id);
      ++next_id;
    }

  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= values; ++v)
    for (int b : holding[v]) edges.emplace_back(v - 1, b);

  out.instance = make_instance(next_id, d, std::vector<Rational>(next_id, weight),
                               edges);
  for (int i = 0; i < values; ++i) out.a_side.push_back(i);
  return out;
}

namespace {

Rational grid_weight(SplitMix64& rng, const std::pair<Rational, Rational>& range) {
  if (range.first <= 0)
    throw std::invalid_argument("weight range must be positive");
  if (range.first > range.second)
    throw std::invalid_argument("weight range endpoints out of order");
  if (range.first == range.second) return range.first;
  std::uint64_t step = rng.below(1001);
  return range.first + (range.second - range.first) * Rational(step, 1000);
}

}  // namespace

SetSystem random_set_packing(int num_sets, int universe_size, int k,
                             std::pair<Rational, Rational> weight_range,
                             std::uint64_t seed) {
  if (num_sets < 0) throw std::invalid_argument("negative set count");
  if (k < 1) throw std::invalid_argument("set size cap k must be >= 1");
  if (universe_size < k)
    throw std::invalid_argument("universe too small for sets of size k");
  SplitMix64 rng(seed);
  std::vector<WeightedSet> sets;
  sets.reserve(num_sets);
  std::vector<int> pool(universe_size);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < num_sets; ++i) {
    int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
    // partial Fisher-Yates: the first `size` entries become the sample
    for (int j = 0; j < size; ++j) {
      auto swap_with =
          j + static_cast<int>(rng.below(static_cast<std::uint64_t>(universe_size - j)));
      std::swap(pool[j], pool[swap_with]);
    }
    WeightedSet s;
    s.elements.assign(pool.begin(), pool.begin() + size);
    std::sort(s.elements.begin(), s.elements.end());
    s.weight = grid_weight(rng, weight_range);
    sets.push_back(std::move(s));
  }
  return make_set_system(k, universe_size, std::move(sets));
}

ProblemInstance clique_union(const std::vector<int>& sizes,
                             std::pair<Rational, Rational> weight_range,
                             std::uint64_t seed) {
  if (sizes.empty()) throw std::invalid_argument("need at least one clique");
  for (int s : sizes)
    if (s < 1) throw std::invalid_argument("clique sizes must be >= 1");
  SplitMix64 rng(seed);
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  for (int s : sizes) {
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j) edges.emplace_back(n + i, n + j);
    n += s;
  }
  std::vector<Rational> weights;
  weights.reserve(n);
  for (int v = 0; v < n; ++v) weights.push_back(grid_weight(rng, weight_range));
  return make_instance(n, 2, std::move(weights), edges);
}

RandomClawFreeOutcome random_claw_free(int n, const Rational& edge_prob, int d,
                                       std::uint64_t seed, int max_attempts,
                                       std::pair<Rational, Rational> weight_range) {
  if (n < 0 || n > 30)
    throw std::invalid_argument("vertex count must be in 0..30");
  if (edge_prob < 0 || edge_prob > 1)
    throw std::invalid_argument("edge probability must be in [0, 1]");
  if (max_attempts < 1) throw std::invalid_argument("need at least one attempt");
  SplitMix64 rng(seed);
  RandomClawFreeOutcome out;
  // edge present iff a 32-bit draw x satisfies x / 2^32 < edge_prob
  const BigInt num = numerator(edge_prob) << 32;
  const BigInt den = denominator(edge_prob);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    out.attempts = attempt;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        BigInt draw = static_cast<std::uint64_t>(rng.next() >> 32);
        if (draw * den < num) edges.emplace_back(i, j);
      }
    std::vector<Rational> weights;
    weights.reserve(n);
    for (int v = 0; v < n; ++v) weights.push_back(grid_weight(rng, weight_range));
    ProblemInstance inst = make_instance(n, d, std::move(weights), edges);
    if (n == 0 || is_d_claw_free(inst, d)) {
      out.instance = std::move(inst);
      return out;
    }
  }
  return out;
}

}  // namespace clawmis
