#include "clawmis/set_system.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace clawmis {

SetSystem make_set_system(int k, int universe_size, std::vector<WeightedSet> sets) {
  if (k < 1) throw std::invalid_argument("set size cap k must be >= 1");
  if (universe_size < 0) throw std::invalid_argument("negative universe size");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    auto& s = sets[i];
    if (s.weight <= 0)
      throw std::invalid_argument("set " + std::to_string(i) + " has non-positive weight");
    if (s.elements.empty() || static_cast<int>(s.elements.size()) > k)
      throw std::invalid_argument("set " + std::to_string(i) + " has size " +
                                  std::to_string(s.elements.size()) +
                                  ", expected 1.." + std::to_string(k));
    for (std::size_t j = 0; j < s.elements.size(); ++j) {
      if (s.elements[j] < 0 || s.elements[j] >= universe_size)
        throw std::invalid_argument("set " + std::to_string(i) +
                                    " has element out of range");
      if (j > 0 && s.elements[j - 1] >= s.elements[j])
        throw std::invalid_argument("set " + std::to_string(i) +
                                    " not sorted/duplicate-free");
    }
  }
  SetSystem sys;
  sys.k = k;
  sys.universe_size = universe_size;
  sys.sets = std::move(sets);
  return sys;
}

ProblemInstance conflict_graph(const SetSystem& sys) {
  const int n = static_cast<int>(sys.sets.size());
  std::vector<Rational> weights;
  weights.reserve(n);
  for (auto& s : sys.sets) weights.push_back(s.weight);
  auto intersects = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return true;
      if (a[i] < b[j]) ++i; else ++j;
    }
    return false;
  };
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (intersects(sys.sets[i].elements, sys.sets[j].elements))
        edges.emplace_back(i, j);
  return make_instance(n, sys.k + 1, std::move(weights), edges);
}

std::vector<int> lift_solution(const SetSystem& sys, const VertexSet& chosen,
                               const Rational& total_weight) {
  const int n = static_cast<int>(sys.sets.size());
  Rational sum = 0;
  std::vector<char> used(static_cast<std::size_t>(sys.universe_size), 0);
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    int idx = chosen[i];
    if (idx < 0 || idx >= n)
      throw std::invalid_argument("set index out of range: " + std::to_string(idx));
    if (i > 0 && chosen[i - 1] >= idx)
      throw std::invalid_argument("chosen indices not sorted/duplicate-free");
    for (int e : sys.sets[idx].elements) {
      if (used[e])
        throw std::logic_error("packing invalid: element " + std::to_string(e) +
                               " covered twice");
      used[e] = 1;
    }
    sum += sys.sets[idx].weight;
  }
  if (sum != total_weight)
    throw std::logic_error("packing weight mismatch: got " + rational_to_string(sum) +
                           ", expected " + rational_to_string(total_weight));
  return chosen;
}

}  // namespace clawmis
