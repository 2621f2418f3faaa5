#include "clawmis/scaling.hpp"

#include <stdexcept>
#include <utility>

namespace clawmis {

ScaledInstance scale_truncate(const ProblemInstance& inst, const ScalingConfig& cfg) {
  if (cfg.scale_n <= 1)
    throw std::invalid_argument("scaling constant must exceed 1");
  ScaledInstance out;
  if (inst.n == 0) {
    out.factor = 0;
    out.truncated = make_instance(0, inst.d, {}, {});
    return out;
  }
  Solution anchor = greedy(inst);
  out.anchor = anchor.vertices;
  out.factor = cfg.scale_n * inst.n / anchor.weight;

  out.floor_weight.reserve(inst.n);
  std::vector<int> new_id(inst.n, -1);
  std::vector<Rational> weights;
  for (int v = 0; v < inst.n; ++v) {
    BigInt f = floor_rational(out.factor * inst.weight[v]);
    out.floor_weight.push_back(f);
    if (f >= 1) {
      new_id[v] = static_cast<int>(out.survivors.size());
      out.survivors.push_back(v);
      out.original_id.push_back(v);
      weights.emplace_back(f);
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : edge_list(inst))
    if (new_id[u] >= 0 && new_id[v] >= 0)
      edges.emplace_back(new_id[u], new_id[v]);
  out.truncated = make_instance(static_cast<int>(out.survivors.size()), inst.d,
                                std::move(weights), edges);
  return out;
}

std::pair<Solution, ScaledRunStats> solve_scaled(const ProblemInstance& inst,
                                                 const ScalingConfig& scfg,
                                                 const SearchConfig& cfg) {
  ScaledInstance scaled = scale_truncate(inst, scfg);
  ScaledRunStats stats;
  stats.iteration_bound = Rational((inst.d - 1) * (inst.d - 1)) * scfg.scale_n *
                          scfg.scale_n * inst.n * inst.n;
  stats.guarantee_factor = scfg.scale_n / (scfg.scale_n - 1);

  auto [truncated_sol, trace] = run_local_search(scaled.truncated, cfg, std::nullopt);
  stats.iterations = trace.iterations.size();
  stats.certificate = trace.certificate;
  stats.iterations_within_bound = Rational(stats.iterations) <= stats.iteration_bound;
  for (const auto& it : trace.iterations)
    if (denominator(it.improvement.gain) != 1 || it.improvement.gain < 1) {
      stats.potential_integral = false;
      break;
    }

  VertexSet mapped;
  mapped.reserve(truncated_sol.vertices.size());
  for (int v : truncated_sol.vertices) mapped.push_back(scaled.original_id[v]);
  return {make_solution(inst, std::move(mapped)), stats};
}

}  // namespace clawmis
