#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "clawmis/analysis.hpp"
#include "clawmis/generators.hpp"
#include "clawmis/io.hpp"
#include "clawmis/oracle.hpp"
#include "clawmis/scaling.hpp"
#include "clawmis/search.hpp"
#include "clawmis/set_system.hpp"

namespace py = pybind11;
using namespace clawmis;

namespace {

struct Loaded {
  ProblemInstance instance;
  std::optional<SetSystem> system;
};

Loaded load(const std::string& text) {
  if (sniff_format(text) == "setpack") {
    SetSystem sys = parse_set_system(text);
    ProblemInstance inst = conflict_graph(sys);
    return {std::move(inst), std::move(sys)};
  }
  return {parse_graph(text), std::nullopt};
}

std::string rat(const Rational& r) { return rational_to_string(r); }

const char* certificate_name(Certificate c) {
  switch (c) {
    case Certificate::locally_optimal: return "locally-optimal";
    case Certificate::iteration_capped: return "iteration-capped";
    default: return "not-applicable";
  }
}

Strategy strategy_of(const std::string& name) {
  if (name == "greedy") return Strategy::greedy_only;
  if (name == "squareimp") return Strategy::claw_only;
  if (name == "bounded") return Strategy::bounded;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

py::dict solution_dict(const Solution& sol) {
  py::dict d;
  d["vertices"] = sol.vertices;
  d["weight"] = rat(sol.weight);
  d["weight_decimal"] = decimal_string(sol.weight);
  d["weight_sq"] = rat(sol.weight_sq);
  return d;
}

py::dict solve(const std::string& text, const std::string& algorithm,
               int size_bound, const std::string& pivot,
               std::optional<std::vector<int>> warm_start,
               std::optional<std::uint64_t> max_iterations,
               std::optional<std::string> scale_n) {
  Loaded in = load(text);
  SearchConfig cfg;
  cfg.strategy = strategy_of(algorithm);
  cfg.size_bound = size_bound;
  if (pivot == "first")
    cfg.pivot = PivotRule::first_canonical;
  else if (pivot == "best")
    cfg.pivot = PivotRule::best_gain;
  else
    throw std::invalid_argument("unknown pivot '" + pivot + "'");
  cfg.max_iterations = max_iterations;

  py::dict out;
  Solution sol;
  if (scale_n) {
    if (cfg.strategy == Strategy::greedy_only)
      throw std::invalid_argument("scale_n requires a local search algorithm");
    if (warm_start && !warm_start->empty())
      throw std::invalid_argument("scale_n always starts from the empty set");
    ScalingConfig scfg;
    scfg.scale_n = parse_rational(*scale_n);
    auto [scaled_sol, stats] = solve_scaled(in.instance, scfg, cfg);
    sol = std::move(scaled_sol);
    py::dict scaling;
    scaling["iterations"] = stats.iterations;
    scaling["iteration_bound"] = rat(stats.iteration_bound);
    scaling["iterations_within_bound"] = stats.iterations_within_bound;
    scaling["potential_integral"] = stats.potential_integral;
    scaling["guarantee_factor"] = rat(stats.guarantee_factor);
    out["scaling"] = scaling;
    out["certificate"] = certificate_name(stats.certificate);
  } else {
    std::optional<VertexSet> start;
    if (warm_start) {
      start = VertexSet(warm_start->begin(), warm_start->end());
      std::sort(start->begin(), start->end());
    }
    auto [s, trace] = run_local_search(in.instance, cfg, start);
    sol = std::move(s);
    out["iterations"] = trace.iterations.size();
    out["certificate"] = certificate_name(trace.certificate);
  }
  out["result"] = solution_dict(sol);
  if (in.system) {
    py::dict packing;
    packing["sets"] = lift_solution(*in.system, sol.vertices, sol.weight);
    packing["weight"] = rat(sol.weight);
    out["packing"] = packing;
  }
  return out;
}

py::dict oracle(const std::string& text) {
  Loaded in = load(text);
  OracleResult exact = exact_mwis(in.instance);
  py::dict out;
  out["vertices"] = exact.optimum;
  out["weight"] = rat(exact.weight);
  out["weight_decimal"] = decimal_string(exact.weight);
  out["nodes"] = exact.nodes;
  if (in.system)
    out["sets"] = lift_solution(*in.system, exact.optimum, exact.weight);
  return out;
}

py::dict verify_local_opt(const std::string& text,
                          const std::vector<int>& solution, int size_bound) {
  Loaded in = load(text);
  VertexSet a(solution.begin(), solution.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  check_vertex_set(in.instance, a);
  if (!is_independent(in.instance, a))
    throw std::invalid_argument("solution is not independent");
  OracleLimits limits;
  if (in.instance.n > limits.improvement_max_vertices)
    throw std::invalid_argument("instance too large for the exhaustive sweep");
  int effective = size_bound > 0 ? size_bound : default_size_bound(in.instance.d);
  if (effective > limits.max_size_bound) effective = limits.max_size_bound;
  auto found = exhaustive_improvement(in.instance, a, effective, limits);
  py::dict out;
  out["size_bound_effective"] = effective;
  if (found) {
    out["verdict"] = "improvable";
    out["improvement"] = *found;
    out["gain"] = rat(gain(in.instance, a, *found));
  } else {
    out["verdict"] = "locally-optimal";
  }
  return out;
}

py::dict analyze(const std::string& text) {
  Loaded in = load(text);
  SearchConfig cfg;
  auto [sol, trace] = run_local_search(in.instance, cfg, std::nullopt);
  bool certified = trace.certificate == Certificate::locally_optimal;
  OracleResult exact = exact_mwis(in.instance);

  ChargeReport charges = compute_charges(in.instance, sol.vertices, exact.optimum);
  ChargeBoundReport bound = verify_charge_bound(in.instance, charges);
  ContributionReport contrib =
      compute_contributions(in.instance, sol.vertices, exact.optimum);
  Classification cls =
      classify(in.instance, sol.vertices, exact.optimum, Rational(1, 5308416),
               Rational(1, 6), certified);

  py::dict out;
  out["certified_locally_optimal"] = certified;
  out["solution"] = solution_dict(sol);
  out["reference"] = exact.optimum;
  out["identity_holds"] = charges.identity_holds;
  out["charge_bound_holds"] = bound.all_ok;
  out["targets_within_weight"] = contrib.all_targets_ok;
  out["sources_dominate_charges"] = contrib.all_sources_ok;
  out["structure_applicable"] = cls.structure_applicable;
  out["structure_ok"] = cls.structure_ok;
  bool ok = charges.identity_holds &&
            (!certified || (bound.all_ok && contrib.all_targets_ok &&
                            contrib.all_sources_ok && cls.structure_ok));
  out["verdict"] = ok ? "pass" : "fail";
  return out;
}

py::dict check_constants(const std::string& eps, const std::string& delta,
                         int d) {
  ConstantsReport rep = verify_constants(parse_rational(eps),
                                         parse_rational(delta), d);
  py::dict out;
  out["d"] = rep.d;
  out["mode"] = rep.mode == ConstantsMode::exact ? "exact" : "interval";
  out["eps_delta"] = rat(rep.eps_delta);
  out["guarantee_shift"] = rat(rep.guarantee_shift);
  out["approximation_factor"] = rat(rep.approximation_factor);
  py::list checks;
  for (const InequalityCheck& c : rep.checks) {
    py::dict jc;
    jc["index"] = c.index;
    jc["text"] = c.text;
    jc["verdict"] = c.holds == Tri::yes      ? "pass"
                    : c.holds == Tri::no     ? "fail"
                                             : "undecided";
    checks.append(jc);
  }
  out["checks"] = checks;
  out["all_hold"] = rep.all_hold;
  return out;
}

std::string reduce(const std::string& text) {
  SetSystem sys = parse_set_system(text);
  ProblemInstance inst = conflict_graph(sys);
  return serialize_graph(inst, {"conflict graph of a k-set packing instance",
                                "vertex i = set i; d = k + 1"});
}

std::string gen_tight(int d, const std::string& weight) {
  return serialize_graph(berman_tight(d, parse_rational(weight)).instance);
}

std::string gen_setpack(int sets, int universe, int k, std::uint64_t seed,
                        const std::string& wmin, const std::string& wmax) {
  return serialize_set_system(random_set_packing(
      sets, universe, k, {parse_rational(wmin), parse_rational(wmax)}, seed));
}

std::string gen_cliques(const std::vector<int>& sizes, std::uint64_t seed,
                        const std::string& wmin, const std::string& wmax) {
  return serialize_graph(
      clique_union(sizes, {parse_rational(wmin), parse_rational(wmax)}, seed));
}

std::string gen_clawfree(int n, const std::string& p, int d, std::uint64_t seed,
                         int max_attempts, const std::string& wmin,
                         const std::string& wmax) {
  auto outcome = random_claw_free(n, parse_rational(p), d, seed, max_attempts,
                                  {parse_rational(wmin), parse_rational(wmax)});
  if (!outcome.instance)
    throw std::runtime_error("no d-claw-free graph in " +
                             std::to_string(outcome.attempts) + " attempts");
  return serialize_graph(*outcome.instance);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "local-search solver for maximum weight independent set in "
            "d-claw-free graphs and weighted k-set packing";
  m.def("solve", &solve, py::arg("text"), py::arg("algorithm") = "bounded",
        py::arg("size_bound") = 0, py::arg("pivot") = "first",
        py::arg("warm_start") = std::nullopt,
        py::arg("max_iterations") = std::nullopt,
        py::arg("scale_n") = std::nullopt);
  m.def("oracle", &oracle, py::arg("text"));
  m.def("verify_local_opt", &verify_local_opt, py::arg("text"),
        py::arg("solution"), py::arg("size_bound") = 0);
  m.def("analyze", &analyze, py::arg("text"));
  m.def("check_constants", &check_constants, py::arg("eps") = "1/5308416",
        py::arg("delta") = "1/6", py::arg("d") = 3);
  m.def("reduce", &reduce, py::arg("text"));
  m.def("gen_tight", &gen_tight, py::arg("d"), py::arg("weight") = "1");
  m.def("gen_setpack", &gen_setpack, py::arg("sets"), py::arg("universe"),
        py::arg("k"), py::arg("seed"), py::arg("wmin") = "1",
        py::arg("wmax") = "2");
  m.def("gen_cliques", &gen_cliques, py::arg("sizes"), py::arg("seed"),
        py::arg("wmin") = "1", py::arg("wmax") = "2");
  m.def("gen_clawfree", &gen_clawfree, py::arg("n"), py::arg("p"), py::arg("d"),
        py::arg("seed"), py::arg("max_attempts") = 100, py::arg("wmin") = "1",
        py::arg("wmax") = "1");
}
