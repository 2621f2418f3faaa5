#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "clawmis/analysis.hpp"
#include "clawmis/generators.hpp"
#include "clawmis/io.hpp"
#include "clawmis/oracle.hpp"
#include "clawmis/scaling.hpp"
#include "clawmis/search.hpp"
#include "clawmis/set_system.hpp"

using json = nlohmann::ordered_json;
using namespace clawmis;

namespace {

constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << content;
}

struct LoadedInstance {
  std::string format;  // "mwis" or "setpack"
  ProblemInstance instance;
  std::optional<SetSystem> system;
};

LoadedInstance load_instance(const std::string& path) {
  std::string text = read_input(path);
  LoadedInstance out;
  out.format = sniff_format(text);
  if (out.format == "setpack") {
    out.system = parse_set_system(text);
    out.instance = conflict_graph(*out.system);
  } else {
    out.instance = parse_graph(text);
  }
  return out;
}

json instance_info(const LoadedInstance& in) {
  json j;
  j["format"] = in.format;
  j["n"] = in.instance.n;
  j["m"] = in.instance.edge_count;
  j["d"] = in.instance.d;
  if (in.system) {
    j["k"] = in.system->k;
    j["universe"] = in.system->universe_size;
  }
  return j;
}

json rational_json(const Rational& r) { return rational_to_string(r); }

json solution_json(const Solution& sol) {
  json j;
  j["vertices"] = sol.vertices;
  j["size"] = sol.vertices.size();
  j["weight"] = rational_json(sol.weight);
  j["weight_decimal"] = decimal_string(sol.weight);
  j["weight_sq"] = rational_json(sol.weight_sq);
  return j;
}

const char* certificate_name(Certificate c) {
  switch (c) {
    case Certificate::locally_optimal: return "locally-optimal";
    case Certificate::iteration_capped: return "iteration-capped";
    default: return "not-applicable";
  }
}

const char* kind_name(ImprovementKind k) {
  switch (k) {
    case ImprovementKind::zero_claw: return "zero-claw";
    case ImprovementKind::claw: return "claw";
    default: return "bounded";
  }
}

json improvement_json(const Improvement& imp) {
  json j;
  j["kind"] = kind_name(imp.kind);
  if (imp.center)
    j["center"] = *imp.center;
  else
    j["center"] = nullptr;
  j["vertices"] = imp.x;
  j["displaced"] = imp.displaced;
  j["gain"] = rational_json(imp.gain);
  return j;
}

Strategy strategy_of(const std::string& algorithm) {
  if (algorithm == "greedy") return Strategy::greedy_only;
  if (algorithm == "squareimp") return Strategy::claw_only;
  if (algorithm == "bounded") return Strategy::bounded;
  throw UsageError("unknown algorithm '" + algorithm + "'");
}

PivotRule pivot_of(const std::string& pivot) {
  if (pivot == "first") return PivotRule::first_canonical;
  if (pivot == "best") return PivotRule::best_gain;
  throw UsageError("unknown pivot rule '" + pivot + "'");
}

VertexSet parse_vertex_list(const std::string& text) {
  // either a run record (take result.vertices) or whitespace-separated ids
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j = json::parse(text);
    const json* v = nullptr;
    if (j.contains("result") && j["result"].contains("vertices"))
      v = &j["result"]["vertices"];
    else if (j.contains("vertices"))
      v = &j["vertices"];
    else if (j.contains("optimum") && j["optimum"].contains("vertices"))
      v = &j["optimum"]["vertices"];
    if (!v) throw UsageError("no vertex list found in the JSON solution file");
    return v->get<VertexSet>();
  }
  VertexSet out;
  std::istringstream in(text);
  int id;
  while (in >> id) out.push_back(id);
  if (!in.eof()) throw UsageError("solution file holds something besides vertex ids");
  return out;
}

VertexSet resolve_warm_start(const std::string& spec, const ProblemInstance& inst) {
  if (spec == "empty") return {};
  if (spec == "a-side") {
    if (inst.d - 1 > inst.n)
      throw UsageError("a-side warm start needs vertices 0.." +
                       std::to_string(inst.d - 2));
    VertexSet a;
    for (int v = 0; v + 1 < inst.d; ++v) a.push_back(v);
    return a;
  }
  return parse_vertex_list(read_input(spec));
}

struct SolveOptions {
  std::string input = "-";
  std::string algorithm = "bounded";
  int size_bound = 0;
  std::string pivot = "first";
  std::string warm_start = "empty";
  std::optional<std::uint64_t> max_iterations;
  std::optional<std::string> scale_n;
  bool with_oracle = false;
  bool timings = false;
  int threads = 1;
  std::string output;
};

int run_solve(const SolveOptions& opt) {
  auto started = std::chrono::steady_clock::now();
  LoadedInstance in = load_instance(opt.input);
  SearchConfig cfg;
  cfg.strategy = strategy_of(opt.algorithm);
  cfg.size_bound = opt.size_bound;
  cfg.pivot = pivot_of(opt.pivot);
  cfg.max_iterations = opt.max_iterations;
  if (opt.threads < 1) throw UsageError("--threads must be >= 1");

  json record;
  record["command"] = "solve";
  record["input"] = opt.input;
  record["instance"] = instance_info(in);

  json config;
  config["algorithm"] = opt.algorithm;
  if (cfg.strategy == Strategy::bounded)
    config["size_bound"] =
        cfg.size_bound > 0 ? cfg.size_bound : default_size_bound(in.instance.d);
  else
    config["size_bound"] = nullptr;
  config["pivot"] = opt.pivot;
  config["warm_start"] = opt.warm_start;
  if (cfg.max_iterations)
    config["max_iterations"] = *cfg.max_iterations;
  else
    config["max_iterations"] = nullptr;
  config["scale_N"] = opt.scale_n ? json(*opt.scale_n) : json(nullptr);
  record["config"] = config;

  Solution sol;
  Certificate certificate = Certificate::not_applicable;
  std::uint64_t iterations = 0;

  if (opt.scale_n) {
    if (cfg.strategy == Strategy::greedy_only)
      throw UsageError("--scale-N requires a local search algorithm");
    if (opt.warm_start != "empty")
      throw UsageError("--scale-N always starts from the empty set");
    ScalingConfig scfg;
    scfg.scale_n = parse_rational(*opt.scale_n);
    auto [scaled_sol, stats] = solve_scaled(in.instance, scfg, cfg);
    sol = std::move(scaled_sol);
    certificate = stats.certificate;
    iterations = stats.iterations;
    json scaling;
    scaling["iterations"] = stats.iterations;
    scaling["iteration_bound"] = rational_json(stats.iteration_bound);
    scaling["iterations_within_bound"] = stats.iterations_within_bound;
    scaling["potential_integral"] = stats.potential_integral;
    scaling["guarantee_factor"] = rational_json(stats.guarantee_factor);
    record["scaling"] = scaling;
  } else {
    VertexSet warm = resolve_warm_start(opt.warm_start, in.instance);
    auto [search_sol, trace] =
        run_local_search(in.instance, cfg,
                         warm.empty() ? std::nullopt : std::make_optional(warm));
    sol = std::move(search_sol);
    certificate = trace.certificate;
    iterations = trace.iterations.size();
  }

  json result = solution_json(sol);
  result["iterations"] = iterations;
  result["certificate"] = certificate_name(certificate);
  record["result"] = result;

  if (in.system) {
    auto packing = lift_solution(*in.system, sol.vertices, sol.weight);
    json p;
    p["sets"] = packing;
    p["weight"] = rational_json(sol.weight);
    record["packing"] = p;
  }

  if (opt.with_oracle) {
    OracleResult exact = exact_mwis(in.instance);
    json o;
    o["optimum"] = exact.optimum;
    o["weight"] = rational_json(exact.weight);
    Rational ratio = sol.weight > 0 ? exact.weight / sol.weight : Rational(1);
    o["ratio"] = rational_json(ratio);
    o["ratio_decimal"] = decimal_string(ratio);
    record["oracle"] = o;
  }

  if (opt.timings) {
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    record["timings"] = json{{"wall_ms", elapsed.count()}};
  }

  write_output(opt.output, record.dump(2) + "\n");
  return 0;
}

int run_oracle(const std::string& input, const std::string& output) {
  LoadedInstance in = load_instance(input);
  OracleResult exact = exact_mwis(in.instance);
  json record;
  record["command"] = "oracle";
  record["input"] = input;
  record["instance"] = instance_info(in);
  json o;
  o["vertices"] = exact.optimum;
  o["weight"] = rational_json(exact.weight);
  o["weight_decimal"] = decimal_string(exact.weight);
  o["nodes"] = exact.nodes;
  record["optimum"] = o;
  if (in.system) {
    auto packing = lift_solution(*in.system, exact.optimum, exact.weight);
    record["packing"] = json{{"sets", packing}};
  }
  write_output(output, record.dump(2) + "\n");
  return 0;
}

int run_verify_local_opt(const std::string& input, const std::string& solution_path,
                         int size_bound, const std::string& output) {
  LoadedInstance in = load_instance(input);
  OracleLimits limits;
  if (in.instance.n > limits.improvement_max_vertices)
    throw UsageError("instance has " + std::to_string(in.instance.n) +
                     " vertices; the exhaustive check is capped at " +
                     std::to_string(limits.improvement_max_vertices));
  VertexSet sol = parse_vertex_list(read_input(solution_path));
  Solution checked = make_solution(in.instance, sol);  // validates independence
  int requested = size_bound > 0 ? size_bound : default_size_bound(in.instance.d);
  int effective = std::min(requested, limits.max_size_bound);
  auto improvement = exhaustive_improvement(in.instance, checked.vertices, effective);

  json record;
  record["command"] = "verify-local-opt";
  record["input"] = input;
  record["instance"] = instance_info(in);
  record["solution"] = checked.vertices;
  record["weight"] = rational_json(checked.weight);
  record["size_bound_requested"] = requested;
  record["size_bound_effective"] = effective;
  record["verdict"] = improvement ? "improvable" : "locally-optimal";
  if (improvement) {
    record["improvement"] = json{{"vertices", *improvement},
                                 {"gain", rational_json(gain(in.instance,
                                                             checked.vertices,
                                                             *improvement))}};
  } else {
    record["improvement"] = nullptr;
  }
  write_output(output, record.dump(2) + "\n");
  return improvement ? kExitVerificationFailed : 0;
}

struct AnalyzeOptions {
  std::string input = "-";
  std::string solution_path;
  std::string reference_path;
  std::string eps = "1/5308416";
  std::string delta = "1/6";
  bool assume_terminated = false;
  std::string output;
};

int run_analyze(const AnalyzeOptions& opt) {
  LoadedInstance in = load_instance(opt.input);
  const ProblemInstance& inst = in.instance;

  Solution sol;
  bool certified = false;
  if (opt.solution_path.empty()) {
    auto [s, trace] = run_local_search(inst, SearchConfig{}, std::nullopt);
    sol = std::move(s);
    certified = trace.certificate == Certificate::locally_optimal;
  } else {
    sol = make_solution(inst, parse_vertex_list(read_input(opt.solution_path)));
    certified = opt.assume_terminated;
  }

  VertexSet reference;
  if (opt.reference_path.empty()) {
    OracleLimits limits;
    if (inst.n > limits.max_vertices)
      throw UsageError(
          "instance too large for the exact reference; pass --reference");
    reference = exact_mwis(inst).optimum;
  } else {
    reference = parse_vertex_list(read_input(opt.reference_path));
  }

  ChargeReport charges = compute_charges(inst, sol.vertices, reference);
  ChargeBoundReport bound = verify_charge_bound(inst, charges);
  ContributionReport contrib = compute_contributions(inst, sol.vertices, reference);
  Classification cls = classify(inst, sol.vertices, reference,
                                parse_rational(opt.eps), parse_rational(opt.delta),
                                certified);

  json record;
  record["command"] = "analyze";
  record["input"] = opt.input;
  record["instance"] = instance_info(in);
  record["solution"] = solution_json(sol);
  record["solution"]["certified_locally_optimal"] = certified;
  record["reference"] = reference;
  record["reference_weight"] = rational_json(charges.reference_weight);

  json jc;
  jc["identity_holds"] = charges.identity_holds;
  jc["half_neighborhood_total"] = rational_json(charges.half_neighborhood_total);
  jc["positive_charge_total"] = rational_json(charges.positive_charge_total);
  json senders = json::array();
  for (const auto& e : charges.entries) {
    json s;
    s["u"] = e.u;
    s["receiver"] = e.heaviest;
    s["nbhd"] = e.nbhd;
    s["nbhd_weight"] = rational_json(e.nbhd_weight);
    s["charge"] = rational_json(e.charge);
    senders.push_back(std::move(s));
  }
  jc["senders"] = senders;
  json targets = json::array();
  for (const auto& t : bound.per_target) {
    json x;
    x["v"] = t.v;
    x["positive_charge"] = rational_json(t.positive_charge);
    x["half_weight"] = rational_json(t.half_weight);
    x["ok"] = t.ok;
    targets.push_back(std::move(x));
  }
  jc["targets"] = targets;
  jc["bound_holds"] = bound.all_ok;
  record["charges"] = jc;

  json jq;
  jq["targets_within_weight"] = contrib.all_targets_ok;
  jq["sources_dominate_charges"] = contrib.all_sources_ok;
  json ct = json::array();
  for (const auto& t : contrib.per_target)
    ct.push_back(json{{"v", t.v},
                      {"total", rational_json(t.total)},
                      {"ok", t.within_weight}});
  jq["per_target"] = ct;
  record["contributions"] = jq;

  json jl;
  jl["eps"] = rational_json(cls.eps);
  jl["sqrt_eps"] = rational_json(cls.sqrt_eps);
  jl["delta"] = rational_json(cls.delta);
  jl["payback"] = cls.payback;
  jl["payback_weight"] = rational_json(cls.payback_weight);
  json labels = json::array();
  for (const auto& s : cls.senders) {
    json x;
    x["u"] = s.u;
    x["v1"] = s.v1;
    x["v2"] = s.v2 ? json(*s.v2) : json(nullptr);
    x["label"] = s.label == ChargeClass::single          ? "single"
                 : s.label == ChargeClass::double_vertex ? "double"
                                                         : "unclassified";
    labels.push_back(std::move(x));
  }
  jl["senders"] = labels;
  jl["near_tight"] = cls.near_tight;
  jl["all_double"] = cls.all_double;
  jl["double_senders"] = cls.double_senders;
  jl["near_tight_rest"] = cls.near_tight_rest;
  jl["twins"] = cls.twins;
  json twin_pairs = json::array();
  for (auto [v, t] : cls.twin_of) twin_pairs.push_back(json::array({v, t}));
  jl["twin_of"] = twin_pairs;
  jl["structure_applicable"] = cls.structure_applicable;
  jl["structure_ok"] = cls.structure_ok;
  jl["violations"] = cls.violations;
  record["classification"] = jl;

  bool ok = charges.identity_holds &&
            (!certified || (bound.all_ok && contrib.all_targets_ok &&
                            contrib.all_sources_ok && cls.structure_ok));
  record["verdict"] = ok ? "pass" : "fail";
  write_output(opt.output, record.dump(2) + "\n");
  return ok ? 0 : kExitVerificationFailed;
}

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::yes: return "pass";
    case Tri::no: return "fail";
    default: return "undecided";
  }
}

int run_check_constants(const std::string& eps, const std::string& delta, int d_min,
                        int d_max, const std::string& output) {
  if (d_min < 2 || d_max < d_min) throw UsageError("bad d range");
  Rational e = parse_rational(eps);
  Rational dl = parse_rational(delta);
  json record;
  record["command"] = "check-constants";
  record["eps"] = rational_to_string(e);
  record["delta"] = rational_to_string(dl);
  bool all_ok = true;
  json per_d = json::array();
  for (int d = d_min; d <= d_max; ++d) {
    ConstantsReport rep = verify_constants(e, dl, d);
    json jd;
    jd["d"] = d;
    jd["mode"] = rep.mode == ConstantsMode::exact ? "exact" : "interval";
    if (rep.sqrt_eps) jd["sqrt_eps"] = rational_to_string(*rep.sqrt_eps);
    if (rep.mode == ConstantsMode::interval) jd["digits"] = rep.digits;
    jd["eps_delta"] = rational_to_string(rep.eps_delta);
    jd["guarantee_shift"] = rational_to_string(rep.guarantee_shift);
    jd["approximation_factor"] = rational_to_string(rep.approximation_factor);
    jd["approximation_factor_decimal"] = decimal_string(rep.approximation_factor);
    json checks = json::array();
    for (const auto& c : rep.checks)
      checks.push_back(json{{"index", c.index},
                            {"text", c.text},
                            {"verdict", tri_name(c.holds)}});
    jd["checks"] = checks;
    jd["all_hold"] = rep.all_hold;
    all_ok = all_ok && rep.all_hold;
    per_d.push_back(std::move(jd));
  }
  record["per_d"] = per_d;
  record["all_hold"] = all_ok;
  write_output(output, record.dump(2) + "\n");
  return all_ok ? 0 : kExitVerificationFailed;
}

int run_reduce(const std::string& input, const std::string& output) {
  std::string text = read_input(input);
  if (sniff_format(text) != "setpack")
    throw UsageError("reduce expects a 'p setpack' input");
  SetSystem sys = parse_set_system(text);
  ProblemInstance inst = conflict_graph(sys);
  std::vector<std::string> comments = {
      "conflict graph of a " + std::to_string(sys.k) + "-set packing instance",
      "sets: " + std::to_string(sys.sets.size()) +
          ", universe: " + std::to_string(sys.universe_size),
      "vertex i = set i; d = k + 1"};
  write_output(output, serialize_graph(inst, comments));
  return 0;
}

std::pair<Rational, Rational> weight_range_of(const std::string& wmin,
                                              const std::string& wmax) {
  return {parse_rational(wmin), parse_rational(wmax)};
}

int run_gen_tight(int d, const std::string& weight, const std::string& output) {
  TightInstance tight = berman_tight(d, parse_rational(weight));
  std::ostringstream a_side, b_side;
  for (int v : tight.a_side) a_side << " " << v;
  for (int v : tight.b_side) b_side << " " << v;
  std::vector<std::string> comments = {
      "talon-swap-proof bipartite instance, d=" + std::to_string(d) +
          ", weight=" + weight,
      "a-side:" + a_side.str(), "b-side:" + b_side.str()};
  write_output(output, serialize_graph(tight.instance, comments));
  return 0;
}

int run_gen_setpack(int sets, int universe, int k, const std::string& wmin,
                    const std::string& wmax, std::uint64_t seed,
                    const std::string& output) {
  SetSystem sys = random_set_packing(sets, universe, k, weight_range_of(wmin, wmax),
                                     seed);
  std::vector<std::string> comments = {
      "random set packing: sets=" + std::to_string(sets) +
      " universe=" + std::to_string(universe) + " k=" + std::to_string(k) +
      " wmin=" + wmin + " wmax=" + wmax + " seed=" + std::to_string(seed)};
  write_output(output, serialize_set_system(sys, comments));
  return 0;
}

int run_gen_cliques(const std::string& sizes_csv, const std::string& wmin,
                    const std::string& wmax, std::uint64_t seed,
                    const std::string& output) {
  std::vector<int> sizes;
  std::istringstream in(sizes_csv);
  std::string tok;
  while (std::getline(in, tok, ','))
    if (!tok.empty()) sizes.push_back(std::stoi(tok));
  ProblemInstance inst = clique_union(sizes, weight_range_of(wmin, wmax), seed);
  std::vector<std::string> comments = {
      "clique union: sizes=" + sizes_csv + " wmin=" + wmin + " wmax=" + wmax +
      " seed=" + std::to_string(seed)};
  write_output(output, serialize_graph(inst, comments));
  return 0;
}

int run_gen_clawfree(int n, const std::string& p, int d, std::uint64_t seed,
                     int max_attempts, const std::string& wmin,
                     const std::string& wmax, const std::string& output) {
  auto outcome = random_claw_free(n, parse_rational(p), d, seed, max_attempts,
                                  weight_range_of(wmin, wmax));
  if (!outcome.instance) {
    std::cerr << "no " << d << "-claw-free graph in " << outcome.attempts
              << " attempts (n=" << n << ", p=" << p << ", seed=" << seed << ")\n";
    return kExitVerificationFailed;
  }
  std::vector<std::string> comments = {
      "random claw-free: n=" + std::to_string(n) + " p=" + p +
          " d=" + std::to_string(d) + " seed=" + std::to_string(seed),
      "accepted on attempt " + std::to_string(outcome.attempts) + " of " +
          std::to_string(max_attempts)};
  write_output(output, serialize_graph(*outcome.instance, comments));
  return 0;
}

struct BenchOptions {
  std::string kind = "setpack";
  int sets = 16, universe = 12, k = 3;
  int n = 12, d = 4, max_attempts = 100;
  std::string p = "1/4";
  std::string sizes = "3,3,3";
  int tight_d = 4;
  std::string wmin = "1", wmax = "2";
  std::string seeds = "1:10";
  std::string algorithms = "greedy,squareimp,bounded";
  std::optional<std::string> scale_n;
  bool with_oracle = false;
  std::string output;
};

int run_bench(const BenchOptions& opt) {
  auto colon = opt.seeds.find(':');
  if (colon == std::string::npos) throw UsageError("--seeds wants the form a:b");
  std::uint64_t seed_lo = std::stoull(opt.seeds.substr(0, colon));
  std::uint64_t seed_hi = std::stoull(opt.seeds.substr(colon + 1));
  if (seed_hi < seed_lo) throw UsageError("--seeds range is empty");

  std::vector<std::string> algos;
  {
    std::istringstream in(opt.algorithms);
    std::string tok;
    while (std::getline(in, tok, ','))
      if (!tok.empty()) algos.push_back(tok);
  }
  if (algos.empty()) throw UsageError("no algorithms given");

  std::ostringstream csv;
  csv << "kind,seed,n,m,d,algorithm,scale_N,weight,weight_decimal,iterations,"
         "certificate";
  if (opt.with_oracle) csv << ",oracle_weight,oracle_weight_decimal,ratio_decimal";
  csv << "\n";

  for (std::uint64_t seed = seed_lo; seed <= seed_hi; ++seed) {
    std::optional<ProblemInstance> inst;
    if (opt.kind == "setpack") {
      inst = conflict_graph(random_set_packing(
          opt.sets, opt.universe, opt.k, weight_range_of(opt.wmin, opt.wmax), seed));
    } else if (opt.kind == "cliques") {
      std::vector<int> sizes;
      std::istringstream in(opt.sizes);
      std::string tok;
      while (std::getline(in, tok, ','))
        if (!tok.empty()) sizes.push_back(std::stoi(tok));
      inst = clique_union(sizes, weight_range_of(opt.wmin, opt.wmax), seed);
    } else if (opt.kind == "clawfree") {
      auto outcome =
          random_claw_free(opt.n, parse_rational(opt.p), opt.d, seed,
                           opt.max_attempts, weight_range_of(opt.wmin, opt.wmax));
      if (!outcome.instance) continue;  // rejected seeds are skipped, not fatal
      inst = std::move(outcome.instance);
    } else if (opt.kind == "tight") {
      inst = berman_tight(opt.tight_d).instance;
    } else {
      throw UsageError("unknown bench kind '" + opt.kind + "'");
    }

    std::optional<Rational> oracle_weight;
    if (opt.with_oracle) oracle_weight = exact_mwis(*inst).weight;

    for (const auto& algo : algos) {
      SearchConfig cfg;
      cfg.strategy = strategy_of(algo);
      Solution sol;
      std::uint64_t iterations = 0;
      Certificate certificate = Certificate::not_applicable;
      if (opt.scale_n && cfg.strategy != Strategy::greedy_only) {
        ScalingConfig scfg;
        scfg.scale_n = parse_rational(*opt.scale_n);
        auto [s, stats] = solve_scaled(*inst, scfg, cfg);
        sol = std::move(s);
        iterations = stats.iterations;
        certificate = stats.certificate;
      } else {
        auto [s, trace] = run_local_search(*inst, cfg, std::nullopt);
        sol = std::move(s);
        iterations = trace.iterations.size();
        certificate = trace.certificate;
      }
      csv << opt.kind << "," << seed << "," << inst->n << "," << inst->edge_count
          << "," << inst->d << "," << algo << ","
          << (opt.scale_n && cfg.strategy != Strategy::greedy_only ? *opt.scale_n
                                                                   : "")
          << "," << rational_to_string(sol.weight) << ","
          << decimal_string(sol.weight) << "," << iterations << ","
          << certificate_name(certificate);
      if (opt.with_oracle) {
        Rational ratio = sol.weight > 0 ? *oracle_weight / sol.weight : Rational(1);
        csv << "," << rational_to_string(*oracle_weight) << ","
            << decimal_string(*oracle_weight) << "," << decimal_string(ratio);
      }
      csv << "\n";
    }
  }
  write_output(opt.output, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local-search solver for maximum weight independent sets in "
               "d-claw-free graphs and weighted k-set packing"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  auto* solve = app.add_subcommand(
      "solve", "run greedy / talon-swap / bounded-swap search on an instance");
  solve->add_option("input", solve_opt.input, "graph or set-system file, - for stdin");
  solve->add_option("--algorithm", solve_opt.algorithm, "greedy, squareimp or bounded")
      ->check(CLI::IsMember({"greedy", "squareimp", "bounded"}));
  solve->add_option("--size-bound", solve_opt.size_bound,
                    "swap size cap for bounded (default (d-1)^2+(d-1))");
  solve->add_option("--pivot", solve_opt.pivot, "first or best")
      ->check(CLI::IsMember({"first", "best"}));
  solve->add_option("--warm-start", solve_opt.warm_start,
                    "empty, a-side, or a file with vertex ids");
  std::uint64_t max_iter_raw = 0;
  auto* max_iter_flag =
      solve->add_option("--max-iterations", max_iter_raw, "stop after this many swaps");
  std::string scale_raw;
  auto* scale_flag = solve->add_option(
      "--scale-N", scale_raw, "scale/truncate weights with this constant (> 1)");
  solve->add_flag("--oracle", solve_opt.with_oracle,
                  "attach the exact optimum and approximation ratio");
  solve->add_flag("--timings", solve_opt.timings, "attach wall-clock timings");
  solve->add_option("--threads", solve_opt.threads, "reserved; the search is sequential");
  solve->add_option("-o,--output", solve_opt.output, "write the record here");

  std::string oracle_input = "-", oracle_output;
  auto* oracle_cmd = app.add_subcommand("oracle", "exact optimum by branch and bound");
  oracle_cmd->add_option("input", oracle_input, "instance file, - for stdin");
  oracle_cmd->add_option("-o,--output", oracle_output, "write the record here");

  std::string verify_input = "-", verify_solution, verify_output;
  int verify_bound = 0;
  auto* verify_cmd = app.add_subcommand(
      "verify-local-opt", "exhaustively confirm that no bounded swap improves");
  verify_cmd->add_option("input", verify_input, "instance file, - for stdin");
  verify_cmd->add_option("--solution", verify_solution, "vertex ids or a run record")
      ->required();
  verify_cmd->add_option("--size-bound", verify_bound, "swap size cap to verify");
  verify_cmd->add_option("-o,--output", verify_output, "write the record here");

  AnalyzeOptions analyze_opt;
  auto* analyze_cmd = app.add_subcommand(
      "analyze", "charge/contribution accounting against a reference solution");
  analyze_cmd->add_option("input", analyze_opt.input, "instance file, - for stdin");
  analyze_cmd->add_option("--solution", analyze_opt.solution_path,
                          "solution to analyze (default: run bounded search)");
  analyze_cmd->add_option("--reference", analyze_opt.reference_path,
                          "reference solution (default: exact optimum)");
  analyze_cmd->add_option("--eps", analyze_opt.eps, "classification constant");
  analyze_cmd->add_option("--delta", analyze_opt.delta, "classification constant");
  analyze_cmd->add_flag("--assume-terminated", analyze_opt.assume_terminated,
                        "treat a file-loaded solution as search-terminal");
  analyze_cmd->add_option("-o,--output", analyze_opt.output, "write the record here");

  std::string cc_eps = "1/5308416", cc_delta = "1/6", cc_output;
  int cc_dmin = 3, cc_dmax = 10;
  auto* cc_cmd = app.add_subcommand(
      "check-constants", "verify the analysis inequalities for eps and delta");
  cc_cmd->add_option("--eps", cc_eps, "epsilon");
  cc_cmd->add_option("--delta", cc_delta, "delta");
  cc_cmd->add_option("--d-min", cc_dmin, "smallest claw parameter to check");
  cc_cmd->add_option("--d-max", cc_dmax, "largest claw parameter to check");
  cc_cmd->add_option("-o,--output", cc_output, "write the record here");

  std::string reduce_input = "-", reduce_output;
  auto* reduce_cmd =
      app.add_subcommand("reduce", "set packing -> conflict graph text");
  reduce_cmd->add_option("input", reduce_input, "set-system file, - for stdin");
  reduce_cmd->add_option("-o,--output", reduce_output, "write the graph here");

  auto* gen_cmd = app.add_subcommand("gen", "instance generators");
  gen_cmd->require_subcommand(1);
  int gt_d = 4;
  std::string gt_weight = "1", gt_output;
  auto* gt = gen_cmd->add_subcommand("tight", "bipartite talon-swap-proof instance");
  gt->add_option("--d", gt_d, "claw parameter (>= 3)")->required();
  gt->add_option("--weight", gt_weight, "uniform vertex weight");
  gt->add_option("-o,--output", gt_output, "write the graph here");

  int gs_sets = 16, gs_universe = 12, gs_k = 3;
  std::string gs_wmin = "1", gs_wmax = "2", gs_output;
  std::uint64_t gs_seed = 1;
  auto* gs = gen_cmd->add_subcommand("setpack", "random weighted set packing");
  gs->add_option("--sets", gs_sets, "number of sets");
  gs->add_option("--universe", gs_universe, "universe size");
  gs->add_option("--k", gs_k, "maximum set size");
  gs->add_option("--wmin", gs_wmin, "weight range lower end");
  gs->add_option("--wmax", gs_wmax, "weight range upper end");
  gs->add_option("--seed", gs_seed, "rng seed");
  gs->add_option("-o,--output", gs_output, "write the system here");

  std::string gc_sizes = "3,3,3", gc_wmin = "1", gc_wmax = "2", gc_output;
  std::uint64_t gc_seed = 1;
  auto* gc = gen_cmd->add_subcommand("cliques", "disjoint weighted cliques (d=2)");
  gc->add_option("--sizes", gc_sizes, "comma-separated clique sizes");
  gc->add_option("--wmin", gc_wmin, "weight range lower end");
  gc->add_option("--wmax", gc_wmax, "weight range upper end");
  gc->add_option("--seed", gc_seed, "rng seed");
  gc->add_option("-o,--output", gc_output, "write the graph here");

  int gf_n = 12, gf_d = 4, gf_attempts = 100;
  std::string gf_p = "1/4", gf_wmin = "1", gf_wmax = "1", gf_output;
  std::uint64_t gf_seed = 1;
  auto* gf = gen_cmd->add_subcommand("clawfree",
                                     "rejection-sampled d-claw-free random graph");
  gf->add_option("--n", gf_n, "vertices (<= 30)");
  gf->add_option("--p", gf_p, "edge probability");
  gf->add_option("--d", gf_d, "claw parameter");
  gf->add_option("--seed", gf_seed, "rng seed");
  gf->add_option("--max-attempts", gf_attempts, "draws before giving up");
  gf->add_option("--wmin", gf_wmin, "weight range lower end");
  gf->add_option("--wmax", gf_wmax, "weight range upper end");
  gf->add_option("-o,--output", gf_output, "write the graph here");

  BenchOptions bench_opt;
  auto* bench_cmd = app.add_subcommand("bench", "generator sweep -> CSV");
  bench_cmd->add_option("--kind", bench_opt.kind, "setpack, cliques, clawfree, tight")
      ->check(CLI::IsMember({"setpack", "cliques", "clawfree", "tight"}));
  bench_cmd->add_option("--sets", bench_opt.sets, "setpack: number of sets");
  bench_cmd->add_option("--universe", bench_opt.universe, "setpack: universe size");
  bench_cmd->add_option("--k", bench_opt.k, "setpack: maximum set size");
  bench_cmd->add_option("--sizes", bench_opt.sizes, "cliques: clique sizes");
  bench_cmd->add_option("--n", bench_opt.n, "clawfree: vertices");
  bench_cmd->add_option("--p", bench_opt.p, "clawfree: edge probability");
  bench_cmd->add_option("--d", bench_opt.d, "clawfree: claw parameter");
  bench_cmd->add_option("--max-attempts", bench_opt.max_attempts,
                        "clawfree: draws per seed");
  bench_cmd->add_option("--tight-d", bench_opt.tight_d, "tight: claw parameter");
  bench_cmd->add_option("--wmin", bench_opt.wmin, "weight range lower end");
  bench_cmd->add_option("--wmax", bench_opt.wmax, "weight range upper end");
  bench_cmd->add_option("--seeds", bench_opt.seeds, "inclusive range a:b");
  bench_cmd->add_option("--algorithms", bench_opt.algorithms, "comma-separated list");
  std::string bench_scale;
  auto* bench_scale_flag =
      bench_cmd->add_option("--scale-N", bench_scale, "scale/truncate constant");
  bench_cmd->add_flag("--oracle", bench_opt.with_oracle, "attach exact optima");
  bench_cmd->add_option("-o,--output", bench_opt.output, "write the CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*solve) {
      if (*max_iter_flag) solve_opt.max_iterations = max_iter_raw;
      if (*scale_flag) solve_opt.scale_n = scale_raw;
      return run_solve(solve_opt);
    }
    if (*oracle_cmd) return run_oracle(oracle_input, oracle_output);
    if (*verify_cmd)
      return run_verify_local_opt(verify_input, verify_solution, verify_bound,
                                  verify_output);
    if (*analyze_cmd) return run_analyze(analyze_opt);
    if (*cc_cmd)
      return run_check_constants(cc_eps, cc_delta, cc_dmin, cc_dmax, cc_output);
    if (*reduce_cmd) return run_reduce(reduce_input, reduce_output);
    if (*gt) return run_gen_tight(gt_d, gt_weight, gt_output);
    if (*gs)
      return run_gen_setpack(gs_sets, gs_universe, gs_k, gs_wmin, gs_wmax, gs_seed,
                             gs_output);
    if (*gc) return run_gen_cliques(gc_sizes, gc_wmin, gc_wmax, gc_seed, gc_output);
    if (*gf)
      return run_gen_clawfree(gf_n, gf_p, gf_d, gf_seed, gf_attempts, gf_wmin,
                              gf_wmax, gf_output);
    if (*bench_cmd) {
      if (*bench_scale_flag) bench_opt.scale_n = bench_scale;
      return run_bench(bench_opt);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
