#include "clawmis/analysis.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace clawmis {

namespace {

void require_preconditions(const ProblemInstance& inst, const VertexSet& a,
                           const VertexSet& reference) {
  if (!is_independent(inst, a))
    throw std::invalid_argument("solution is not independent");
  if (!is_independent(inst, reference))
    throw std::invalid_argument("reference solution is not independent");
}

// Heaviest member of nbhd (lowest id on ties); nbhd ascending and nonempty.
int heaviest_of(const ProblemInstance& inst, const VertexSet& nbhd) {
  int best = nbhd[0];
  for (int v : nbhd)
    if (inst.weight[v] > inst.weight[best]) best = v;
  return best;
}

}  // namespace

ChargeReport compute_charges(const ProblemInstance& inst, const VertexSet& a,
                             const VertexSet& reference) {
  require_preconditions(inst, a, reference);
  ChargeReport rep;
  rep.a = a;
  rep.reference = reference;
  rep.reference_weight = set_weight(inst, reference);
  rep.half_neighborhood_total = 0;
  rep.charge_total = 0;
  rep.positive_charge_total = 0;

  std::vector<std::size_t> target_index(inst.n, SIZE_MAX);
  rep.targets.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    target_index[a[i]] = i;
    rep.targets.push_back(ChargeTarget{a[i], {}, Rational(0)});
  }

  for (int u : reference) {
    ChargeEntry e;
    e.u = u;
    e.nbhd = neighborhood(inst, {u}, a);
    if (e.nbhd.empty())
      throw std::invalid_argument(
          "vertex " + std::to_string(u) +
          " of the reference solution has no neighbor in the solution; "
          "the solution must be maximal relative to the reference");
    e.nbhd_weight = set_weight(inst, e.nbhd);
    e.heaviest = heaviest_of(inst, e.nbhd);
    e.charge = inst.weight[u] - e.nbhd_weight / 2;
    rep.half_neighborhood_total += e.nbhd_weight / 2;
    rep.charge_total += e.charge;
    if (e.charge > 0) {
      rep.positive_charge_total += e.charge;
      auto& t = rep.targets[target_index[e.heaviest]];
      t.senders.push_back(u);
      t.positive_charge += e.charge;
    }
    rep.entries.push_back(std::move(e));
  }
  rep.identity_holds =
      rep.reference_weight == rep.half_neighborhood_total + rep.charge_total;
  return rep;
}

ChargeBoundReport verify_charge_bound(const ProblemInstance& inst,
                                      const ChargeReport& charges) {
  ChargeBoundReport rep;
  rep.per_target.reserve(charges.targets.size());
  for (const auto& t : charges.targets) {
    ChargeBoundCheck c;
    c.v = t.v;
    c.positive_charge = t.positive_charge;
    c.half_weight = inst.weight[t.v] / 2;
    c.ok = c.positive_charge <= c.half_weight;
    rep.all_ok = rep.all_ok && c.ok;
    rep.per_target.push_back(std::move(c));
  }
  return rep;
}

ContributionReport compute_contributions(const ProblemInstance& inst,
                                         const VertexSet& a,
                                         const VertexSet& reference) {
  ChargeReport charges = compute_charges(inst, a, reference);
  ContributionReport rep;

  std::vector<std::size_t> target_index(inst.n, SIZE_MAX);
  rep.per_target.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    target_index[a[i]] = i;
    rep.per_target.push_back(ContributionTarget{a[i], Rational(0), false});
  }

  for (const auto& e : charges.entries) {
    ContributionSource src;
    src.u = e.u;
    src.total = 0;
    src.at_heaviest = 0;
    src.charge = e.charge;
    Rational sq_u = inst.weight[e.u] * inst.weight[e.u];
    Rational sq_nbhd = weight_sq(inst, e.nbhd);
    for (int v : e.nbhd) {
      Rational rest = sq_nbhd - inst.weight[v] * inst.weight[v];  // N(u,A)\{v}
      Rational raw = (sq_u - rest) / inst.weight[v];
      Rational contr = raw > 0 ? raw : Rational(0);
      rep.entries.push_back(ContributionEntry{e.u, v, contr});
      rep.per_target[target_index[v]].total += contr;
      src.total += contr;
      if (v == e.heaviest) src.at_heaviest = contr;
    }
    src.dominates_charge = src.charge > 0 ? src.at_heaviest >= 2 * src.charge
                                          : src.at_heaviest >= 0;
    rep.all_sources_ok = rep.all_sources_ok && src.dominates_charge;
    rep.per_source.push_back(std::move(src));
  }

  for (auto& t : rep.per_target) {
    t.within_weight = t.total <= inst.weight[t.v];
    rep.all_targets_ok = rep.all_targets_ok && t.within_weight;
  }
  return rep;
}

Classification classify(const ProblemInstance& inst, const VertexSet& a,
                        const VertexSet& reference, const Rational& eps,
                        const Rational& delta, bool termination_certified) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  if (delta <= 0) throw std::invalid_argument("delta must be positive");
  auto root = sqrt_exact(eps);
  if (!root)
    throw std::invalid_argument(
        "eps must have a rational square root for classification; got " +
        rational_to_string(eps));

  ChargeReport charges = compute_charges(inst, a, reference);

  Classification cls;
  cls.eps = eps;
  cls.sqrt_eps = *root;
  cls.delta = delta;
  cls.termination_certified = termination_certified;
  cls.structure_applicable = termination_certified;
  cls.a_weight = set_weight(inst, a);
  cls.payback_weight = 0;
  cls.near_tight_weight = 0;
  cls.all_double_weight = 0;
  cls.rest_weight = 0;

  const Rational& s = cls.sqrt_eps;

  // payback rule: neighborhood carries at least three times u's weight.
  for (const auto& e : charges.entries)
    if (e.nbhd_weight >= 3 * inst.weight[e.u]) {
      cls.payback.push_back(e.u);
      cls.payback_weight += inst.weight[e.u];
    }

  std::vector<const ChargeEntry*> entry_of(inst.n, nullptr);
  for (const auto& e : charges.entries) entry_of[e.u] = &e;

  std::vector<ChargeClass> label_of(inst.n, ChargeClass::unclassified);
  for (const auto& e : charges.entries) {
    if (e.charge <= 0) continue;
    ClassifiedSender sender;
    sender.u = e.u;
    sender.v1 = e.heaviest;
    const Rational& wu = inst.weight[e.u];
    const Rational& wv1 = inst.weight[e.heaviest];
    Rational ratio = wu / wv1;
    bool ratio_near_one = Rational(1) - s <= ratio && ratio <= Rational(1) + s;

    if (e.nbhd.size() >= 2) {
      int v2 = -1;
      for (int v : e.nbhd) {
        if (v == e.heaviest) continue;
        if (v2 < 0 || inst.weight[v] > inst.weight[v2]) v2 = v;
      }
      sender.v2 = v2;
    }

    if (ratio_near_one && e.nbhd_weight <= (Rational(1) + s) * wv1) {
      sender.label = ChargeClass::single;
    } else if (sender.v2) {
      const Rational& wv2 = inst.weight[*sender.v2];
      Rational r2 = wv2 / wv1;
      if (ratio_near_one && Rational(1) - s <= r2 && r2 <= 1 &&
          (Rational(2) - s) * wv1 <= e.nbhd_weight && e.nbhd_weight < 2 * wu)
        sender.label = ChargeClass::double_vertex;
    }
    label_of[e.u] = sender.label;
    cls.senders.push_back(std::move(sender));
  }

  auto note = [&](std::string v) { cls.violations.push_back(std::move(v)); };

  for (const auto& t : charges.targets) {
    const Rational& wv = inst.weight[t.v];
    if (!(t.positive_charge > (Rational(1) - eps) / 2 * wv)) continue;
    cls.near_tight.push_back(t.v);
    cls.near_tight_weight += wv;

    bool every_double = true;
    int single_count = 0;
    int single_sender = -1;
    for (int u : t.senders) {
      if (label_of[u] == ChargeClass::single) {
        ++single_count;
        single_sender = u;
        every_double = false;
      } else if (label_of[u] != ChargeClass::double_vertex) {
        every_double = false;
        if (cls.structure_applicable)
          note("sender " + std::to_string(u) + " of near-tight vertex " +
               std::to_string(t.v) + " is neither single nor double");
      }
    }
    if (cls.structure_applicable && single_count > 1)
      note("near-tight vertex " + std::to_string(t.v) + " has " +
           std::to_string(single_count) + " single senders");

    if (every_double) {
      cls.all_double.push_back(t.v);
      cls.all_double_weight += wv;
      for (int u : t.senders) cls.double_senders.push_back(u);
    } else {
      cls.near_tight_rest.push_back(t.v);
      cls.rest_weight += wv;
      if (single_count == 1) {
        cls.twin_of.emplace_back(t.v, single_sender);
        cls.twins.push_back(single_sender);
      } else if (cls.structure_applicable) {
        note("near-tight vertex " + std::to_string(t.v) +
             " has no unique single sender");
      }
    }
  }
  std::sort(cls.double_senders.begin(), cls.double_senders.end());
  std::sort(cls.twins.begin(), cls.twins.end());
  cls.structure_ok = cls.violations.empty();
  return cls;
}

namespace {

struct IntervalEnv {
  RatInterval s;      // sqrt(eps)
  RatInterval e;      // eps
  RatInterval delta;
  RatInterval d;

  static RatInterval c(long num, long den = 1) {
    return RatInterval(Rational(num, den));
  }
};

std::vector<InequalityCheck> evaluate_checks(const IntervalEnv& v) {
  using I = IntervalEnv;
  std::vector<InequalityCheck> out;
  auto add = [&](int idx, std::string text, Tri holds) {
    out.push_back(InequalityCheck{idx, std::move(text), holds});
  };
  auto guarded = [&](int idx, std::string text, auto&& fn) {
    Tri holds = Tri::unknown;
    try {
      holds = fn();
    } catch (const std::domain_error&) {
      // division hit an interval straddling zero at this precision
    }
    add(idx, std::move(text), holds);
  };

  const RatInterval& s = v.s;
  const RatInterval& e = v.e;
  const RatInterval& dl = v.delta;
  const RatInterval& d = v.d;
  RatInterval ed = e * dl;

  guarded(1, "4 - 2*(6-9*s)/(4-10*s) - 9*s >= 49/50", [&] {
    return interval_ge(I::c(4) - I::c(2) * (I::c(6) - I::c(9) * s) /
                                    (I::c(4) - I::c(10) * s) -
                           I::c(9) * s,
                       I::c(49, 50));
  });
  add(2, "9*(4*s + 5*e) < 1",
      interval_lt(I::c(9) * (I::c(4) * s + I::c(5) * e), I::c(1)));
  add(3,
      "(1+s)*(1-delta-(25/12)*e*delta) + (3*d/4)*(delta+(25/12)*e*delta) + "
      "e*delta <= (d - e*delta)/2",
      interval_le((I::c(1) + s) * (I::c(1) - dl - I::c(25, 12) * ed) +
                      (I::c(3, 4) * d) * (dl + I::c(25, 12) * ed) + ed,
                  (d - ed) / I::c(2)));
  add(4, "36*s + 45*e <= 1/32",
      interval_le(I::c(36) * s + I::c(45) * e, I::c(1, 32)));
  {
    Tri lo = interval_gt(e, I::c(0));
    Tri hi = interval_lt(e, I::c(16, 100));
    Tri both = (lo == Tri::yes && hi == Tri::yes) ? Tri::yes
               : (lo == Tri::no || hi == Tri::no) ? Tri::no
                                                  : Tri::unknown;
    add(5, "0 < e < 16/100", both);
  }
  add(6, "1 - 3*s > 1/2", interval_gt(I::c(1) - I::c(3) * s, I::c(1, 2)));
  add(7, "1 + s < 3*d/4", interval_lt(I::c(1) + s, I::c(3, 4) * d));
  add(8, "4*(1-(3/2)*s)*(1-s) >= 3",
      interval_ge(I::c(4) * (I::c(1) - I::c(3, 2) * s) * (I::c(1) - s), I::c(3)));
  add(9, "49*(1-e)/100 >= 12/25",
      interval_ge(I::c(49, 100) * (I::c(1) - e), I::c(12, 25)));
  guarded(10, "(2-10*s)*(6-9*s)/(4-10*s) >= 149/50", [&] {
    return interval_ge((I::c(2) - I::c(10) * s) * (I::c(6) - I::c(9) * s) /
                           (I::c(4) - I::c(10) * s),
                       I::c(149, 50));
  });
  {
    RatInterval a = I::c(2) - I::c(10) * s;
    RatInterval b = I::c(6) - I::c(9) * s;
    RatInterval c3 = I::c(4) - I::c(10) * s;
    Tri m1 = interval_le(a, b);
    Tri m2 = interval_le(a, c3);
    Tri pos = interval_gt(a, I::c(0));
    Tri all = (m1 == Tri::yes && m2 == Tri::yes && pos == Tri::yes) ? Tri::yes
              : (m1 == Tri::no || m2 == Tri::no || pos == Tri::no)  ? Tri::no
                                                                    : Tri::unknown;
    add(11, "min{2-10*s, 6-9*s, 4-10*s} = 2-10*s > 0", all);
  }
  return out;
}

}  // namespace

ConstantsReport verify_constants(const Rational& eps, const Rational& delta, int d) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  if (delta <= 0) throw std::invalid_argument("delta must be positive");
  if (d < 2) throw std::invalid_argument("claw parameter must be >= 2");

  ConstantsReport rep;
  rep.eps = eps;
  rep.delta = delta;
  rep.d = d;
  rep.eps_delta = eps * delta;
  rep.guarantee_shift = rep.eps_delta / 2;
  rep.approximation_factor = (Rational(d) - rep.eps_delta) / 2;

  IntervalEnv env;
  env.e = RatInterval(eps);
  env.delta = RatInterval(delta);
  env.d = RatInterval(Rational(d));

  if (auto root = sqrt_exact(eps)) {
    rep.mode = ConstantsMode::exact;
    rep.sqrt_eps = *root;
    env.s = RatInterval(*root);
    rep.checks = evaluate_checks(env);
  } else {
    rep.mode = ConstantsMode::interval;
    for (unsigned digits : {16u, 32u, 64u, 128u}) {
      env.s = sqrt_interval(eps, digits);
      rep.checks = evaluate_checks(env);
      rep.digits = digits;
      bool settled = std::all_of(rep.checks.begin(), rep.checks.end(),
                                 [](const auto& c) { return c.holds != Tri::unknown; });
      if (settled) break;
    }
  }
  rep.all_hold = std::all_of(rep.checks.begin(), rep.checks.end(),
                             [](const auto& c) { return c.holds == Tri::yes; });
  return rep;
}

}  // namespace clawmis
